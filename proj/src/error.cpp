#include "hyper/error.hpp"

namespace hyper {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::LevelOverflow: return "LevelOverflow";
    case Errc::BondClash: return "BondClash";
    case Errc::AmbiguousBond: return "AmbiguousBond";
    case Errc::EmptyValue: return "EmptyValue";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::NotOpen: return "NotOpen";
    case Errc::NotNested: return "NotNested";
    case Errc::UnknownWord: return "UnknownWord";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::NotContained: return "NotContained";
    case Errc::MissingValue: return "MissingValue";
    case Errc::AxiomFailure: return "AxiomFailure";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BadLevel: return "BadLevel";
    case Errc::BadCut: return "BadCut";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::ZeroState: return "ZeroState";
    case Errc::ObsRejection: return "ObsRejection";
    case Errc::BadTree: return "BadTree";
    case Errc::NoProvenance: return "NoProvenance";
    case Errc::BadArity: return "BadArity";
    case Errc::MissingLeaf: return "MissingLeaf";
    case Errc::UnknownLeaf: return "UnknownLeaf";
    case Errc::NoTop: return "NoTop";
    case Errc::UnvalidatedSource: return "UnvalidatedSource";
    case Errc::NotGlobalized: return "NotGlobalized";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::GlueInconsistent: return "GlueInconsistent";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace hyper
