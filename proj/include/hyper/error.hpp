#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyper {

enum class Errc {
  UnknownElement,
  LevelOverflow,
  BondClash,
  AmbiguousBond,
  EmptyValue,
  InvalidArgument,
  UnknownPoint,
  NotOpen,
  NotNested,
  UnknownWord,
  NotDisjoint,
  NotContained,
  MissingValue,
  AxiomFailure,
  IndexOutOfRange,
  BadLevel,
  BadCut,
  DimMismatch,
  ZeroState,
  ObsRejection,
  BadTree,
  NoProvenance,
  BadArity,
  MissingLeaf,
  UnknownLeaf,
  NoTop,
  UnvalidatedSource,
  NotGlobalized,
  LevelOutOfRange,
  GlueInconsistent,
  MalformedInput,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so the
/// CLI can report it by name.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace hyper
