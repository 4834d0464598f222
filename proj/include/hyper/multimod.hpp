#pragma once

// Multimodules over finite rings: a finite module acted on by a family of
// rings through a finite set of action parameters, with exhaustive axiom
// checks and assembly into a leveled structure.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/core.hpp"
#include "hyper/error.hpp"

namespace hyper {

using OpTable = std::vector<std::vector<std::size_t>>;

class FiniteRing {
 public:
  /// Verifies the ring axioms exhaustively; AxiomFailure otherwise.
  static FiniteRing make(std::vector<std::string> elements, OpTable add, OpTable mul,
                         std::size_t zero, std::size_t one);
  static FiniteRing integers_mod(std::size_t n);
  /// 2x2 matrices over Z_p, elements named "[a,b;c,d]".
  static FiniteRing matrices_2x2_mod(std::size_t p);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const OpTable& add_table() const { return add_; }
  const OpTable& mul_table() const { return mul_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a][b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }

  bool operator==(const FiniteRing&) const = default;

 private:
  std::vector<std::string> elements_;
  OpTable add_;
  OpTable mul_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
};

class FiniteModule {
 public:
  /// Verifies the abelian group axioms exhaustively; AxiomFailure otherwise.
  static FiniteModule make(std::vector<std::string> elements, OpTable add, std::size_t zero);
  static FiniteModule additive_group(const FiniteRing& ring);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const OpTable& add_table() const { return add_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a][b]; }
  std::size_t zero() const { return zero_; }

  bool operator==(const FiniteModule&) const = default;

 private:
  std::vector<std::string> elements_;
  OpTable add_;
  std::size_t zero_ = 0;
};

/// act[w][t][r][m]: the module element obtained when element r of ring t
/// acts on m under parameter w.
using ActionTable = std::vector<std::vector<std::vector<std::vector<std::size_t>>>>;

class ActionSystem {
 public:
  /// Throws InvalidArgument unless the table is total over
  /// params x rings x ring elements x module elements and lands in the module.
  static ActionSystem make(std::vector<FiniteRing> rings, std::size_t params, FiniteModule module,
                           ActionTable table, bool commuting);

  const std::vector<FiniteRing>& rings() const { return rings_; }
  std::size_t params() const { return params_; }
  const FiniteModule& module() const { return module_; }
  const ActionTable& table() const { return table_; }
  bool commuting() const { return commuting_; }

  /// Copy with one table cell replaced. No axiom is re-checked.
  ActionSystem with_cell(std::size_t w, std::size_t t, std::size_t r, std::size_t m,
                         std::size_t value) const;

 private:
  std::vector<FiniteRing> rings_;
  std::size_t params_ = 0;
  FiniteModule module_;
  ActionTable table_;
  bool commuting_ = false;
};

std::size_t act(const ActionSystem& a, std::size_t w, std::size_t t, std::size_t r, std::size_t m);

/// A ring acting on its own additive group from the left (t = 0) and from
/// the right (t = 1).
ActionSystem regular_bimodule(const FiniteRing& ring, bool commuting = true);
/// A ring acting on its own additive group from the left, twice.
ActionSystem double_left_module(const FiniteRing& ring, bool commuting = true);

enum class AxiomKind {
  Unit,            // 1.m = m
  Additivity,      // r.(m + m') = r.m + r.m'
  RingAdditivity,  // (r + s).m = r.m + s.m
  Associativity,   // (rs).m = r.(s.m)
  Commutativity,   // r_t.(r'_t'.m) = r'_t'.(r_t.m)
};

std::string_view axiom_name(AxiomKind kind) noexcept;

/// Witness of one failed axiom. Fields not used by the axiom stay empty.
struct AxiomViolation {
  AxiomKind kind;
  std::size_t w = 0;
  std::size_t t = 0;
  std::size_t r = 0;
  std::optional<std::size_t> s;
  std::size_t m = 0;
  std::optional<std::size_t> m2;
  std::optional<std::size_t> w2;
  std::optional<std::size_t> t2;
  std::size_t lhs = 0;
  std::size_t rhs = 0;

  std::string describe(const ActionSystem& a) const;
  bool operator==(const AxiomViolation&) const = default;
};

using AxiomReport = std::vector<AxiomViolation>;

inline constexpr std::size_t kMaxReportedViolations = 10;

/// Exhaustive check of the unital module axioms for every parameter and
/// ring, plus pairwise commutativity of different family members when the
/// system asks for it. At most kMaxReportedViolations witnesses.
AxiomReport verify_module_axioms(const ActionSystem& a);

/// Applies one element of every ring in ascending t order.
std::size_t family_act(const ActionSystem& a, std::size_t w, const std::vector<std::size_t>& tuple,
                       std::size_t m);

class AxiomFailureError : public Error {
 public:
  AxiomFailureError(const std::string& what, AxiomReport report)
      : Error(Errc::AxiomFailure, what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

struct NamedRing {
  std::string name;
  FiniteRing ring;
};

/// An object of level k >= 1: a module acted on by the named objects of
/// level k-1, in ring order.
struct LevelSystem {
  std::string name;
  std::vector<std::string> acting;
  ActionSystem system;
};

struct MultimoduleLevels {
  std::vector<NamedRing> base;
  std::vector<std::vector<LevelSystem>> upper;
};

/// Level 0 holds the base rings, level k the systems of upper[k-1]; each
/// system is a bond over its acting family tagged "acts-on". An acting
/// object from level k-1 >= 1 must carry a ring whose additive group is that
/// system's module (BadLevel otherwise). Throws AxiomFailureError when a
/// system fails verification.
Hyperstructure build_multimodule_hyperstructure(const MultimoduleLevels& levels);

}  // namespace hyper
