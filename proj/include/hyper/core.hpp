#pragma once

// Leveled bond structures: elements live on levels 0..depth, and every
// element of level i+1 that is a bond binds a property-tagged set of
// level-i elements.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyper {

struct ElementId {
  std::size_t level = 0;
  std::string key;

  auto operator<=>(const ElementId&) const = default;
};

std::string to_string(const ElementId& id);

struct Property {
  std::string tag;
  std::optional<std::string> payload;

  auto operator<=>(const Property&) const = default;
};

/// A property-tagged set of same-level elements. Use make_support() to get
/// the sorted, deduplicated form.
struct Support {
  std::vector<ElementId> members;
  Property property;

  std::size_t level() const { return members.empty() ? 0 : members.front().level; }
  auto operator<=>(const Support&) const = default;
};

Support make_support(std::vector<ElementId> members, Property property);
Support make_support(std::size_t level, std::span<const std::string> keys,
                     Property property);

struct Bond {
  ElementId id;
  Support support;
  bool is_identity = false;

  auto operator<=>(const Bond&) const = default;
};

using ObsMap = std::map<ElementId, std::set<Property>>;

class Hyperstructure {
 public:
  Hyperstructure() : levels_(1) {}
  explicit Hyperstructure(std::size_t depth) : levels_(depth + 1) {}

  /// Assembles a structure without checking any law. validate() reports
  /// what is wrong with it.
  static Hyperstructure from_parts(std::size_t depth,
                                   std::vector<std::set<std::string>> levels,
                                   std::vector<Bond> bonds, ObsMap obs = {});

  std::size_t depth() const { return levels_.size() - 1; }
  const std::set<std::string>& level(std::size_t i) const { return levels_.at(i); }
  const std::vector<std::set<std::string>>& levels() const { return levels_; }
  /// Sorted by (id, support, identity flag).
  const std::vector<Bond>& bonds() const { return bonds_; }
  const ObsMap& obs() const { return obs_; }

  bool contains(const ElementId& id) const;
  bool is_bond(const ElementId& id) const;
  std::vector<const Bond*> bonds_with_id(const ElementId& id) const;
  std::size_t element_count() const;

  Hyperstructure with_depth(std::size_t depth) const;
  Hyperstructure with_element(const ElementId& id) const;
  Hyperstructure with_elements(std::size_t level, std::span<const std::string> keys) const;
  Hyperstructure with_property(const ElementId& id, Property property) const;

  Hyperstructure add_bond(const Support& support, std::string_view id_key,
                          bool is_identity = false) const;
  /// Identity bond I(x) at level x.level + 1 with key "I(<key>)".
  Hyperstructure add_identity(const ElementId& x, Property property) const;

  const Support& boundary(const ElementId& bond_id) const;

  bool operator==(const Hyperstructure&) const = default;

 private:
  std::vector<std::set<std::string>> levels_;
  std::vector<Bond> bonds_;
  ObsMap obs_;
};

inline Hyperstructure add_bond(const Hyperstructure& h, const Support& support,
                               std::string_view id_key, bool is_identity = false) {
  return h.add_bond(support, id_key, is_identity);
}

inline const Support& boundary(const Hyperstructure& h, const ElementId& bond_id) {
  return h.boundary(bond_id);
}

enum class ViolationKind {
  EmptyKey,
  LevelOverflow,
  LevelMismatch,
  EmptySupport,
  MixedSupportLevels,
  MissingBondId,
  MissingMember,
  DisjointnessViolation,
  IdentityArityViolation,
  ObsOnUnknownElement,
};

std::string_view violation_name(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  ElementId where;
  std::string detail;

  auto operator<=>(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

/// Every law violation in h, sorted by (level, key, kind).
ValidationReport validate(const Hyperstructure& h);

using Hyperoperation = std::map<std::pair<std::string, std::string>, std::set<std::string>>;

/// Depth-1 structure of a hyperoperation x*y ⊆ X: one bond "x,y->z" over
/// ({x,y}, "x,y") for every z in x*y.
Hyperstructure from_hyperoperation(std::span<const std::string> carrier,
                                   const Hyperoperation& star);

/// Induces a structure on `carrier` through phi: carrier -> level 0 of h.
/// A level-1 bond over S is carried over with support phi^{-1}(S) whenever
/// S lies inside the image of phi; higher levels are copied.
Hyperstructure push_forward(const Hyperstructure& h, std::span<const std::string> carrier,
                            const std::map<std::string, std::string>& phi);

/// Levelwise disjoint union with keys prefixed "L:" and "R:". The shallower
/// operand is padded with empty levels. With add_top, one new bond "top"
/// binds every element of the (padded) top level.
Hyperstructure fuse(const Hyperstructure& left, const Hyperstructure& right, bool add_top);

/// Applies `rename` to every key on every level (support members and obs
/// included). `rename` must be injective on each level.
Hyperstructure relabel(const Hyperstructure& h,
                       const std::function<std::string(const ElementId&)>& rename);

/// Swaps the "L:" and "R:" key prefixes produced by fuse().
Hyperstructure swap_fusion_sides(const Hyperstructure& h);

/// Relabeling-invariant summary: per level, element count, bond count and the
/// sorted multiset of support sizes.
struct LevelSignature {
  std::size_t elements = 0;
  std::size_t bonds = 0;
  std::vector<std::size_t> support_sizes;

  auto operator<=>(const LevelSignature&) const = default;
};

std::vector<LevelSignature> structural_signature(const Hyperstructure& h);

std::string export_dot(const Hyperstructure& h);

}  // namespace hyper
