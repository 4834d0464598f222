#pragma once

// Field theories over a leveled structure: leaf values in a recipient
// monoid are pushed up level by level, checked for gluing consistency and
// folded into one global value.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyper/core.hpp"
#include "hyper/entangle.hpp"
#include "hyper/monoid.hpp"

namespace hyper {

/// Tensor states under the Kronecker product, unit = the scalar state.
/// Not commutative: operands are always combined in canonical key order.
struct TensorMonoid {
  using value_type = TensorState;
  value_type unit() const { return TensorState::scalar(); }
  value_type combine(const value_type& a, const value_type& b) const;
  bool equal(const value_type& a, const value_type& b) const { return a.approx_equal(b); }
};

using Recipient = std::variant<TableMonoid, MultisetMonoid, TensorMonoid>;
using Value = std::variant<std::size_t, Multiset, TensorState>;

std::string_view recipient_kind(const Recipient& r);
Value unit(const Recipient& r);
Value combine(const Recipient& r, const Value& a, const Value& b);
bool equal(const Recipient& r, const Value& a, const Value& b);
std::string render(const Recipient& r, const Value& v);
/// InvalidArgument unless v is an element of r's carrier.
void check_value(const Recipient& r, const Value& v);

using LeafValues = std::map<std::string, Value>;
using LevelValues = std::map<std::string, Value>;

struct GlueIssue {
  enum class Kind {
    /// Support members share leaves and the routed value differs from the
    /// fold over the distinct leaves.
    Inconsistent,
    /// A non-bond element above level 0 has no value.
    Undefined,
  };
  Kind kind;
  ElementId where;
  std::string detail;
};

std::string_view glue_kind_name(GlueIssue::Kind kind) noexcept;

struct GlobalizeResult {
  /// levels[i] maps each level-i key with a value to that value.
  std::vector<LevelValues> levels;
  /// Present iff glue_report is empty.
  std::optional<Value> global;
  std::vector<GlueIssue> glue_report;
};

class Assignment {
 public:
  const Hyperstructure& source() const { return source_; }
  const Recipient& recipient() const { return recipient_; }
  const LeafValues& leaf_values() const { return leaf_values_; }
  /// Set on copies returned by globalized().
  const std::shared_ptr<const GlobalizeResult>& cache() const { return cache_; }

 private:
  friend Assignment assign(Hyperstructure, Recipient, LeafValues);
  friend Assignment globalized(const Assignment&);
  friend std::pair<Value, Value> tunnel(const Assignment&, const LeafValues&);

  Hyperstructure source_;
  Recipient recipient_;
  LeafValues leaf_values_;
  std::shared_ptr<const GlobalizeResult> cache_;
};

/// MissingLeaf if a level-0 key has no value, UnknownLeaf for values on keys
/// outside level 0, InvalidArgument for values outside the carrier.
Assignment assign(Hyperstructure h, Recipient r, LeafValues leaf_values);

/// Each bond takes the combine of its support members' values. With a seed,
/// bonds of a level and commutative folds are enumerated in a shuffled order.
/// Throws UnvalidatedSource if the source fails validate() and NoTop unless
/// the top level holds exactly one element.
GlobalizeResult globalize(const Assignment& a, std::optional<std::uint64_t> shuffle_seed = {});

/// Copy of a carrying the result of globalize(a).
Assignment globalized(const Assignment& a);

/// NotGlobalized without a cached result, LevelOutOfRange above the depth.
const LevelValues& level_values(const Assignment& a, std::size_t level);

/// (old global, new global) after replacing some leaf values. UnknownLeaf
/// for edits outside level 0, GlueInconsistent if either global is absent.
std::pair<Value, Value> tunnel(const Assignment& a, const LeafValues& edits);

}  // namespace hyper
