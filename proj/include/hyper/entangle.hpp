#pragma once

// Higher entanglement over finite-dimensional tensor products: product
// detection by rank-1 matricization, linear-combination bonds with
// provenance, order classification against a partition tree, and bond
// dissolution.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyper/linalg.hpp"

namespace hyper {

inline constexpr double kRankRatioTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kReconstructionTolerance = 1e-9;

struct BondRecord;

/// Unit-norm amplitude vector over factors of dimension >= 2, row-major in
/// the factor indices. The first amplitude of modulus > 1e-12 is real and
/// positive. An empty dims list is the scalar state (1).
class TensorState {
 public:
  /// Normalizes and fixes the phase. ZeroState for (near) zero vectors,
  /// DimMismatch if amps does not match dims, InvalidArgument for a factor
  /// of dimension < 2.
  static TensorState make(std::vector<std::size_t> dims, std::vector<cplx> amps);
  /// |digits> over the given dims.
  static TensorState basis(std::vector<std::size_t> dims, const std::vector<std::size_t>& digits);
  static TensorState scalar() { return make({}, {1.0}); }

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<cplx>& amps() const { return amps_; }
  std::size_t factor_count() const { return dims_.size(); }
  const std::shared_ptr<const BondRecord>& provenance() const { return provenance_; }

  /// Same dims and ||a - b||_2 < tol. Provenance is ignored.
  bool approx_equal(const TensorState& other, double tol = kReconstructionTolerance) const;

  TensorState with_provenance(std::shared_ptr<const BondRecord> record) const;

  /// Exact comparison of dims and amplitudes; provenance is ignored.
  bool operator==(const TensorState& other) const {
    return dims_ == other.dims_ && amps_ == other.amps_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<cplx> amps_;
  std::shared_ptr<const BondRecord> provenance_;
};

/// How a state was produced by bond_k: amps = scale * sum_j coefficients[j]
/// (x)_i rows[j][i].
struct BondRecord {
  std::size_t level = 1;
  std::vector<cplx> coefficients;
  std::vector<std::vector<TensorState>> rows;
  cplx scale = 1.0;
};

/// Unit norm within kNormTolerance and the phase convention holds.
bool is_canonical(const TensorState& s);

/// Kronecker product of the list; EmptyValue for an empty list.
TensorState tensor_product(std::span<const TensorState> states);

/// Rows indexed by the factors in `left` (ascending), columns by the rest.
CMatrix matricize(const TensorState& s, std::span<const std::size_t> left);

struct ProductTest {
  bool product = false;
  /// sigma_2 / sigma_1 of the matricization (0 when there is one column or row).
  double ratio = 0.0;
  /// Present when product: the left-block and right-block factors.
  std::optional<std::pair<TensorState, TensorState>> factors;
};

/// Rank-1 test of the cut {left} | {rest}, factor indices 0-based. BadCut
/// if either side is empty or an index is out of range or repeated.
ProductTest is_product(const TensorState& s, std::span<const std::size_t> left);

/// Named acceptance predicates applied to bond_k results. A predicate gets
/// the result and the number of factors contributed by each row position,
/// and returns true when the result is admitted.
class ObsRegistry {
 public:
  using Predicate = std::function<bool(const TensorState&, std::span<const std::size_t>)>;

  ObsRegistry& add(std::string name, Predicate predicate);
  /// Name of the first predicate that rejects, if any.
  std::optional<std::string> first_rejection(const TensorState& s,
                                             std::span<const std::size_t> blocks) const;

 private:
  std::vector<std::pair<std::string, Predicate>> predicates_;
};

/// Registry holding only "not-pure": rejects results that factor across the
/// row positions.
const ObsRegistry& default_obs();

/// sum_j alpha_j (x)_i rows[j][i], normalized, with provenance. Throws
/// BadLevel (level 0), DimMismatch, ZeroState and ObsRejection.
TensorState bond_k(std::size_t level, const std::vector<std::vector<TensorState>>& rows,
                   const std::vector<cplx>& coefficients, const ObsRegistry& obs = default_obs());

/// Rooted tree over factor indices 1..m; each internal node groups a
/// contiguous run of leaves.
class PartitionTree {
 public:
  static PartitionTree leaf(std::size_t index);
  static PartitionTree group(std::vector<PartitionTree> children);
  /// Two-level tree from blocks of leaf indices, e.g. {{1,2},{3,4}}.
  static PartitionTree blocks(const std::vector<std::vector<std::size_t>>& groups);

  bool is_leaf() const { return children_.empty(); }
  std::size_t leaf_index() const { return leaf_; }
  const std::vector<PartitionTree>& children() const { return children_; }
  std::size_t height() const;
  std::size_t first_leaf() const;
  std::size_t leaf_count() const;
  /// Nested-array form, e.g. "[[1,2],[3,4]]".
  std::string to_string() const;

  /// BadTree unless the leaves read 1..factor_count left to right and no
  /// internal node is empty.
  void check(std::size_t factor_count) const;

 private:
  std::size_t leaf_ = 0;
  std::vector<PartitionTree> children_;
};

struct OrderResult {
  std::size_t order = 0;
  /// Node where factorization first failed, in PartitionTree::to_string form.
  std::optional<std::string> witness_node;
  /// Factors across the root's children when the root factorizes.
  std::vector<TensorState> factors;
};

/// 0 for a full product; otherwise the height of the highest node whose
/// children do not factorize.
OrderResult entanglement_order(const TensorState& s, const PartitionTree& tree);

struct LeveledState {
  TensorState state;
  /// Provenance level of the constituent itself, if it was bonded.
  std::optional<std::size_t> level;
};

struct Dissolution {
  std::size_t level = 1;
  std::vector<cplx> coefficients;
  std::vector<std::vector<TensorState>> rows;

  std::vector<LeveledState> flatten() const;
};

/// Stored constituents of a bonded state, after re-checking that they
/// reconstruct it. NoProvenance for states not produced by bond_k.
Dissolution dissolve(const TensorState& s);

/// "ghz" or "w" on n qubits. BadArity for n < 2, InvalidArgument for an
/// unknown name.
TensorState make_named(std::string_view name, std::size_t n);

}  // namespace hyper
