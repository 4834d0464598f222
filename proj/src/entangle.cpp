#include "hyper/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyper/error.hpp"

namespace hyper {

namespace {

std::size_t product_of(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

/// Scales v to unit norm with the phase convention; returns the factor used.
cplx canonicalize(std::vector<cplx>& v) {
  const double n = norm2(v);
  if (n < kNormTolerance) throw Error(Errc::ZeroState, "state vector vanishes");
  cplx factor = 1.0 / n;
  for (auto& x : v) x *= factor;
  auto lead = std::find_if(v.begin(), v.end(), [](const cplx& x) { return std::abs(x) > kNormTolerance; });
  if (lead != v.end()) {
    const cplx phase = std::conj(*lead) / std::abs(*lead);
    for (auto& x : v) x *= phase;
    *lead = cplx(std::abs(*lead), 0.0);
    factor *= phase;
  }
  return factor;
}

std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b) {
  std::vector<cplx> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

}  // namespace

TensorState TensorState::make(std::vector<std::size_t> dims, std::vector<cplx> amps) {
  for (auto d : dims)
    if (d < 2) throw Error(Errc::InvalidArgument, "factor dimension must be at least 2");
  if (amps.size() != product_of(dims))
    throw Error(Errc::DimMismatch, "amplitude count does not match the factor dimensions");
  canonicalize(amps);
  TensorState s;
  s.dims_ = std::move(dims);
  s.amps_ = std::move(amps);
  return s;
}

TensorState TensorState::basis(std::vector<std::size_t> dims, const std::vector<std::size_t>& digits) {
  if (digits.size() != dims.size()) throw Error(Errc::DimMismatch, "one digit per factor required");
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (digits[i] >= dims[i]) throw Error(Errc::IndexOutOfRange, "basis digit out of range");
    index = index * dims[i] + digits[i];
  }
  std::vector<cplx> amps(product_of(dims));
  amps.at(index) = 1.0;
  return make(std::move(dims), std::move(amps));
}

bool TensorState::approx_equal(const TensorState& other, double tol) const {
  if (dims_ != other.dims_) return false;
  double s = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) s += std::norm(amps_[i] - other.amps_[i]);
  return std::sqrt(s) < tol;
}

TensorState TensorState::with_provenance(std::shared_ptr<const BondRecord> record) const {
  TensorState s = *this;
  s.provenance_ = std::move(record);
  return s;
}

bool is_canonical(const TensorState& s) {
  if (std::abs(norm2(s.amps()) - 1.0) > kNormTolerance) return false;
  for (const auto& x : s.amps()) {
    if (std::abs(x) > kNormTolerance) return x.imag() == 0.0 && x.real() > 0.0;
  }
  return false;
}

TensorState tensor_product(std::span<const TensorState> states) {
  if (states.empty()) throw Error(Errc::EmptyValue, "tensor product of an empty list");
  std::vector<std::size_t> dims;
  std::vector<cplx> amps{1.0};
  for (const auto& s : states) {
    dims.insert(dims.end(), s.dims().begin(), s.dims().end());
    amps = kron(amps, s.amps());
  }
  return TensorState::make(std::move(dims), std::move(amps));
}

namespace {

std::vector<std::size_t> complement(std::size_t m, std::span<const std::size_t> left) {
  std::vector<bool> in_left(m, false);
  for (auto i : left) {
    if (i >= m) throw Error(Errc::BadCut, "cut index " + std::to_string(i) + " out of range");
    if (in_left[i]) throw Error(Errc::BadCut, "cut index " + std::to_string(i) + " repeated");
    in_left[i] = true;
  }
  std::vector<std::size_t> right;
  for (std::size_t i = 0; i < m; ++i)
    if (!in_left[i]) right.push_back(i);
  if (left.empty() || right.empty()) throw Error(Errc::BadCut, "both sides of a cut must be non-empty");
  return right;
}

std::vector<std::size_t> pick(const std::vector<std::size_t>& dims, std::span<const std::size_t> idx) {
  std::vector<std::size_t> out;
  for (auto i : idx) out.push_back(dims[i]);
  return out;
}

}  // namespace

CMatrix matricize(const TensorState& s, std::span<const std::size_t> left_in) {
  std::vector<std::size_t> left(left_in.begin(), left_in.end());
  std::sort(left.begin(), left.end());
  const auto right = complement(s.factor_count(), left);
  const auto& dims = s.dims();
  const std::size_t m = dims.size();
  CMatrix mat(product_of(pick(dims, left)), product_of(pick(dims, right)));

  std::vector<std::size_t> digits(m, 0);
  for (std::size_t flat = 0; flat < s.amps().size(); ++flat) {
    std::size_t row = 0, col = 0;
    for (auto i : left) row = row * dims[i] + digits[i];
    for (auto i : right) col = col * dims[i] + digits[i];
    mat(row, col) = s.amps()[flat];
    for (std::size_t i = m; i-- > 0;) {
      if (++digits[i] < dims[i]) break;
      digits[i] = 0;
    }
  }
  return mat;
}

ProductTest is_product(const TensorState& s, std::span<const std::size_t> left_in) {
  std::vector<std::size_t> left(left_in.begin(), left_in.end());
  std::sort(left.begin(), left.end());
  const auto right = complement(s.factor_count(), left);
  const CMatrix mat = matricize(s, left);
  const Svd d = svd(mat);

  ProductTest out;
  out.ratio = d.singular_values.size() > 1 ? d.singular_values[1] / d.singular_values[0] : 0.0;
  out.product = out.ratio < kRankRatioTolerance;
  if (!out.product) return out;

  std::vector<cplx> l(mat.rows()), r(mat.cols());
  for (std::size_t i = 0; i < mat.rows(); ++i) l[i] = d.u(i, 0);
  for (std::size_t j = 0; j < mat.cols(); ++j) r[j] = d.singular_values[0] * std::conj(d.v(j, 0));
  out.factors.emplace(TensorState::make(pick(s.dims(), left), std::move(l)),
                      TensorState::make(pick(s.dims(), right), std::move(r)));
  return out;
}

ObsRegistry& ObsRegistry::add(std::string name, Predicate predicate) {
  predicates_.emplace_back(std::move(name), std::move(predicate));
  return *this;
}

std::optional<std::string> ObsRegistry::first_rejection(const TensorState& s,
                                                        std::span<const std::size_t> blocks) const {
  for (const auto& [name, predicate] : predicates_) {
    if (!predicate(s, blocks)) return name;
  }
  return std::nullopt;
}

namespace {

/// True when s factors as a product of states on consecutive blocks of the
/// given factor counts.
bool factors_across(const TensorState& s, std::span<const std::size_t> blocks) {
  TensorState rest = s;
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
    std::vector<std::size_t> left(blocks[b]);
    std::iota(left.begin(), left.end(), 0);
    auto test = is_product(rest, left);
    if (!test.product) return false;
    rest = test.factors->second;
  }
  return true;
}

}  // namespace

const ObsRegistry& default_obs() {
  static const ObsRegistry registry = [] {
    ObsRegistry r;
    r.add("not-pure", [](const TensorState& s, std::span<const std::size_t> blocks) {
      return !factors_across(s, blocks);
    });
    return r;
  }();
  return registry;
}

TensorState bond_k(std::size_t level, const std::vector<std::vector<TensorState>>& rows,
                   const std::vector<cplx>& coefficients, const ObsRegistry& obs) {
  if (level == 0) throw Error(Errc::BadLevel, "bond level must be at least 1");
  if (rows.empty()) throw Error(Errc::InvalidArgument, "bond needs at least one row");
  if (coefficients.size() != rows.size())
    throw Error(Errc::DimMismatch, "one coefficient per row required");
  const auto& first = rows.front();
  if (first.empty()) throw Error(Errc::InvalidArgument, "bond rows must be non-empty");
  for (const auto& row : rows) {
    if (row.size() != first.size()) throw Error(Errc::DimMismatch, "rows differ in length");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].dims() != first[i].dims())
        throw Error(Errc::DimMismatch, "row position " + std::to_string(i) + " differs in dims");
    }
  }
  if (std::all_of(coefficients.begin(), coefficients.end(), [](const cplx& a) { return a == 0.0; }))
    throw Error(Errc::ZeroState, "all coefficients are zero");

  std::vector<std::size_t> dims, blocks;
  for (const auto& q : first) {
    dims.insert(dims.end(), q.dims().begin(), q.dims().end());
    blocks.push_back(q.factor_count());
  }
  std::vector<cplx> sum(product_of(dims), 0.0);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    std::vector<cplx> term{1.0};
    for (const auto& q : rows[j]) term = kron(term, q.amps());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += coefficients[j] * term[k];
  }
  const cplx scale = canonicalize(sum);

  auto record = std::make_shared<BondRecord>();
  record->level = level;
  record->coefficients = coefficients;
  record->rows = rows;
  record->scale = scale;
  TensorState result = TensorState::make(std::move(dims), std::move(sum)).with_provenance(record);

  if (auto rejected = obs.first_rejection(result, blocks))
    throw Error(Errc::ObsRejection, "bond result rejected by Obs predicate " + *rejected);
  return result;
}

PartitionTree PartitionTree::leaf(std::size_t index) {
  PartitionTree t;
  t.leaf_ = index;
  return t;
}

PartitionTree PartitionTree::group(std::vector<PartitionTree> children) {
  if (children.empty()) throw Error(Errc::BadTree, "internal node without children");
  PartitionTree t;
  t.children_ = std::move(children);
  return t;
}

PartitionTree PartitionTree::blocks(const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<PartitionTree> nodes;
  for (const auto& g : groups) {
    std::vector<PartitionTree> leaves;
    for (auto i : g) leaves.push_back(leaf(i));
    nodes.push_back(group(std::move(leaves)));
  }
  return group(std::move(nodes));
}

std::size_t PartitionTree::height() const {
  std::size_t h = 0;
  for (const auto& c : children_) h = std::max(h, c.height() + 1);
  return h;
}

std::size_t PartitionTree::first_leaf() const {
  return is_leaf() ? leaf_ : children_.front().first_leaf();
}

std::size_t PartitionTree::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

std::string PartitionTree::to_string() const {
  if (is_leaf()) return std::to_string(leaf_);
  std::string out = "[";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) out += ',';
    out += children_[i].to_string();
  }
  return out + "]";
}

void PartitionTree::check(std::size_t factor_count) const {
  std::size_t expected = 1;
  std::function<void(const PartitionTree&)> walk = [&](const PartitionTree& t) {
    if (t.is_leaf()) {
      if (t.leaf_ != expected)
        throw Error(Errc::BadTree, "expected leaf " + std::to_string(expected) + ", found " +
                                       std::to_string(t.leaf_));
      ++expected;
      return;
    }
    for (const auto& c : t.children_) walk(c);
  };
  walk(*this);
  if (expected - 1 != factor_count)
    throw Error(Errc::BadTree, "tree has " + std::to_string(expected - 1) + " leaves for " +
                                   std::to_string(factor_count) + " factors");
}

namespace {

OrderResult order_at(const TensorState& s, const PartitionTree& node) {
  if (node.is_leaf()) return {};
  OrderResult out;
  const auto& children = node.children();
  std::vector<TensorState> factors;
  TensorState rest = s;
  for (std::size_t c = 0; c + 1 < children.size(); ++c) {
    std::vector<std::size_t> left(children[c].leaf_count());
    std::iota(left.begin(), left.end(), 0);
    auto test = is_product(rest, left);
    if (!test.product) {
      out.order = node.height();
      out.witness_node = node.to_string();
      return out;
    }
    factors.push_back(test.factors->first);
    rest = test.factors->second;
  }
  factors.push_back(rest);

  for (std::size_t c = 0; c < children.size(); ++c) {
    OrderResult sub = order_at(factors[c], children[c]);
    if (sub.order > out.order) {
      out.order = sub.order;
      out.witness_node = sub.witness_node;
    }
  }
  out.factors = std::move(factors);
  return out;
}

}  // namespace

OrderResult entanglement_order(const TensorState& s, const PartitionTree& tree) {
  tree.check(s.factor_count());
  return order_at(s, tree);
}

std::vector<LeveledState> Dissolution::flatten() const {
  std::vector<LeveledState> out;
  for (const auto& row : rows) {
    for (const auto& q : row) {
      std::optional<std::size_t> lvl;
      if (q.provenance()) lvl = q.provenance()->level;
      out.push_back({q, lvl});
    }
  }
  return out;
}

Dissolution dissolve(const TensorState& s) {
  const auto& record = s.provenance();
  if (!record) throw Error(Errc::NoProvenance, "state was not produced by a bond");

  std::vector<cplx> sum(s.amps().size(), 0.0);
  for (std::size_t j = 0; j < record->rows.size(); ++j) {
    std::vector<cplx> term{1.0};
    for (const auto& q : record->rows[j]) term = kron(term, q.amps());
    if (term.size() != sum.size()) throw Error(Errc::DimMismatch, "provenance rows do not match the state");
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += record->scale * record->coefficients[j] * term[k];
  }
  double err = 0.0;
  for (std::size_t k = 0; k < sum.size(); ++k) err += std::norm(sum[k] - s.amps()[k]);
  if (std::sqrt(err) >= kReconstructionTolerance)
    throw Error(Errc::DimMismatch, "provenance does not reconstruct the state");

  return {record->level, record->coefficients, record->rows};
}

TensorState make_named(std::string_view name, std::size_t n) {
  if (n < 2) throw Error(Errc::BadArity, "named states need at least 2 qubits");
  const std::vector<std::size_t> dims(n, 2);
  std::vector<cplx> amps(std::size_t{1} << n, 0.0);
  if (name == "ghz") {
    amps.front() = 1.0;
    amps.back() = 1.0;
  } else if (name == "w") {
    for (std::size_t k = 0; k < n; ++k) amps[std::size_t{1} << k] = 1.0;
  } else {
    throw Error(Errc::InvalidArgument, "unknown named state " + std::string(name));
  }
  return TensorState::make(dims, std::move(amps));
}

}  // namespace hyper
