#pragma once

// Finite commutative monoids used as recipients of assignments.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyper {

/// Commutative monoid given by an explicit operation table over named
/// elements. make() verifies associativity, commutativity and the unit
/// exhaustively and throws AxiomFailure otherwise.
class TableMonoid {
 public:
  using value_type = std::size_t;

  static TableMonoid make(std::vector<std::string> elements, std::size_t unit,
                          std::vector<std::vector<std::size_t>> table);
  /// Z_n under multiplication mod n, elements named "0".."n-1".
  static TableMonoid multiplicative_mod(std::size_t n);
  /// Z_n under addition mod n.
  static TableMonoid additive_mod(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  value_type unit() const { return unit_; }
  value_type combine(value_type a, value_type b) const { return table_[a][b]; }
  bool equal(value_type a, value_type b) const { return a == b; }

  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::string& name(value_type v) const { return elements_.at(v); }
  /// Index of the element called `name`; UnknownElement if absent.
  value_type parse(std::string_view name) const;

 private:
  std::vector<std::string> elements_;
  std::size_t unit_ = 0;
  std::vector<std::vector<std::size_t>> table_;
};

using Multiset = std::map<std::string, std::size_t>;

/// Multisets of strings. Sum adds multiplicities (the free commutative
/// monoid); Union takes the larger multiplicity.
class MultisetMonoid {
 public:
  using value_type = Multiset;
  enum class Mode { Sum, Union };

  explicit MultisetMonoid(Mode mode = Mode::Sum) : mode_(mode) {}

  Mode mode() const { return mode_; }
  value_type unit() const { return {}; }
  value_type combine(const value_type& a, const value_type& b) const;
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

 private:
  Mode mode_;
};

/// Canonical text form "{a,a,b}".
std::string render(const Multiset& m);

template <class Monoid>
typename Monoid::value_type fold(const Monoid& monoid,
                                 std::span<const typename Monoid::value_type> values) {
  auto acc = monoid.unit();
  for (const auto& v : values) acc = monoid.combine(acc, v);
  return acc;
}

}  // namespace hyper
