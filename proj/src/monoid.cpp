#include "hyper/monoid.hpp"

#include <algorithm>

#include "hyper/error.hpp"

namespace hyper {

TableMonoid TableMonoid::make(std::vector<std::string> elements, std::size_t unit,
                              std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(Errc::AxiomFailure, "monoid has no elements");
  if (unit >= n) throw Error(Errc::AxiomFailure, "unit index out of range");
  if (table.size() != n) throw Error(Errc::AxiomFailure, "operation table has wrong row count");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(Errc::AxiomFailure, "operation table is not square");
    for (auto v : row)
      if (v >= n) throw Error(Errc::AxiomFailure, "operation table entry out of range");
  }
  auto fail = [&](const std::string& what) {
    throw Error(Errc::AxiomFailure, "monoid " + what);
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (table[unit][a] != a || table[a][unit] != a) fail("unit fails at " + elements[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a])
        fail("not commutative at (" + elements[a] + "," + elements[b] + ")");
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail("not associative at (" + elements[a] + "," + elements[b] + "," + elements[c] + ")");
      }
    }
  }
  {
    auto sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("has duplicate element names");
  }
  TableMonoid m;
  m.elements_ = std::move(elements);
  m.unit_ = unit;
  m.table_ = std::move(table);
  return m;
}

namespace {

std::vector<std::string> residue_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

TableMonoid TableMonoid::multiplicative_mod(std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "modulus must be at least 2");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a * b) % n;
  return make(residue_names(n), 1, std::move(table));
}

TableMonoid TableMonoid::additive_mod(std::size_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "modulus must be positive");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return make(residue_names(n), 0, std::move(table));
}

TableMonoid::value_type TableMonoid::parse(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end())
    throw Error(Errc::UnknownElement, "monoid has no element " + std::string(name));
  return static_cast<value_type>(it - elements_.begin());
}

MultisetMonoid::value_type MultisetMonoid::combine(const value_type& a,
                                                   const value_type& b) const {
  value_type out = a;
  for (const auto& [k, count] : b) {
    auto& slot = out[k];
    slot = mode_ == Mode::Sum ? slot + count : std::max(slot, count);
  }
  return out;
}

std::string render(const Multiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, count] : m) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!first) out += ',';
      out += k;
      first = false;
    }
  }
  return out + "}";
}

}  // namespace hyper
