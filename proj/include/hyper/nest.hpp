#pragma once

// Nested open sets of a finite topological space, organized so that each
// larger open set is a bond of the smaller ones nested inside it.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyper/core.hpp"
#include "hyper/error.hpp"

namespace hyper {

using PointSet = std::set<std::string>;

std::string render(const PointSet& s);

class FiniteTopology {
 public:
  /// Throws AxiomFailure unless the family contains the empty set and the
  /// whole space and is closed under pairwise union and intersection;
  /// UnknownPoint if an open mentions a point outside `points`.
  static FiniteTopology make(std::vector<std::string> points, std::vector<PointSet> opens);

  const PointSet& points() const { return points_; }
  const std::set<PointSet>& opens() const { return opens_; }
  bool is_open(const PointSet& s) const { return opens_.contains(s); }

 private:
  PointSet points_;
  std::set<PointSet> opens_;
};

/// True iff s is open; UnknownPoint if s is not a subset of the space.
bool check_openness(const FiniteTopology& t, const PointSet& s);

using NestWord = std::vector<int>;

/// "U()" for the empty word, "U(1,2)" otherwise.
std::string word_key(const NestWord& w);

class NestFamily {
 public:
  /// `bounds[j]` caps the index at position j+1; missing bounds are taken
  /// from the largest index used. Throws InvalidArgument for words longer
  /// than the depth, IndexOutOfRange for indices outside their bound,
  /// NotOpen and NotNested for assignments that are not monotone opens.
  static NestFamily make(const FiniteTopology& t, std::size_t depth,
                         std::map<NestWord, PointSet> words, std::vector<int> bounds = {});

  std::size_t depth() const { return depth_; }
  const std::map<NestWord, PointSet>& words() const { return words_; }
  const std::vector<int>& bounds() const { return bounds_; }
  const PointSet* find(const NestWord& w) const;

 private:
  std::size_t depth_ = 0;
  std::map<NestWord, PointSet> words_;
  std::vector<int> bounds_;
};

/// Level j holds the words of length depth - j. Every word with defined
/// one-letter extensions is a bond over them, tagged "open".
Hyperstructure build_nest(const FiniteTopology& t, const NestFamily& f);

/// All defined words obtained by inserting one index into `holed` at
/// 1-based `position`. UnknownWord when nothing fills the hole.
std::set<NestWord> nest_boundary(const NestFamily& f, const NestWord& holed, std::size_t position);

template <class Monoid>
struct MonoidAssignment {
  Monoid monoid;
  std::map<PointSet, typename Monoid::value_type> values;

  const typename Monoid::value_type& at(const PointSet& s) const {
    auto it = values.find(s);
    if (it == values.end()) throw Error(Errc::MissingValue, "no value for open " + render(s));
    return it->second;
  }
};

template <class Monoid>
struct PrefactorizationResult {
  bool commutes = false;
  typename Monoid::value_type routed;
  typename Monoid::value_type direct;
};

/// Checks the shape of a two-stage nesting and returns, for each inner
/// open, the index of the mid open containing it. Throws NotOpen,
/// NotDisjoint or NotContained.
std::vector<std::size_t> nesting_owners(const FiniteTopology& t, const std::vector<PointSet>& inner,
                                        const std::vector<PointSet>& mid, const PointSet& outer);

/// Each structure map of a disjoint family into V multiplies the product of
/// the family's values by F(V). The routed composite goes inner -> mid ->
/// outer, the direct one inner -> outer; both are evaluated from scratch and
/// compared.
template <class Monoid>
PrefactorizationResult<Monoid> check_prefactorization(const FiniteTopology& t,
                                                      const MonoidAssignment<Monoid>& a,
                                                      const std::vector<PointSet>& inner,
                                                      const std::vector<PointSet>& mid,
                                                      const PointSet& outer) {
  const auto owners = nesting_owners(t, inner, mid, outer);
  const Monoid& m = a.monoid;

  auto direct = m.unit();
  for (const auto& u : inner) direct = m.combine(direct, a.at(u));
  direct = m.combine(direct, a.at(outer));

  auto routed = m.unit();
  for (std::size_t i = 0; i < mid.size(); ++i) {
    auto into_mid = m.unit();
    for (std::size_t j = 0; j < inner.size(); ++j) {
      if (owners[j] == i) into_mid = m.combine(into_mid, a.at(inner[j]));
    }
    routed = m.combine(routed, m.combine(into_mid, a.at(mid[i])));
  }
  routed = m.combine(routed, a.at(outer));

  const bool commutes = m.equal(routed, direct);
  return {commutes, std::move(routed), std::move(direct)};
}

}  // namespace hyper
