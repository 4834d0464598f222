#pragma once

// Random instance generators shared by the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hyper/core.hpp"
#include "hyper/nest.hpp"

namespace hyper::testing {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Built only through Hyperstructure's checked operations, so the result
/// must satisfy every law. At most `max_elements` elements in total.
inline Hyperstructure random_hyperstructure(std::mt19937_64& rng, std::size_t max_depth = 4,
                                            std::size_t max_elements = 200) {
  const std::size_t depth = uniform(rng, 0, max_depth);
  const std::size_t per_level = std::max<std::size_t>(1, max_elements / (depth + 1));
  Hyperstructure h(depth);
  std::size_t base = uniform(rng, 1, per_level);
  for (std::size_t k = 0; k < base; ++k) h = h.with_element({0, "x" + std::to_string(k)});

  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<std::string> below(h.level(level - 1).begin(), h.level(level - 1).end());
    const std::size_t count = uniform(rng, 0, per_level);
    for (std::size_t k = 0; k < count; ++k) {
      const std::string key = "b" + std::to_string(level) + "_" + std::to_string(k);
      const auto roll = uniform(rng, 0, 9);
      if (roll == 0 || below.empty()) {
        h = h.with_element({level, key});  // plain element, binds nothing
      } else if (roll == 1) {
        const auto& x = below[uniform(rng, 0, below.size() - 1)];
        h = h.add_identity({level - 1, x}, Property{"id", {}});
      } else {
        std::shuffle(below.begin(), below.end(), rng);
        const std::size_t arity = uniform(rng, 1, std::min<std::size_t>(below.size(), 5));
        std::vector<std::string> chosen(below.begin(), below.begin() + arity);
        Property p{"p" + std::to_string(uniform(rng, 0, 2)), {}};
        if (uniform(rng, 0, 1)) p.payload = "w" + std::to_string(k);
        h = h.add_bond(make_support(level - 1, chosen, p), key);
      }
    }
  }
  return h;
}

/// Topology generated by a few random subsets of `n` points, closed under
/// pairwise union and intersection.
inline FiniteTopology random_topology(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  std::set<PointSet> opens{PointSet{}, PointSet(points.begin(), points.end())};
  const std::size_t generators = uniform(rng, 1, 4);
  for (std::size_t g = 0; g < generators; ++g) {
    PointSet s;
    for (const auto& p : points)
      if (uniform(rng, 0, 1)) s.insert(p);
    opens.insert(s);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<PointSet> snapshot(opens.begin(), opens.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        PointSet u = a, i;
        u.insert(b.begin(), b.end());
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(i, i.end()));
        grew |= opens.insert(u).second;
        grew |= opens.insert(i).second;
      }
    }
  }
  return FiniteTopology::make(points, std::vector<PointSet>(opens.begin(), opens.end()));
}

/// U(w) is the whole space cut down by one random open per distinct letter
/// of w, so dropping any letter can only enlarge the set. Each word up to
/// `depth` letters over {1..letters} is kept with probability 3/4.
inline std::map<NestWord, PointSet> random_nest_words(std::mt19937_64& rng, const FiniteTopology& t,
                                                      std::size_t depth, int letters) {
  const std::vector<PointSet> opens(t.opens().begin(), t.opens().end());
  std::map<int, PointSet> cut;
  for (int c = 1; c <= letters; ++c) cut[c] = opens[uniform(rng, 0, opens.size() - 1)];

  std::map<NestWord, PointSet> words;
  std::vector<NestWord> frontier{{}};
  for (std::size_t len = 0; len <= depth; ++len) {
    std::vector<NestWord> next;
    for (const auto& w : frontier) {
      if (!w.empty() && uniform(rng, 0, 3) == 0) continue;
      PointSet s = t.points();
      for (int c : w) {
        PointSet kept;
        std::set_intersection(s.begin(), s.end(), cut[c].begin(), cut[c].end(),
                              std::inserter(kept, kept.end()));
        s = kept;
      }
      words[w] = s;
      if (len < depth) {
        for (int c = 1; c <= letters; ++c) {
          NestWord longer = w;
          longer.push_back(c);
          next.push_back(longer);
        }
      }
    }
    frontier = std::move(next);
  }
  return words;
}

/// An admissible two-stage nesting inside a discrete space of `n` points:
/// disjoint non-empty mid opens inside outer, each holding disjoint non-empty
/// inner opens.
struct Nesting {
  FiniteTopology topology;
  std::vector<PointSet> inner;
  std::vector<PointSet> mid;
  PointSet outer;
};

inline FiniteTopology discrete_topology(std::size_t n) {
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  std::vector<PointSet> opens;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    PointSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(points[i]);
    opens.push_back(s);
  }
  return FiniteTopology::make(points, opens);
}

inline Nesting random_nesting(std::mt19937_64& rng, std::size_t n = 6) {
  Nesting out{discrete_topology(n), {}, {}, {}};
  std::vector<std::string> points(out.topology.points().begin(), out.topology.points().end());
  std::shuffle(points.begin(), points.end(), rng);
  const std::size_t used = uniform(rng, 1, n);
  out.outer = PointSet(points.begin(), points.begin() + used);

  // Split a prefix of the outer points into mid blocks, and each mid block's
  // prefix into inner blocks.
  std::size_t pos = 0;
  const std::size_t mid_points = uniform(rng, 1, used);
  while (pos < mid_points) {
    const std::size_t len = uniform(rng, 1, mid_points - pos);
    std::vector<std::string> block(points.begin() + pos, points.begin() + pos + len);
    out.mid.emplace_back(block.begin(), block.end());
    std::size_t ipos = 0;
    const std::size_t inner_points = uniform(rng, 0, len);
    while (ipos < inner_points) {
      const std::size_t ilen = uniform(rng, 1, inner_points - ipos);
      out.inner.emplace_back(block.begin() + ipos, block.begin() + ipos + ilen);
      ipos += ilen;
    }
    pos += len;
  }
  return out;
}

/// Linear chain: leaves x0..x{k-1} under c1, and c_i binds c_{i-1} together
/// with a fresh leaf y_i lifted to level i-1 by identity bonds.
struct Chain {
  Hyperstructure h;
  std::vector<std::string> leaves;
};

inline Chain random_chain(std::mt19937_64& rng) {
  const std::size_t depth = uniform(rng, 1, 4);
  Chain c{Hyperstructure(depth), {}};
  const std::size_t base = uniform(rng, 1, 4);
  for (std::size_t k = 0; k < base; ++k) c.leaves.push_back("x" + std::to_string(k));
  c.h = c.h.with_elements(0, c.leaves).add_bond(make_support(0, c.leaves, Property{"chain", {}}), "c1");
  for (std::size_t i = 2; i <= depth; ++i) {
    const std::string pad = "y" + std::to_string(i);
    c.leaves.push_back(pad);
    c.h = c.h.with_element({0, pad});
    std::string below = pad;
    for (std::size_t l = 1; l <= i - 1; ++l) {
      c.h = c.h.add_identity({l - 1, below}, Property{"chain", {}});
      below = "I(" + below + ")";
    }
    c.h = c.h.add_bond(
        make_support(i - 1, std::vector<std::string>{"c" + std::to_string(i - 1), below}, Property{"chain", {}}),
        "c" + std::to_string(i));
  }
  return c;
}

}  // namespace hyper::testing
