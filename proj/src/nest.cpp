#include "hyper/nest.hpp"

#include <algorithm>

namespace hyper {

std::string render(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : s) {
    if (!first) out += ',';
    out += p;
    first = false;
  }
  return out + "}";
}

namespace {

bool subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool disjoint(const PointSet& a, const PointSet& b) { return set_intersection(a, b).empty(); }

}  // namespace

FiniteTopology FiniteTopology::make(std::vector<std::string> points, std::vector<PointSet> opens) {
  FiniteTopology t;
  t.points_ = PointSet(points.begin(), points.end());
  for (auto& o : opens) {
    for (const auto& p : o) {
      if (!t.points_.contains(p)) throw Error(Errc::UnknownPoint, "open mentions unknown point " + p);
    }
    t.opens_.insert(std::move(o));
  }
  if (!t.opens_.contains(PointSet{}))
    throw Error(Errc::AxiomFailure, "topology is missing the empty set");
  if (!t.opens_.contains(t.points_))
    throw Error(Errc::AxiomFailure, "topology is missing the whole space");
  for (const auto& a : t.opens_) {
    for (const auto& b : t.opens_) {
      if (!t.opens_.contains(set_union(a, b)))
        throw Error(Errc::AxiomFailure, "union of " + render(a) + " and " + render(b) + " is not open");
      if (!t.opens_.contains(set_intersection(a, b)))
        throw Error(Errc::AxiomFailure,
                    "intersection of " + render(a) + " and " + render(b) + " is not open");
    }
  }
  return t;
}

bool check_openness(const FiniteTopology& t, const PointSet& s) {
  for (const auto& p : s) {
    if (!t.points().contains(p)) throw Error(Errc::UnknownPoint, "unknown point " + p);
  }
  return t.is_open(s);
}

std::string word_key(const NestWord& w) {
  std::string out = "U(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out + ")";
}

namespace {

NestWord drop(const NestWord& w, std::size_t j) {
  NestWord out = w;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

void require_open(const FiniteTopology& t, const NestWord& w, const PointSet& s) {
  if (!check_openness(t, s))
    throw Error(Errc::NotOpen, word_key(w) + " = " + render(s) + " is not open");
}

}  // namespace

NestFamily NestFamily::make(const FiniteTopology& t, std::size_t depth,
                            std::map<NestWord, PointSet> words, std::vector<int> bounds) {
  if (!bounds.empty() && bounds.size() != depth)
    throw Error(Errc::InvalidArgument, "index bounds must list one bound per position");
  std::vector<int> inferred(depth, 0);
  for (const auto& [w, s] : words) {
    if (w.size() > depth)
      throw Error(Errc::InvalidArgument, word_key(w) + " is longer than the depth");
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] < 1) throw Error(Errc::IndexOutOfRange, word_key(w) + " has a non-positive index");
      if (!bounds.empty() && w[j] > bounds[j])
        throw Error(Errc::IndexOutOfRange, word_key(w) + " exceeds the bound at position " +
                                               std::to_string(j + 1));
      inferred[j] = std::max(inferred[j], w[j]);
    }
    require_open(t, w, s);
  }
  for (const auto& [w, s] : words) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      auto parent = words.find(drop(w, j));
      if (parent != words.end() && !subset(s, parent->second))
        throw Error(Errc::NotNested,
                    word_key(w) + " is not contained in " + word_key(parent->first));
    }
  }
  NestFamily f;
  f.depth_ = depth;
  f.words_ = std::move(words);
  f.bounds_ = bounds.empty() ? std::move(inferred) : std::move(bounds);
  return f;
}

const PointSet* NestFamily::find(const NestWord& w) const {
  auto it = words_.find(w);
  return it == words_.end() ? nullptr : &it->second;
}

Hyperstructure build_nest(const FiniteTopology& t, const NestFamily& f) {
  const std::size_t n = f.depth();
  Hyperstructure h(n);
  const Property open{"open", {}};
  for (const auto& [w, s] : f.words()) {
    require_open(t, w, s);
    const ElementId id{n - w.size(), word_key(w)};
    h = h.with_element(id).with_property(id, open);
  }
  for (const auto& [w, s] : f.words()) {
    if (w.size() == n) continue;
    std::vector<std::string> children;
    for (auto it = f.words().lower_bound(w); it != f.words().end(); ++it) {
      const NestWord& c = it->first;
      if (c.size() < w.size() || !std::equal(w.begin(), w.end(), c.begin())) break;
      if (c.size() != w.size() + 1) continue;
      if (!subset(it->second, s))
        throw Error(Errc::NotNested, word_key(c) + " is not contained in " + word_key(w));
      children.push_back(word_key(c));
    }
    if (children.empty()) continue;
    h = h.add_bond(make_support(n - w.size() - 1, children, open), word_key(w));
  }
  return h;
}

std::set<NestWord> nest_boundary(const NestFamily& f, const NestWord& holed, std::size_t position) {
  if (position < 1 || position > holed.size() + 1)
    throw Error(Errc::UnknownWord, "hole position " + std::to_string(position) + " out of range");
  std::set<NestWord> out;
  const std::size_t j = position - 1;
  for (const auto& [w, _] : f.words()) {
    if (w.size() != holed.size() + 1) continue;
    if (drop(w, j) == holed) out.insert(w);
  }
  if (out.empty())
    throw Error(Errc::UnknownWord, "no defined word fills the hole in " + word_key(holed));
  return out;
}

std::vector<std::size_t> nesting_owners(const FiniteTopology& t, const std::vector<PointSet>& inner,
                                        const std::vector<PointSet>& mid, const PointSet& outer) {
  auto open_or_throw = [&](const PointSet& s) {
    if (!check_openness(t, s)) throw Error(Errc::NotOpen, render(s) + " is not open");
  };
  for (const auto& s : inner) open_or_throw(s);
  for (const auto& s : mid) open_or_throw(s);
  open_or_throw(outer);

  auto pairwise_disjoint = [](const std::vector<PointSet>& family, const char* what) {
    for (std::size_t a = 0; a < family.size(); ++a)
      for (std::size_t b = a + 1; b < family.size(); ++b)
        if (!disjoint(family[a], family[b]))
          throw Error(Errc::NotDisjoint, std::string(what) + " opens " + render(family[a]) +
                                             " and " + render(family[b]) + " overlap");
  };
  pairwise_disjoint(inner, "inner");
  pairwise_disjoint(mid, "mid");

  for (const auto& v : mid) {
    if (!subset(v, outer))
      throw Error(Errc::NotContained, render(v) + " is not inside " + render(outer));
  }
  std::vector<std::size_t> owners;
  for (const auto& u : inner) {
    std::size_t hits = 0;
    std::size_t owner = 0;
    for (std::size_t i = 0; i < mid.size(); ++i) {
      if (subset(u, mid[i])) {
        ++hits;
        owner = i;
      }
    }
    if (hits != 1)
      throw Error(Errc::NotContained,
                  render(u) + " lies in " + std::to_string(hits) + " mid opens, expected one");
    owners.push_back(owner);
  }
  return owners;
}

}  // namespace hyper
