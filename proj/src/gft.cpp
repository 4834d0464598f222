#include "hyper/gft.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hyper/error.hpp"

namespace hyper {

TensorState TensorMonoid::combine(const TensorState& a, const TensorState& b) const {
  const TensorState parts[] = {a, b};
  return tensor_product(parts);
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

template <class M>
const typename M::value_type& as(const Value& v) {
  if (const auto* p = std::get_if<typename M::value_type>(&v)) return *p;
  throw Error(Errc::InvalidArgument, "value does not belong to the recipient carrier");
}

}  // namespace

std::string_view recipient_kind(const Recipient& r) {
  return std::visit(overloaded{[](const TableMonoid&) { return std::string_view("monoid"); },
                               [](const MultisetMonoid&) { return std::string_view("multiset"); },
                               [](const TensorMonoid&) { return std::string_view("tensor"); }},
                    r);
}

Value unit(const Recipient& r) {
  return std::visit([](const auto& m) -> Value { return m.unit(); }, r);
}

Value combine(const Recipient& r, const Value& a, const Value& b) {
  return std::visit(
      [&](const auto& m) -> Value {
        using M = std::decay_t<decltype(m)>;
        return m.combine(as<M>(a), as<M>(b));
      },
      r);
}

bool equal(const Recipient& r, const Value& a, const Value& b) {
  return std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        return m.equal(as<M>(a), as<M>(b));
      },
      r);
}

std::string render(const Recipient& r, const Value& v) {
  return std::visit(
      overloaded{[&](const TableMonoid& m) { return m.name(as<TableMonoid>(v)); },
                 [&](const MultisetMonoid&) { return render(as<MultisetMonoid>(v)); },
                 [&](const TensorMonoid&) {
                   const auto& s = as<TensorMonoid>(v);
                   std::string out = "state(";
                   for (std::size_t i = 0; i < s.dims().size(); ++i) {
                     if (i) out += 'x';
                     out += std::to_string(s.dims()[i]);
                   }
                   return out + ")";
                 }},
      r);
}

void check_value(const Recipient& r, const Value& v) {
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        const auto& x = as<M>(v);
        if constexpr (std::is_same_v<M, TableMonoid>) {
          if (x >= m.size()) throw Error(Errc::InvalidArgument, "monoid element index out of range");
        }
      },
      r);
}

std::string_view glue_kind_name(GlueIssue::Kind kind) noexcept {
  switch (kind) {
    case GlueIssue::Kind::Inconsistent: return "Inconsistent";
    case GlueIssue::Kind::Undefined: return "Undefined";
  }
  return "?";
}

Assignment assign(Hyperstructure h, Recipient r, LeafValues leaf_values) {
  for (const auto& [key, v] : leaf_values) {
    if (!h.level(0).contains(key)) throw Error(Errc::UnknownLeaf, "no level-0 element " + key);
    check_value(r, v);
  }
  for (const auto& key : h.level(0)) {
    if (!leaf_values.contains(key)) throw Error(Errc::MissingLeaf, "no value for leaf " + key);
  }
  Assignment a;
  a.source_ = std::move(h);
  a.recipient_ = std::move(r);
  a.leaf_values_ = std::move(leaf_values);
  return a;
}

namespace {

using Cover = std::set<std::string>;

Value fold_in_order(const Recipient& r, const std::vector<const Value*>& values) {
  Value acc = unit(r);
  for (const auto* v : values) acc = combine(r, acc, *v);
  return acc;
}

}  // namespace

GlobalizeResult globalize(const Assignment& a, std::optional<std::uint64_t> shuffle_seed) {
  const Hyperstructure& h = a.source();
  const Recipient& r = a.recipient();
  if (auto report = validate(h); !report.empty())
    throw Error(Errc::UnvalidatedSource,
                "source has " + std::to_string(report.size()) + " law violation(s)");
  if (h.level(h.depth()).size() != 1)
    throw Error(Errc::NoTop, "top level holds " + std::to_string(h.level(h.depth()).size()) +
                                 " elements, expected one");

  const bool commutative = !std::holds_alternative<TensorMonoid>(r);
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  GlobalizeResult out;
  out.levels.resize(h.depth() + 1);
  std::vector<std::map<std::string, Cover>> covers(h.depth() + 1);
  for (const auto& [key, v] : a.leaf_values()) {
    out.levels[0].emplace(key, v);
    covers[0][key] = {key};
  }

  std::map<ElementId, const Bond*> bond_of;
  for (const auto& b : h.bonds()) bond_of.emplace(b.id, &b);

  for (std::size_t i = 1; i <= h.depth(); ++i) {
    std::vector<std::string> keys(h.level(i).begin(), h.level(i).end());
    if (rng) std::shuffle(keys.begin(), keys.end(), *rng);
    for (const auto& key : keys) {
      const ElementId id{i, key};
      auto it = bond_of.find(id);
      if (it == bond_of.end()) {
        out.glue_report.push_back({GlueIssue::Kind::Undefined, id, "element is not a bond"});
        continue;
      }
      std::vector<std::string> members;
      for (const auto& m : it->second->support.members) members.push_back(m.key);
      if (rng && commutative) std::shuffle(members.begin(), members.end(), *rng);

      std::vector<const Value*> parts;
      Cover cover;
      bool overlap = false;
      bool missing = false;
      for (const auto& m : members) {
        auto v = out.levels[i - 1].find(m);
        if (v == out.levels[i - 1].end()) {
          missing = true;
          break;
        }
        parts.push_back(&v->second);
        for (const auto& leaf : covers[i - 1][m]) overlap |= !cover.insert(leaf).second;
      }
      if (missing) {
        out.glue_report.push_back({GlueIssue::Kind::Undefined, id, "a support member has no value"});
        continue;
      }
      Value routed = fold_in_order(r, parts);
      if (overlap) {
        std::vector<const Value*> leaves;
        for (const auto& leaf : cover) leaves.push_back(&a.leaf_values().at(leaf));
        Value flat = fold_in_order(r, leaves);
        if (!equal(r, routed, flat))
          out.glue_report.push_back({GlueIssue::Kind::Inconsistent, id,
                                     "routed value " + render(r, routed) +
                                         " differs from leaf fold " + render(r, flat)});
      }
      out.levels[i].emplace(key, std::move(routed));
      covers[i][key] = std::move(cover);
    }
  }
  std::sort(out.glue_report.begin(), out.glue_report.end(),
            [](const GlueIssue& x, const GlueIssue& y) { return x.where < y.where; });

  if (out.glue_report.empty()) {
    const std::string& top = *h.level(h.depth()).begin();
    out.global = out.levels[h.depth()].at(top);
  }
  return out;
}

Assignment globalized(const Assignment& a) {
  Assignment copy = a;
  copy.cache_ = std::make_shared<const GlobalizeResult>(globalize(a));
  return copy;
}

const LevelValues& level_values(const Assignment& a, std::size_t level) {
  if (!a.cache()) throw Error(Errc::NotGlobalized, "assignment has not been globalized");
  if (level > a.source().depth())
    throw Error(Errc::LevelOutOfRange, "level " + std::to_string(level) + " exceeds depth " +
                                           std::to_string(a.source().depth()));
  return a.cache()->levels[level];
}

std::pair<Value, Value> tunnel(const Assignment& a, const LeafValues& edits) {
  for (const auto& [key, v] : edits) {
    if (!a.source().level(0).contains(key)) throw Error(Errc::UnknownLeaf, "no level-0 element " + key);
    check_value(a.recipient(), v);
  }
  auto before = globalize(a);
  if (!before.global) throw Error(Errc::GlueInconsistent, "source assignment has no global value");

  Assignment edited = a;
  edited.cache_.reset();
  for (const auto& [key, v] : edits) edited.leaf_values_[key] = v;
  auto after = globalize(edited);
  if (!after.global) throw Error(Errc::GlueInconsistent, "edited assignment has no global value");
  return {std::move(*before.global), std::move(*after.global)};
}

}  // namespace hyper
