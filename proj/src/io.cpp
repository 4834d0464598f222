#include "hyper/io.hpp"

#include <fstream>
#include <sstream>

#include "hyper/error.hpp"

namespace hyper::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedInput, what); }

/// Runs a parser, turning nlohmann type and range errors into MalformedInput.
template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    malformed(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) malformed("expected an object");
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t index(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed("expected a non-negative integer");
  return j.get<std::size_t>();
}

OpTable table(const json& j) {
  if (!j.is_array()) malformed("operation table must be an array of rows");
  OpTable out;
  for (const auto& row : j) {
    if (!row.is_array()) malformed("operation table row must be an array");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(index(x));
    out.push_back(std::move(r));
  }
  return out;
}

json property_json(const Property& p) {
  return {{"tag", p.tag}, {"payload", p.payload ? json(*p.payload) : json(nullptr)}};
}

Property property_from(const json& j) {
  Property p{field(j, "tag").get<std::string>(), std::nullopt};
  if (auto it = j.find("payload"); it != j.end() && !it->is_null()) p.payload = it->get<std::string>();
  return p;
}

std::size_t builtin_size(const std::string& name, const std::string& prefix) {
  const std::string digits = name.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    malformed("unknown builtin " + name);
  return std::stoul(digits);
}

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

json to_json(const Hyperstructure& h) {
  json levels = json::array();
  for (const auto& level : h.levels()) levels.push_back(json(std::vector<std::string>(level.begin(), level.end())));
  json bonds = json::array();
  for (const auto& b : h.bonds()) {
    std::vector<std::string> members;
    for (const auto& m : b.support.members) members.push_back(m.key);
    bonds.push_back({{"id", b.id.key},
                     {"level", b.id.level},
                     {"members", members},
                     {"property", property_json(b.support.property)},
                     {"identity", b.is_identity}});
  }
  json out = {{"depth", h.depth()}, {"levels", levels}, {"bonds", bonds}};
  if (!h.obs().empty()) {
    json obs = json::array();
    for (const auto& [id, props] : h.obs()) {
      json ps = json::array();
      for (const auto& p : props) ps.push_back(property_json(p));
      obs.push_back({{"level", id.level}, {"key", id.key}, {"properties", ps}});
    }
    out["obs"] = obs;
  }
  return out;
}

Hyperstructure hyperstructure_from_json(const json& j) {
  return guarded("hyperstructure", [&] {
    const std::size_t depth = index(field(j, "depth"));
    const json& lv = field(j, "levels");
    if (!lv.is_array() || lv.size() != depth + 1) malformed("\"levels\" must list depth + 1 levels");
    std::vector<std::set<std::string>> levels;
    for (const auto& level : lv) levels.emplace_back(level.get<std::set<std::string>>());

    std::vector<Bond> bonds;
    for (const auto& b : field(j, "bonds")) {
      const std::size_t level = index(field(b, "level"));
      if (level == 0) malformed("bond level must be at least 1");
      Bond bond;
      bond.id = {level, field(b, "id").get<std::string>()};
      for (const auto& m : field(b, "members")) bond.support.members.push_back({level - 1, m.get<std::string>()});
      std::sort(bond.support.members.begin(), bond.support.members.end());
      bond.support.property = property_from(field(b, "property"));
      bond.is_identity = field(b, "identity").get<bool>();
      bonds.push_back(std::move(bond));
    }
    ObsMap obs;
    if (auto it = j.find("obs"); it != j.end()) {
      for (const auto& entry : *it) {
        const ElementId id{index(field(entry, "level")), field(entry, "key").get<std::string>()};
        for (const auto& p : field(entry, "properties")) obs[id].insert(property_from(p));
      }
    }
    return Hyperstructure::from_parts(depth, std::move(levels), std::move(bonds), std::move(obs));
  });
}

FiniteTopology topology_from_json(const json& j) {
  auto [points, opens] = guarded("topology", [&] {
    return std::pair{field(j, "points").get<std::vector<std::string>>(),
                     field(j, "opens").get<std::vector<PointSet>>()};
  });
  return FiniteTopology::make(std::move(points), std::move(opens));
}

NestFamily nest_family_from_json(const FiniteTopology& t, const json& j) {
  auto [depth, words, bounds] = guarded("nest family", [&] {
    const std::size_t depth = index(field(j, "depth"));
    std::map<NestWord, PointSet> words;
    const json& w = field(j, "words");
    if (!w.is_object()) malformed("\"words\" must be an object");
    for (const auto& [key, set] : w.items()) {
      NestWord word;
      std::stringstream ss(key);
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          std::size_t used = 0;
          word.push_back(std::stoi(part, &used));
          if (used != part.size()) malformed("bad word key \"" + key + "\"");
        } catch (const std::logic_error&) {
          malformed("bad word key \"" + key + "\"");
        }
      }
      words[word] = set.get<PointSet>();
    }
    std::vector<int> bounds;
    if (auto it = j.find("bounds"); it != j.end()) bounds = it->get<std::vector<int>>();
    return std::tuple{depth, words, bounds};
  });
  return NestFamily::make(t, depth, std::move(words), std::move(bounds));
}

FiniteRing ring_from_json(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (has_prefix(name, "M2Z")) return FiniteRing::matrices_2x2_mod(builtin_size(name, "M2Z"));
    if (has_prefix(name, "Z")) return FiniteRing::integers_mod(builtin_size(name, "Z"));
    malformed("unknown builtin ring " + name);
  }
  auto [elements, add, mul, zero, one] = guarded("ring", [&] {
    return std::tuple{field(j, "elements").get<std::vector<std::string>>(), table(field(j, "add")),
                      table(field(j, "mul")), index(field(j, "zero")), index(field(j, "one"))};
  });
  return FiniteRing::make(std::move(elements), std::move(add), std::move(mul), zero, one);
}

FiniteModule module_from_json(const json& j) {
  if (j.is_string()) return FiniteModule::additive_group(ring_from_json(j));
  auto [elements, add, zero] = guarded("module", [&] {
    return std::tuple{field(j, "elements").get<std::vector<std::string>>(), table(field(j, "add")),
                      index(field(j, "zero"))};
  });
  return FiniteModule::make(std::move(elements), std::move(add), zero);
}

ActionTable action_from_json(const json& j) {
  return guarded("action", [&] {
    ActionTable out;
    if (!j.is_array()) malformed("action must be nested arrays [w][t][r][m]");
    for (const auto& w : j) {
      if (!w.is_array()) malformed("action must be nested arrays [w][t][r][m]");
      std::vector<OpTable> per_t;
      for (const auto& t : w) per_t.push_back(table(t));
      out.push_back(std::move(per_t));
    }
    return out;
  });
}

json to_json(const TensorState& s) {
  json amps = json::array();
  for (const auto& a : s.amps()) amps.push_back({a.real(), a.imag()});
  return {{"dims", s.dims()}, {"amps", amps}};
}

TensorState state_from_json(const json& j) {
  auto [dims, amps] = guarded("state", [&] {
    auto dims = field(j, "dims").get<std::vector<std::size_t>>();
    std::vector<cplx> amps;
    for (const auto& a : field(j, "amps")) {
      if (a.is_number()) {
        amps.emplace_back(a.get<double>(), 0.0);
      } else {
        if (!a.is_array() || a.size() != 2) malformed("amplitude must be [re, im]");
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
      }
    }
    return std::pair{dims, amps};
  });
  return TensorState::make(std::move(dims), std::move(amps));
}

PartitionTree tree_from_json(const json& j) {
  return guarded("tree", [&] {
    std::function<PartitionTree(const json&)> node = [&](const json& n) -> PartitionTree {
      if (n.is_number_integer()) {
        if (n.get<long long>() < 1) malformed("leaf indices start at 1");
        return PartitionTree::leaf(n.get<std::size_t>());
      }
      if (!n.is_array() || n.empty()) malformed("tree nodes are non-empty arrays or leaf indices");
      std::vector<PartitionTree> children;
      for (const auto& c : n) children.push_back(node(c));
      return PartitionTree::group(std::move(children));
    };
    return node(j);
  });
}

Recipient recipient_from_json(const json& j) {
  const auto kind = guarded("recipient", [&] { return field(j, "kind").get<std::string>(); });
  if (kind == "tensor") return TensorMonoid{};
  if (kind == "multiset") {
    const std::string mode = guarded("recipient", [&] { return j.value("mode", std::string("sum")); });
    if (mode == "sum") return MultisetMonoid(MultisetMonoid::Mode::Sum);
    if (mode == "union") return MultisetMonoid(MultisetMonoid::Mode::Union);
    malformed("multiset mode must be \"sum\" or \"union\"");
  }
  if (kind != "monoid") malformed("unknown recipient kind " + kind);
  if (auto it = j.find("builtin"); it != j.end()) {
    const auto name = guarded("recipient", [&] { return it->get<std::string>(); });
    // "Z10*" or "Z10+"
    if (name.size() < 3 || name.front() != 'Z') malformed("unknown builtin monoid " + name);
    const char op = name.back();
    const std::size_t n = builtin_size(name.substr(0, name.size() - 1), "Z");
    if (op == '*') return TableMonoid::multiplicative_mod(n);
    if (op == '+') return TableMonoid::additive_mod(n);
    malformed("unknown builtin monoid " + name);
  }
  auto [elements, unit_index, tab] = guarded("recipient", [&] {
    return std::tuple{field(j, "elements").get<std::vector<std::string>>(), index(field(j, "unit")),
                      table(field(j, "table"))};
  });
  return TableMonoid::make(std::move(elements), unit_index, std::move(tab));
}

Value value_from_json(const Recipient& r, const json& j) {
  if (const auto* m = std::get_if<TableMonoid>(&r)) {
    if (!j.is_string()) malformed("monoid values are element names");
    try {
      return m->parse(j.get<std::string>());
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  if (std::holds_alternative<MultisetMonoid>(r)) {
    return guarded("multiset value", [&] {
      Multiset out;
      for (const auto& x : j.get<std::vector<std::string>>()) ++out[x];
      return Value(out);
    });
  }
  return state_from_json(j);
}

json value_to_json(const Recipient& r, const Value& v) {
  if (std::holds_alternative<TensorMonoid>(r)) return to_json(std::get<TensorState>(v));
  return render(r, v);
}

Assignment assignment_from_json(const json& j, const Hyperstructure& source) {
  Recipient r = recipient_from_json(guarded("assignment", [&] { return field(j, "recipient"); }));
  const json& leaves = guarded("assignment", [&]() -> const json& { return field(j, "leaves"); });
  if (!leaves.is_object()) malformed("\"leaves\" must be an object");
  LeafValues values;
  for (const auto& [key, v] : leaves.items()) values.emplace(key, value_from_json(r, v));
  return assign(source, std::move(r), std::move(values));
}

}  // namespace hyper::io
