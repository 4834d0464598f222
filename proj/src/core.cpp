#include "hyper/core.hpp"

#include <algorithm>
#include <sstream>

#include "hyper/error.hpp"

namespace hyper {

std::string to_string(const ElementId& id) {
  return std::to_string(id.level) + ":" + id.key;
}

Support make_support(std::vector<ElementId> members, Property property) {
  if (members.empty()) throw Error(Errc::InvalidArgument, "support has no members");
  if (property.tag.empty()) throw Error(Errc::InvalidArgument, "property tag is empty");
  const std::size_t level = members.front().level;
  for (const auto& m : members) {
    if (m.level != level)
      throw Error(Errc::InvalidArgument, "support members span several levels");
    if (m.key.empty()) throw Error(Errc::InvalidArgument, "support member has empty key");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Support{std::move(members), std::move(property)};
}

Support make_support(std::size_t level, std::span<const std::string> keys,
                     Property property) {
  std::vector<ElementId> members;
  members.reserve(keys.size());
  for (const auto& k : keys) members.push_back({level, k});
  return make_support(std::move(members), std::move(property));
}

Hyperstructure Hyperstructure::from_parts(std::size_t depth,
                                          std::vector<std::set<std::string>> levels,
                                          std::vector<Bond> bonds, ObsMap obs) {
  Hyperstructure h(depth);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i <= depth) {
      h.levels_[i] = std::move(levels[i]);
    } else {
      // Keep surplus levels visible to validate() by widening the depth.
      h.levels_.push_back(std::move(levels[i]));
    }
  }
  std::sort(bonds.begin(), bonds.end());
  bonds.erase(std::unique(bonds.begin(), bonds.end()), bonds.end());
  h.bonds_ = std::move(bonds);
  h.obs_ = std::move(obs);
  return h;
}

bool Hyperstructure::contains(const ElementId& id) const {
  return id.level < levels_.size() && levels_[id.level].contains(id.key);
}

std::vector<const Bond*> Hyperstructure::bonds_with_id(const ElementId& id) const {
  std::vector<const Bond*> out;
  auto it = std::lower_bound(bonds_.begin(), bonds_.end(), id,
                             [](const Bond& b, const ElementId& x) { return b.id < x; });
  for (; it != bonds_.end() && it->id == id; ++it) out.push_back(&*it);
  return out;
}

bool Hyperstructure::is_bond(const ElementId& id) const {
  return !bonds_with_id(id).empty();
}

std::size_t Hyperstructure::element_count() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

Hyperstructure Hyperstructure::with_depth(std::size_t depth) const {
  if (depth < this->depth())
    throw Error(Errc::LevelOverflow, "cannot shrink depth below existing levels");
  Hyperstructure h = *this;
  h.levels_.resize(depth + 1);
  return h;
}

Hyperstructure Hyperstructure::with_element(const ElementId& id) const {
  if (id.key.empty()) throw Error(Errc::InvalidArgument, "element key is empty");
  if (id.level > depth())
    throw Error(Errc::LevelOverflow, "level " + std::to_string(id.level) + " exceeds depth");
  Hyperstructure h = *this;
  h.levels_[id.level].insert(id.key);
  return h;
}

Hyperstructure Hyperstructure::with_elements(std::size_t level,
                                             std::span<const std::string> keys) const {
  if (level > depth())
    throw Error(Errc::LevelOverflow, "level " + std::to_string(level) + " exceeds depth");
  Hyperstructure h = *this;
  for (const auto& k : keys) {
    if (k.empty()) throw Error(Errc::InvalidArgument, "element key is empty");
    h.levels_[level].insert(k);
  }
  return h;
}

Hyperstructure Hyperstructure::with_property(const ElementId& id, Property property) const {
  if (!contains(id)) throw Error(Errc::UnknownElement, "no element " + to_string(id));
  if (property.tag.empty()) throw Error(Errc::InvalidArgument, "property tag is empty");
  Hyperstructure h = *this;
  h.obs_[id].insert(std::move(property));
  return h;
}

Hyperstructure Hyperstructure::add_bond(const Support& support, std::string_view id_key,
                                        bool is_identity) const {
  if (support.members.empty()) throw Error(Errc::InvalidArgument, "support has no members");
  if (id_key.empty()) throw Error(Errc::InvalidArgument, "bond key is empty");
  Support canonical = make_support(support.members, support.property);
  const std::size_t lower = canonical.level();
  for (const auto& m : canonical.members) {
    if (!contains(m)) throw Error(Errc::UnknownElement, "no element " + to_string(m));
  }
  if (lower + 1 > depth())
    throw Error(Errc::LevelOverflow,
                "bond over level " + std::to_string(lower) + " exceeds depth " +
                    std::to_string(depth()));
  if (is_identity && canonical.members.size() != 1)
    throw Error(Errc::InvalidArgument, "identity bond needs exactly one member");

  Bond bond{{lower + 1, std::string(id_key)}, std::move(canonical), is_identity};
  for (const Bond* existing : bonds_with_id(bond.id)) {
    if (existing->support != bond.support || existing->is_identity != bond.is_identity)
      throw Error(Errc::BondClash, "bond " + to_string(bond.id) + " already binds another support");
    return *this;
  }

  Hyperstructure h = *this;
  h.levels_[bond.id.level].insert(bond.id.key);
  auto pos = std::lower_bound(h.bonds_.begin(), h.bonds_.end(), bond);
  h.bonds_.insert(pos, std::move(bond));
  return h;
}

Hyperstructure Hyperstructure::add_identity(const ElementId& x, Property property) const {
  return add_bond(make_support({x}, std::move(property)), "I(" + x.key + ")", true);
}

const Support& Hyperstructure::boundary(const ElementId& bond_id) const {
  auto found = bonds_with_id(bond_id);
  if (found.empty()) throw Error(Errc::UnknownElement, to_string(bond_id) + " is not a bond");
  for (const Bond* b : found) {
    if (b->support != found.front()->support)
      throw Error(Errc::AmbiguousBond, to_string(bond_id) + " binds more than one support");
  }
  return found.front()->support;
}

std::string_view violation_name(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::EmptyKey: return "EmptyKey";
    case ViolationKind::LevelOverflow: return "LevelOverflow";
    case ViolationKind::LevelMismatch: return "LevelMismatch";
    case ViolationKind::EmptySupport: return "EmptySupport";
    case ViolationKind::MixedSupportLevels: return "MixedSupportLevels";
    case ViolationKind::MissingBondId: return "MissingBondId";
    case ViolationKind::MissingMember: return "MissingMember";
    case ViolationKind::DisjointnessViolation: return "DisjointnessViolation";
    case ViolationKind::IdentityArityViolation: return "IdentityArityViolation";
    case ViolationKind::ObsOnUnknownElement: return "ObsOnUnknownElement";
  }
  return "Unknown";
}

ValidationReport validate(const Hyperstructure& h) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, ElementId where, std::string detail) {
    report.push_back({kind, std::move(where), std::move(detail)});
  };

  for (std::size_t i = 0; i < h.levels().size(); ++i) {
    if (h.level(i).contains("")) add(ViolationKind::EmptyKey, {i, ""}, "empty key");
  }

  const auto& bonds = h.bonds();
  for (std::size_t n = 0; n < bonds.size(); ++n) {
    const Bond& b = bonds[n];
    if (b.id.level > h.depth()) {
      add(ViolationKind::LevelOverflow, b.id, "bond above depth");
    } else if (!h.contains(b.id)) {
      add(ViolationKind::MissingBondId, b.id, "bond id not among its level's elements");
    }
    if (b.support.members.empty()) {
      add(ViolationKind::EmptySupport, b.id, "support has no members");
    } else {
      bool mixed = false;
      for (const auto& m : b.support.members) {
        if (m.level != b.support.members.front().level) mixed = true;
        if (!h.contains(m))
          add(ViolationKind::MissingMember, b.id, "member " + to_string(m) + " missing");
      }
      if (mixed) {
        add(ViolationKind::MixedSupportLevels, b.id, "support spans several levels");
      } else if (b.support.level() + 1 != b.id.level) {
        add(ViolationKind::LevelMismatch, b.id, "bond level is not support level + 1");
      }
    }
    if (b.is_identity && b.support.members.size() != 1) {
      add(ViolationKind::IdentityArityViolation, b.id,
          "identity bond binds " + std::to_string(b.support.members.size()) + " members");
    }
  }

  // Bonds are sorted by id, so all records sharing an id are contiguous.
  for (std::size_t n = 0; n < bonds.size();) {
    std::size_t run = n + 1;
    bool clash = false;
    for (; run < bonds.size() && bonds[run].id == bonds[n].id; ++run) {
      if (bonds[run].support != bonds[n].support) clash = true;
    }
    if (clash)
      add(ViolationKind::DisjointnessViolation, bonds[n].id, "id binds more than one support");
    n = run;
  }

  for (const auto& [id, props] : h.obs()) {
    if (!h.contains(id)) add(ViolationKind::ObsOnUnknownElement, id, "properties on unknown element");
  }

  std::sort(report.begin(), report.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.where, a.kind, a.detail) < std::tie(b.where, b.kind, b.detail);
  });
  report.erase(std::unique(report.begin(), report.end()), report.end());
  return report;
}

Hyperstructure from_hyperoperation(std::span<const std::string> carrier,
                                   const Hyperoperation& star) {
  const std::set<std::string> points(carrier.begin(), carrier.end());
  Hyperstructure h = Hyperstructure(1).with_elements(0, carrier);
  for (const auto& x : points) {
    for (const auto& y : points) {
      auto it = star.find({x, y});
      if (it == star.end() || it->second.empty())
        throw Error(Errc::EmptyValue, x + "*" + y + " is empty");
      const std::string pair = x + "," + y;
      Support support = make_support(0, std::vector<std::string>{x, y}, Property{pair, {}});
      for (const auto& z : it->second) {
        if (!points.contains(z))
          throw Error(Errc::UnknownElement, x + "*" + y + " contains " + z + " outside X");
        const std::string key = pair + "->" + z;
        h = h.add_bond(support, key).with_property({1, key}, Property{"value", z});
      }
    }
  }
  for (const auto& [xy, _] : star) {
    if (!points.contains(xy.first) || !points.contains(xy.second))
      throw Error(Errc::UnknownElement, "hyperoperation defined outside X");
  }
  return h;
}

Hyperstructure push_forward(const Hyperstructure& h, std::span<const std::string> carrier,
                            const std::map<std::string, std::string>& phi) {
  const std::set<std::string> points(carrier.begin(), carrier.end());
  std::map<std::string, std::vector<std::string>> preimage;
  for (const auto& p : points) {
    auto it = phi.find(p);
    if (it == phi.end()) throw Error(Errc::UnknownElement, "phi undefined on " + p);
    if (!h.level(0).contains(it->second))
      throw Error(Errc::UnknownElement, "phi(" + p + ") = " + it->second + " is not in level 0");
    preimage[it->second].push_back(p);
  }
  for (const auto& [p, _] : phi) {
    if (!points.contains(p)) throw Error(Errc::UnknownElement, "phi defined outside carrier: " + p);
  }

  std::vector<std::set<std::string>> levels = h.levels();
  levels[0] = points;
  std::vector<Bond> bonds;
  for (const Bond& b : h.bonds()) {
    if (b.id.level != 1) {
      bonds.push_back(b);
      continue;
    }
    std::vector<ElementId> members;
    bool covered = true;
    for (const auto& m : b.support.members) {
      auto it = preimage.find(m.key);
      if (it == preimage.end()) {
        covered = false;
        break;
      }
      for (const auto& p : it->second) members.push_back({0, p});
    }
    if (!covered) continue;
    Support induced = make_support(std::move(members), b.support.property);
    const bool identity = b.is_identity && induced.members.size() == 1;
    bonds.push_back({b.id, std::move(induced), identity});
  }

  ObsMap obs;
  for (const auto& [id, props] : h.obs()) {
    if (id.level != 0) {
      obs[id] = props;
      continue;
    }
    auto it = preimage.find(id.key);
    if (it == preimage.end()) continue;
    for (const auto& p : it->second) obs[{0, p}].insert(props.begin(), props.end());
  }
  return Hyperstructure::from_parts(h.depth(), std::move(levels), std::move(bonds), std::move(obs));
}

namespace {

ElementId prefixed(const ElementId& id, std::string_view prefix) {
  return {id.level, std::string(prefix) + id.key};
}

void append_prefixed(const Hyperstructure& src, std::string_view prefix,
                     std::vector<std::set<std::string>>& levels, std::vector<Bond>& bonds,
                     ObsMap& obs) {
  for (std::size_t i = 0; i <= src.depth(); ++i) {
    for (const auto& k : src.level(i)) levels[i].insert(std::string(prefix) + k);
  }
  for (const Bond& b : src.bonds()) {
    Bond copy = b;
    copy.id = prefixed(b.id, prefix);
    for (auto& m : copy.support.members) m = prefixed(m, prefix);
    bonds.push_back(std::move(copy));
  }
  for (const auto& [id, props] : src.obs()) obs[prefixed(id, prefix)] = props;
}

}  // namespace

Hyperstructure fuse(const Hyperstructure& left, const Hyperstructure& right, bool add_top) {
  const std::size_t depth = std::max(left.depth(), right.depth());
  std::vector<std::set<std::string>> levels(depth + 1);
  std::vector<Bond> bonds;
  ObsMap obs;
  append_prefixed(left, "L:", levels, bonds, obs);
  append_prefixed(right, "R:", levels, bonds, obs);
  Hyperstructure fused =
      Hyperstructure::from_parts(depth, std::move(levels), std::move(bonds), std::move(obs));
  if (!add_top || fused.level(depth).empty()) return fused;

  const auto& top = fused.level(depth);
  std::vector<std::string> keys(top.begin(), top.end());
  return fused.with_depth(depth + 1).add_bond(
      make_support(depth, keys, Property{"fusion", {}}), "top");
}

Hyperstructure relabel(const Hyperstructure& h,
                       const std::function<std::string(const ElementId&)>& rename) {
  std::vector<std::set<std::string>> levels(h.depth() + 1);
  for (std::size_t i = 0; i <= h.depth(); ++i) {
    for (const auto& k : h.level(i)) levels[i].insert(rename({i, k}));
  }
  auto map_id = [&](const ElementId& id) { return ElementId{id.level, rename(id)}; };
  std::vector<Bond> bonds;
  for (const Bond& b : h.bonds()) {
    Bond copy = b;
    copy.id = map_id(b.id);
    for (auto& m : copy.support.members) m = map_id(m);
    std::sort(copy.support.members.begin(), copy.support.members.end());
    bonds.push_back(std::move(copy));
  }
  ObsMap obs;
  for (const auto& [id, props] : h.obs()) obs[map_id(id)] = props;
  return Hyperstructure::from_parts(h.depth(), std::move(levels), std::move(bonds), std::move(obs));
}

Hyperstructure swap_fusion_sides(const Hyperstructure& h) {
  return relabel(h, [](const ElementId& id) {
    if (id.key.starts_with("L:")) return "R:" + id.key.substr(2);
    if (id.key.starts_with("R:")) return "L:" + id.key.substr(2);
    return id.key;
  });
}

std::vector<LevelSignature> structural_signature(const Hyperstructure& h) {
  std::vector<LevelSignature> sig(h.depth() + 1);
  for (std::size_t i = 0; i <= h.depth(); ++i) sig[i].elements = h.level(i).size();
  for (const Bond& b : h.bonds()) {
    if (b.id.level >= sig.size()) continue;
    sig[b.id.level].bonds += 1;
    sig[b.id.level].support_sizes.push_back(b.support.members.size());
  }
  for (auto& s : sig) std::sort(s.support_sizes.begin(), s.support_sizes.end());
  return sig;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Hyperstructure& h) {
  std::ostringstream os;
  os << "digraph hyperstructure {\n";
  for (std::size_t i = 0; i <= h.depth(); ++i) {
    if (h.level(i).empty()) continue;
    os << "  subgraph cluster_level_" << i << " {\n";
    os << "    label=\"level " << i << "\";\n";
    for (const auto& k : h.level(i)) {
      os << "    " << dot_quote(to_string({i, k})) << " [label=" << dot_quote(k) << "];\n";
    }
    os << "  }\n";
  }
  for (const Bond& b : h.bonds()) {
    for (const auto& m : b.support.members) {
      os << "  " << dot_quote(to_string(b.id)) << " -> " << dot_quote(to_string(m));
      if (b.is_identity) os << " [style=dashed]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace hyper
