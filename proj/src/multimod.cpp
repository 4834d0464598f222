#include "hyper/multimod.hpp"

#include <set>
#include <sstream>

namespace hyper {

namespace {

void check_table(const OpTable& table, std::size_t n, const char* what) {
  if (table.size() != n)
    throw Error(Errc::AxiomFailure, std::string(what) + " table has wrong row count");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(Errc::AxiomFailure, std::string(what) + " table is not square");
    for (auto v : row)
      if (v >= n) throw Error(Errc::AxiomFailure, std::string(what) + " table entry out of range");
  }
}

void check_abelian_group(const std::vector<std::string>& el, const OpTable& add, std::size_t zero) {
  const std::size_t n = el.size();
  auto fail = [&](const std::string& what) { throw Error(Errc::AxiomFailure, "addition " + what); };
  for (std::size_t a = 0; a < n; ++a) {
    if (add[zero][a] != a) fail("zero is not neutral for " + el[a]);
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) fail("not commutative at (" + el[a] + "," + el[b] + ")");
      if (add[a][b] == zero) has_inverse = true;
      for (std::size_t c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]])
          fail("not associative at (" + el[a] + "," + el[b] + "," + el[c] + ")");
      }
    }
    if (!has_inverse) fail(el[a] + " has no inverse");
  }
}

}  // namespace

FiniteRing FiniteRing::make(std::vector<std::string> elements, OpTable add, OpTable mul,
                            std::size_t zero, std::size_t one) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(Errc::AxiomFailure, "ring has no elements");
  if (zero >= n || one >= n) throw Error(Errc::AxiomFailure, "zero/one index out of range");
  check_table(add, n, "ring addition");
  check_table(mul, n, "ring multiplication");
  check_abelian_group(elements, add, zero);
  auto fail = [&](const std::string& what) { throw Error(Errc::AxiomFailure, "ring " + what); };
  for (std::size_t a = 0; a < n; ++a) {
    if (mul[one][a] != a || mul[a][one] != a) fail("one is not a unit for " + elements[a]);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) fail("multiplication is not associative");
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) fail("left distributivity fails");
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) fail("right distributivity fails");
      }
    }
  }
  FiniteRing r;
  r.elements_ = std::move(elements);
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.zero_ = zero;
  r.one_ = one;
  return r;
}

FiniteRing FiniteRing::integers_mod(std::size_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "modulus must be positive");
  std::vector<std::string> names;
  OpTable add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  }
  return make(std::move(names), std::move(add), std::move(mul), 0, 1 % n);
}

FiniteRing FiniteRing::matrices_2x2_mod(std::size_t p) {
  if (p < 2) throw Error(Errc::InvalidArgument, "modulus must be at least 2");
  const std::size_t n = p * p * p * p;
  auto encode = [p](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return ((a * p + b) * p + c) * p + d;
  };
  struct Mat { std::size_t a, b, c, d; };
  std::vector<Mat> mats(n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d) {
          const auto i = encode(a, b, c, d);
          mats[i] = {a, b, c, d};
          names[i] = "[" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) +
                     "," + std::to_string(d) + "]";
        }
  OpTable add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Mat& x = mats[i];
      const Mat& y = mats[j];
      add[i][j] = encode((x.a + y.a) % p, (x.b + y.b) % p, (x.c + y.c) % p, (x.d + y.d) % p);
      mul[i][j] = encode((x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p,
                         (x.c * y.a + x.d * y.c) % p, (x.c * y.b + x.d * y.d) % p);
    }
  }
  return make(std::move(names), std::move(add), std::move(mul), encode(0, 0, 0, 0),
              encode(1, 0, 0, 1));
}

FiniteModule FiniteModule::make(std::vector<std::string> elements, OpTable add, std::size_t zero) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(Errc::AxiomFailure, "module has no elements");
  if (zero >= n) throw Error(Errc::AxiomFailure, "zero index out of range");
  check_table(add, n, "module addition");
  check_abelian_group(elements, add, zero);
  FiniteModule m;
  m.elements_ = std::move(elements);
  m.add_ = std::move(add);
  m.zero_ = zero;
  return m;
}

FiniteModule FiniteModule::additive_group(const FiniteRing& ring) {
  return make(ring.elements(), ring.add_table(), ring.zero());
}

ActionSystem ActionSystem::make(std::vector<FiniteRing> rings, std::size_t params,
                                FiniteModule module, ActionTable table, bool commuting) {
  if (rings.empty()) throw Error(Errc::InvalidArgument, "action system has no rings");
  if (params == 0) throw Error(Errc::InvalidArgument, "action system has no parameters");
  if (table.size() != params) throw Error(Errc::InvalidArgument, "action table: wrong parameter count");
  for (const auto& per_w : table) {
    if (per_w.size() != rings.size()) throw Error(Errc::InvalidArgument, "action table: wrong ring count");
    for (std::size_t t = 0; t < rings.size(); ++t) {
      if (per_w[t].size() != rings[t].size())
        throw Error(Errc::InvalidArgument, "action table: wrong ring size");
      for (const auto& row : per_w[t]) {
        if (row.size() != module.size())
          throw Error(Errc::InvalidArgument, "action table: wrong module size");
        for (auto v : row)
          if (v >= module.size()) throw Error(Errc::InvalidArgument, "action table: value out of module");
      }
    }
  }
  ActionSystem a;
  a.rings_ = std::move(rings);
  a.params_ = params;
  a.module_ = std::move(module);
  a.table_ = std::move(table);
  a.commuting_ = commuting;
  return a;
}

ActionSystem ActionSystem::with_cell(std::size_t w, std::size_t t, std::size_t r, std::size_t m,
                                     std::size_t value) const {
  (void)act(*this, w, t, r, m);
  if (value >= module_.size()) throw Error(Errc::IndexOutOfRange, "value outside the module");
  ActionSystem copy = *this;
  copy.table_[w][t][r][m] = value;
  return copy;
}

std::size_t act(const ActionSystem& a, std::size_t w, std::size_t t, std::size_t r, std::size_t m) {
  if (w >= a.params() || t >= a.rings().size() || r >= a.rings()[t].size() || m >= a.module().size())
    throw Error(Errc::IndexOutOfRange, "action index out of range");
  return a.table()[w][t][r][m];
}

namespace {

ActionSystem ring_on_itself(const FiniteRing& ring, bool second_from_right, bool commuting) {
  const std::size_t n = ring.size();
  ActionTable table(1, std::vector<std::vector<std::vector<std::size_t>>>(
                           2, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n))));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t m = 0; m < n; ++m) {
      table[0][0][r][m] = ring.mul(r, m);
      table[0][1][r][m] = second_from_right ? ring.mul(m, r) : ring.mul(r, m);
    }
  }
  return ActionSystem::make({ring, ring}, 1, FiniteModule::additive_group(ring), std::move(table),
                            commuting);
}

}  // namespace

ActionSystem regular_bimodule(const FiniteRing& ring, bool commuting) {
  return ring_on_itself(ring, true, commuting);
}

ActionSystem double_left_module(const FiniteRing& ring, bool commuting) {
  return ring_on_itself(ring, false, commuting);
}

std::string_view axiom_name(AxiomKind kind) noexcept {
  switch (kind) {
    case AxiomKind::Unit: return "UnitViolation";
    case AxiomKind::Additivity: return "AdditivityViolation";
    case AxiomKind::RingAdditivity: return "RingAdditivityViolation";
    case AxiomKind::Associativity: return "AssociativityViolation";
    case AxiomKind::Commutativity: return "CommutativityViolation";
  }
  return "Unknown";
}

std::string AxiomViolation::describe(const ActionSystem& a) const {
  const auto& ring = a.rings()[t].elements();
  const auto& mod = a.module().elements();
  std::ostringstream os;
  os << axiom_name(kind) << " w=" << w << " t=" << t << " r=" << ring[r];
  if (s) os << " s=" << (t2 ? a.rings()[*t2].elements()[*s] : ring[*s]);
  if (w2) os << " w'=" << *w2;
  if (t2) os << " t'=" << *t2;
  os << " m=" << mod[m];
  if (m2) os << " m'=" << mod[*m2];
  os << " lhs=" << mod[lhs] << " rhs=" << mod[rhs];
  return os.str();
}

AxiomReport verify_module_axioms(const ActionSystem& a) {
  AxiomReport report;
  const auto& M = a.module();
  const auto& tab = a.table();
  auto full = [&] { return report.size() >= kMaxReportedViolations; };

  for (std::size_t w = 0; w < a.params() && !full(); ++w) {
    for (std::size_t t = 0; t < a.rings().size() && !full(); ++t) {
      const FiniteRing& R = a.rings()[t];
      const auto& on = tab[w][t];
      for (std::size_t m = 0; m < M.size() && !full(); ++m) {
        if (on[R.one()][m] != m) report.push_back({AxiomKind::Unit, w, t, R.one(), {}, m, {}, {}, {}, on[R.one()][m], m});
      }
      for (std::size_t r = 0; r < R.size() && !full(); ++r) {
        for (std::size_t m = 0; m < M.size() && !full(); ++m) {
          for (std::size_t m2 = 0; m2 < M.size() && !full(); ++m2) {
            const auto lhs = on[r][M.add(m, m2)];
            const auto rhs = M.add(on[r][m], on[r][m2]);
            if (lhs != rhs) report.push_back({AxiomKind::Additivity, w, t, r, {}, m, m2, {}, {}, lhs, rhs});
          }
        }
      }
      for (std::size_t r = 0; r < R.size() && !full(); ++r) {
        for (std::size_t s = 0; s < R.size() && !full(); ++s) {
          for (std::size_t m = 0; m < M.size() && !full(); ++m) {
            const auto lhs_sum = on[R.add(r, s)][m];
            const auto rhs_sum = M.add(on[r][m], on[s][m]);
            if (lhs_sum != rhs_sum)
              report.push_back({AxiomKind::RingAdditivity, w, t, r, s, m, {}, {}, {}, lhs_sum, rhs_sum});
            if (full()) break;
            const auto lhs_mul = on[R.mul(r, s)][m];
            const auto rhs_mul = on[r][on[s][m]];
            if (lhs_mul != rhs_mul)
              report.push_back({AxiomKind::Associativity, w, t, r, s, m, {}, {}, {}, lhs_mul, rhs_mul});
          }
        }
      }
    }
  }

  if (!a.commuting()) return report;
  for (std::size_t w = 0; w < a.params() && !full(); ++w) {
    for (std::size_t w2 = 0; w2 < a.params() && !full(); ++w2) {
      for (std::size_t t = 0; t < a.rings().size() && !full(); ++t) {
        for (std::size_t t2 = 0; t2 < a.rings().size() && !full(); ++t2) {
          if (t == t2) continue;
          const auto& first = tab[w][t];
          const auto& second = tab[w2][t2];
          for (std::size_t r = 0; r < a.rings()[t].size() && !full(); ++r) {
            for (std::size_t s = 0; s < a.rings()[t2].size() && !full(); ++s) {
              for (std::size_t m = 0; m < M.size() && !full(); ++m) {
                const auto lhs = first[r][second[s][m]];
                const auto rhs = second[s][first[r][m]];
                if (lhs != rhs)
                  report.push_back({AxiomKind::Commutativity, w, t, r, s, m, {}, w2, t2, lhs, rhs});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

std::size_t family_act(const ActionSystem& a, std::size_t w, const std::vector<std::size_t>& tuple,
                       std::size_t m) {
  if (tuple.size() != a.rings().size())
    throw Error(Errc::IndexOutOfRange, "family tuple needs one element per ring");
  for (std::size_t t = 0; t < tuple.size(); ++t) m = act(a, w, t, tuple[t], m);
  return m;
}

namespace {

const LevelSystem* find_system(const std::vector<LevelSystem>& level, const std::string& name) {
  for (const auto& s : level)
    if (s.name == name) return &s;
  return nullptr;
}

const NamedRing* find_ring(const std::vector<NamedRing>& base, const std::string& name) {
  for (const auto& r : base)
    if (r.name == name) return &r;
  return nullptr;
}

template <class Named>
void require_unique_names(const std::vector<Named>& items, std::size_t level) {
  std::set<std::string> seen;
  for (const auto& item : items) {
    if (item.name.empty()) throw Error(Errc::InvalidArgument, "unnamed object at level " + std::to_string(level));
    if (!seen.insert(item.name).second)
      throw Error(Errc::InvalidArgument, "duplicate name " + item.name + " at level " + std::to_string(level));
  }
}

}  // namespace

Hyperstructure build_multimodule_hyperstructure(const MultimoduleLevels& levels) {
  Hyperstructure h(levels.upper.size());
  require_unique_names(levels.base, 0);
  for (const auto& r : levels.base) h = h.with_element({0, r.name});

  for (std::size_t k = 1; k <= levels.upper.size(); ++k) {
    const auto& systems = levels.upper[k - 1];
    require_unique_names(systems, k);
    for (const auto& sys : systems) {
      if (sys.acting.size() != sys.system.rings().size())
        throw Error(Errc::BadLevel, sys.name + ": acting family and ring family differ in length");
      for (std::size_t t = 0; t < sys.acting.size(); ++t) {
        const std::string& name = sys.acting[t];
        const FiniteRing& ring = sys.system.rings()[t];
        if (k == 1) {
          const NamedRing* base = find_ring(levels.base, name);
          if (!base) throw Error(Errc::UnknownElement, sys.name + ": no ring " + name + " at level 0");
          if (!(base->ring == ring))
            throw Error(Errc::BadLevel, sys.name + ": ring " + std::to_string(t) + " is not " + name);
        } else {
          const LevelSystem* below = find_system(levels.upper[k - 2], name);
          if (!below)
            throw Error(Errc::UnknownElement,
                        sys.name + ": no object " + name + " at level " + std::to_string(k - 1));
          if (!(FiniteModule::additive_group(ring) == below->system.module()))
            throw Error(Errc::BadLevel,
                        sys.name + ": ring " + std::to_string(t) + " is not carried by " + name);
        }
      }
      AxiomReport report = verify_module_axioms(sys.system);
      if (!report.empty()) {
        const std::string what = sys.name + ": " + report.front().describe(sys.system);
        throw AxiomFailureError(what, std::move(report));
      }

      std::string payload;
      for (const auto& name : sys.acting) payload += (payload.empty() ? "" : ",") + name;
      h = h.add_bond(make_support(k - 1, sys.acting, Property{"acts-on", payload}), sys.name);
    }
  }
  return h;
}

}  // namespace hyper
