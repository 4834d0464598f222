// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli_harness.hpp"
#include "generators.hpp"
#include "hyper/entangle.hpp"
#include "hyper/gft.hpp"
#include "hyper/io.hpp"
#include "hyper/multimod.hpp"
#include "hyper/nest.hpp"
#include "oracles.hpp"

using namespace hyper;
using namespace hyper::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// 1. Law suite over random structures.
Outcome law_suite() {
  std::mt19937_64 rng(1);
  const auto start = Clock::now();
  std::size_t violations = 0, identity_checks = 0, identity_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto h = random_hyperstructure(rng, 4, 200);
    violations += validate(h).size();
    for (const auto& b : h.bonds()) {
      if (!b.is_identity) continue;
      ++identity_checks;
      const Support& s = h.boundary(b.id);
      if (s.members.size() != 1 || s != b.support || !h.contains(s.members.front())) ++identity_failures;
    }
  }
  const double t = seconds_since(start);
  return {violations == 0 && identity_failures == 0 && t < 10.0,
          "1000 structures, " + std::to_string(violations) + " violations, " +
              std::to_string(identity_checks) + " identity bonds checked, " +
              std::to_string(identity_failures) + " failed, " + fmt(t) + " s (limit 10 s)"};
}

// 2. A duplicate bond id with another support is always reported.
Outcome disjointness_fuzz() {
  std::mt19937_64 rng(2);
  std::size_t injected = 0, detected = 0, clashes = 0;
  while (injected < 1000) {
    const auto h = random_hyperstructure(rng, 4, 100);
    if (h.bonds().empty()) continue;
    const Bond& victim = h.bonds()[uniform(rng, 0, h.bonds().size() - 1)];
    Bond intruder = victim;
    intruder.is_identity = false;
    const auto& below = h.level(victim.id.level - 1);
    std::vector<std::string> keys(below.begin(), below.end());
    std::shuffle(keys.begin(), keys.end(), rng);
    keys.resize(uniform(rng, 1, keys.size()));
    intruder.support = make_support(victim.id.level - 1, keys, victim.support.property);
    if (intruder.support == victim.support) intruder.support.property.tag += "'";

    std::vector<Bond> bonds = h.bonds();
    bonds.push_back(intruder);
    const auto broken = Hyperstructure::from_parts(h.depth(), h.levels(), bonds, h.obs());
    ++injected;
    for (const auto& v : validate(broken)) {
      if (v.kind == ViolationKind::DisjointnessViolation && v.where == victim.id) {
        ++detected;
        break;
      }
    }
    try {
      (void)h.add_bond(intruder.support, victim.id.key);
    } catch (const Error& e) {
      if (e.code() == Errc::BondClash) ++clashes;
    }
  }
  return {detected == injected && clashes == injected,
          std::to_string(detected) + "/" + std::to_string(injected) + " injections reported by validate, " +
              std::to_string(clashes) + "/" + std::to_string(injected) + " refused by add_bond"};
}

// 3. SVD rank-1 test against row reduction.
Outcome oracle_equivalence() {
  std::mt19937_64 rng(3);
  std::size_t agree = 0, total = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 600; ++trial) {
    std::vector<std::size_t> dims;
    std::size_t dim = 1;
    const std::size_t factors = uniform(rng, 2, 6);
    for (std::size_t f = 0; f < factors; ++f) {
      const std::size_t d = uniform(rng, 2, 4);
      if (dim * d > 64) break;
      dims.push_back(d);
      dim *= d;
    }
    if (dims.size() < 2) continue;
    const std::size_t split = uniform(rng, 1, dims.size() - 1);
    const std::vector<std::size_t> l(dims.begin(), dims.begin() + split), r(dims.begin() + split, dims.end());
    const TensorState parts[] = {random_state(rng, l), random_state(rng, r)};
    const auto s = trial % 2 ? tensor_product(parts) : random_state(rng, dims);

    std::vector<std::size_t> left(split);
    for (std::size_t i = 0; i < split; ++i) left[i] = i;
    std::size_t rows = 1;
    for (auto d : l) rows *= d;
    const auto test = is_product(s, left);
    ++total;
    if (test.product == (row_reduction_rank(reshape(s.amps(), rows)) == 1)) ++agree;
    if (test.factors)
      worst = std::max(worst, distance(kronecker(test.factors->first.amps(), test.factors->second.amps()), s.amps()));
  }
  return {total >= 500 && agree == total && worst < 1e-8,
          std::to_string(agree) + "/" + std::to_string(total) + " agree, worst product reconstruction " +
              fmt(worst) + " (limit 1e-8)"};
}

// 4. Order ladder.
Outcome order_ladder() {
  const auto start = Clock::now();
  const auto tree = PartitionTree::blocks({{1, 2}, {3, 4}});
  const TensorState bb_parts[] = {phi_plus(), phi_plus()};
  const TensorState mm_parts[] = {psi_minus(), psi_minus()};
  const auto pp = tensor_product(bb_parts);
  const auto mm = tensor_product(mm_parts);
  std::vector<cplx> sum(16);
  for (std::size_t i = 0; i < 16; ++i) sum[i] = pp.amps()[i] + mm.amps()[i];
  const auto ghz = make_named("ghz", 3);
  const TensorState g_parts[] = {ghz, ghz, ghz};

  const std::size_t o0 = entanglement_order(TensorState::basis({2, 2, 2, 2}, {0, 0, 0, 0}), tree).order;
  const std::size_t o1 = entanglement_order(pp, tree).order;
  const std::size_t o2 = entanglement_order(TensorState::make({2, 2, 2, 2}, sum), tree).order;
  const std::size_t og = entanglement_order(tensor_product(g_parts),
                                            PartitionTree::blocks({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}))
                             .order;
  const double t = seconds_since(start);
  return {o0 == 0 && o1 == 1 && o2 == 2 && og == 1 && t < 1.0,
          "orders " + std::to_string(o0) + "/" + std::to_string(o1) + "/" + std::to_string(o2) +
              ", GHZ3^3 " + std::to_string(og) + " (want 0/1/2, 1), " + fmt(t) + " s (limit 1 s)"};
}

// 5. dissolve inverts bond_k at levels 1 and 2.
Outcome dissolution_round_trip() {
  std::mt19937_64 rng(5);
  std::size_t ok = 0, total = 0;
  double worst = 0.0;
  auto check = [&](const TensorState& s, std::size_t level, const std::vector<std::vector<TensorState>>& rows,
                   const std::vector<cplx>& alpha) {
    ++total;
    const auto d = dissolve(s);
    bool same = d.level == level && d.coefficients == alpha && d.rows.size() == rows.size();
    for (std::size_t j = 0; same && j < rows.size(); ++j) {
      same = d.rows[j].size() == rows[j].size();
      for (std::size_t i = 0; same && i < rows[j].size(); ++i) same = d.rows[j][i] == rows[j][i];
    }
    const auto again = bond_k(d.level, d.rows, d.coefficients);
    worst = std::max(worst, distance(again.amps(), s.amps()));
    if (same && again.approx_equal(s, 1e-9)) ++ok;
  };
  auto coefficients = [&](std::size_t n) {
    std::vector<cplx> a = random_amps(rng, n);
    return a;
  };

  for (int trial = 0; trial < 50; ++trial) {
    // Level 1: 2-3 qubits, 2-3 rows of single-qubit states.
    const std::size_t width = uniform(rng, 2, 3), height = uniform(rng, 2, 3);
    std::vector<std::vector<TensorState>> rows(height);
    for (auto& row : rows)
      for (std::size_t i = 0; i < width; ++i) row.push_back(random_state(rng, {2}));
    const auto alpha = coefficients(height);
    check(bond_k(1, rows, alpha), 1, rows, alpha);

    // Level 2: 6 qubits, rows of three level-1 bonded pairs.
    std::vector<std::vector<TensorState>> upper(2);
    for (auto& row : upper) {
      for (int b = 0; b < 3; ++b) {
        std::vector<std::vector<TensorState>> pair_rows(2);
        for (auto& pr : pair_rows) pr = {random_state(rng, {2}), random_state(rng, {2})};
        row.push_back(bond_k(1, pair_rows, coefficients(2)));
      }
    }
    const auto beta = coefficients(2);
    check(bond_k(2, upper, beta), 2, upper, beta);
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " round trips exact, worst re-bond distance " + fmt(worst) + " (limit 1e-9)"};
}

// 6. Multimodule verification.
Outcome multimodule_verification() {
  const auto z6 = FiniteRing::integers_mod(6);
  const auto bi = regular_bimodule(z6, true);
  const auto start = Clock::now();
  const bool z6_ok = verify_module_axioms(bi).empty();
  const double t = seconds_since(start);

  const auto m2 = FiniteRing::matrices_2x2_mod(2);
  const auto dl = verify_module_axioms(double_left_module(m2, true));
  bool witness_ok = !dl.empty();
  for (const auto& v : dl) {
    witness_ok = witness_ok && v.kind == AxiomKind::Commutativity && v.lhs != v.rhs &&
                 v.lhs == m2.mul(v.r, m2.mul(*v.s, v.m)) && v.rhs == m2.mul(*v.s, m2.mul(v.r, v.m));
  }

  std::mt19937_64 rng(6);
  std::size_t detected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t tt = uniform(rng, 0, 1), r = uniform(rng, 0, 5), m = uniform(rng, 0, 5);
    const std::size_t value = (act(bi, 0, tt, r, m) + uniform(rng, 1, 5)) % 6;
    if (!verify_module_axioms(bi.with_cell(0, tt, r, m, value)).empty()) ++detected;
  }
  return {z6_ok && witness_ok && detected == 100 && t < 1.0,
          std::string("Z6 bimodule ") + (z6_ok ? "passes" : "fails") + " in " + fmt(t) +
              " s (limit 1 s), M2(Z2) double-left " +
              (witness_ok ? "fails with " + dl.front().describe(double_left_module(m2, true)) : "gives no valid witness") +
              ", corruptions detected " + std::to_string(detected) + "/100"};
}

// 7. Globalizer.
Outcome globalizer() {
  std::mt19937_64 rng(7);
  std::size_t chains_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_chain(rng);
    const std::size_t n = uniform(rng, 2, 12);
    const bool mul = trial % 2 == 1;
    const auto m = mul ? TableMonoid::multiplicative_mod(n) : TableMonoid::additive_mod(n);
    LeafValues leaves;
    std::size_t direct = mul ? 1 % n : 0;
    for (const auto& x : c.leaves) {
      const std::size_t v = uniform(rng, 0, n - 1);
      leaves[x] = v;
      direct = mul ? direct * v % n : (direct + v) % n;
    }
    const auto r = globalize(assign(c.h, m, leaves));
    if (r.global && std::get<std::size_t>(*r.global) == direct) ++chains_ok;
  }

  const Property g{"glue", {}};
  const auto diamond = Hyperstructure(2)
                           .with_elements(0, std::vector<std::string>{"a", "b", "c"})
                           .add_bond(make_support(0, std::vector<std::string>{"a", "b"}, g), "p")
                           .add_bond(make_support(0, std::vector<std::string>{"b", "c"}, g), "q")
                           .add_bond(make_support(1, std::vector<std::string>{"p", "q"}, g), "t");
  const auto z10 = TableMonoid::multiplicative_mod(10);
  const auto d = globalize(assign(diamond, z10, {{"a", std::size_t{1}}, {"b", std::size_t{2}}, {"c", std::size_t{1}}}));
  const bool diamond_ok = !d.glue_report.empty() && !d.global;

  const auto pair = Hyperstructure(1)
                        .with_elements(0, std::vector<std::string>{"a", "b"})
                        .add_bond(make_support(0, std::vector<std::string>{"a", "b"}, g), "t");
  const auto [before, after] = tunnel(assign(pair, z10, {{"a", std::size_t{2}}, {"b", std::size_t{3}}}),
                                      {{"b", std::size_t{7}}});
  const auto ob = std::get<std::size_t>(before), oa = std::get<std::size_t>(after);
  return {chains_ok == 100 && diamond_ok && ob == 6 && oa == 4,
          "chains " + std::to_string(chains_ok) + "/100 match the direct fold, diamond " +
              (diamond_ok ? "reports " + std::to_string(d.glue_report.size()) + " glue issue(s)" : "not reported") +
              ", tunnel (" + std::to_string(ob) + ", " + std::to_string(oa) + ") (want (6, 4))"};
}

// 8. Fusion inequality.
Outcome fusion_inequality() {
  auto single_bond = [](std::size_t n) {
    std::vector<std::string> keys;
    for (std::size_t i = 0; i < n; ++i) keys.push_back("e" + std::to_string(i));
    return Hyperstructure(1).with_elements(0, keys).add_bond(make_support(0, keys, Property{"bond", {}}), "b");
  };
  const auto fused = fuse(single_bond(3), single_bond(2), false);
  const auto five = single_bond(5);
  const auto sf = structural_signature(fused), s5 = structural_signature(five);
  const bool same_elements = sf[0].elements == s5[0].elements;
  const bool differ = sf != s5 && sf[1].bonds != s5[1].bonds && sf[1].support_sizes != s5[1].support_sizes;
  std::ostringstream os;
  os << "level 0: " << sf[0].elements << " vs " << s5[0].elements << " elements; level-1 bonds " << sf[1].bonds
     << " vs " << s5[1].bonds << "; support sizes {";
  for (std::size_t i = 0; i < sf[1].support_sizes.size(); ++i) os << (i ? "," : "") << sf[1].support_sizes[i];
  os << "} vs {";
  for (std::size_t i = 0; i < s5[1].support_sizes.size(); ++i) os << (i ? "," : "") << s5[1].support_sizes[i];
  os << "}";
  return {same_elements && differ, os.str()};
}

// 9. Prefactorization.
Outcome prefactorization() {
  std::mt19937_64 rng(9);
  std::size_t commuting = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = random_nesting(rng);
    MonoidAssignment<MultisetMonoid> a{MultisetMonoid(MultisetMonoid::Mode::Union), {}};
    auto points = [](const PointSet& s) {
      Multiset m;
      for (const auto& p : s) m[p] = 1;
      return m;
    };
    for (const auto& s : n.inner) a.values[s] = points(s);
    for (const auto& s : n.mid) a.values[s] = points(s);
    a.values[n.outer] = points(n.outer);
    if (check_prefactorization(n.topology, a, n.inner, n.mid, n.outer).commutes) ++commuting;
  }

  // Exhaustive search for a failing Z6 value map on U ⊂ V ⊂ W.
  const auto t = FiniteTopology::make({"a", "b", "c"}, {{}, {"a"}, {"a", "b"}, {"a", "b", "c"}});
  const PointSet u{"a"}, v{"a", "b"}, w{"a", "b", "c"};
  std::optional<PrefactorizationResult<TableMonoid>> rejected;
  std::string values;
  for (std::size_t x = 0; x < 6 && !rejected; ++x)
    for (std::size_t y = 0; y < 6 && !rejected; ++y)
      for (std::size_t z = 0; z < 6 && !rejected; ++z) {
        MonoidAssignment<TableMonoid> a{TableMonoid::multiplicative_mod(6), {{u, x}, {v, y}, {w, z}}};
        auto r = check_prefactorization(t, a, {u}, {v}, w);
        if (!r.commutes) {
          rejected = r;
          values = "F(U)=" + std::to_string(x) + " F(V)=" + std::to_string(y) + " F(W)=" + std::to_string(z);
        }
      }
  return {commuting == 100 && rejected.has_value(),
          std::to_string(commuting) + "/100 free nestings commute; Z6 " +
              (rejected ? values + " rejected with routed " + std::to_string(rejected->routed) + " vs direct " +
                              std::to_string(rejected->direct)
                        : std::string("found no failing instance"))};
}

// 10. CLI conformance.
Outcome cli_conformance() {
  CliHarness cli(HYPERCTL_PATH);
  std::mt19937_64 rng(10);
  std::size_t round_trips = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_hyperstructure(rng, 3, 40);
    const auto in = cli.write("in.json", io::to_json(h).dump());
    const auto out = cli.path("out.json");
    const auto r = cli.run("validate " + in + " --emit " + out);
    if (r.exit_code == 0 && io::hyperstructure_from_json(io::read_json_file(out)) == h) ++round_trips;
  }

  const auto hyper = cli.write("h.json", cli_inputs::pair_hyper);
  const auto validate_r = cli.run("validate " + hyper);
  const auto classify_r = cli.run("classify-state " + cli.write("s.json", cli_inputs::bell_bell) + " --tree " +
                                  cli.write("t.json", cli_inputs::two_blocks));
  const auto glob_r = cli.run("globalize " + cli.write("a.json", cli_inputs::z10_assignment) + " --hyper " + hyper);
  const auto bad_flag = cli.run("validate " + hyper + " --no-such-flag");

  const bool v_ok = validate_r.exit_code == 0 && validate_r.last == nlohmann::json{{"violations", 0}};
  const bool c_ok = classify_r.exit_code == 0 && classify_r.last.is_object() && classify_r.last["order"] == 1;
  const bool g_ok = glob_r.exit_code == 0 && glob_r.last == nlohmann::json{{"global", "6"}};
  const bool u_ok = bad_flag.exit_code == 2;
  return {round_trips == 20 && v_ok && c_ok && g_ok && u_ok,
          std::to_string(round_trips) + "/20 round trips; validate " + (v_ok ? "ok" : "wrong") + ", classify-state " +
              (c_ok ? "ok" : "wrong") + ", globalize " + (g_ok ? "ok" : "wrong") + ", unknown flag exit " +
              std::to_string(bad_flag.exit_code)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"law suite", law_suite},
      {"disjointness fuzz", disjointness_fuzz},
      {"entanglement oracle equivalence", oracle_equivalence},
      {"order ladder", order_ladder},
      {"dissolution round trip", dissolution_round_trip},
      {"multimodule verification", multimodule_verification},
      {"globalizer", globalizer},
      {"fusion inequality", fusion_inequality},
      {"prefactorization", prefactorization},
      {"CLI conformance", cli_conformance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
