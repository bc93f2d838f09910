#include "hgs/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hgs/error.hpp"
#include "hgs/formulas.hpp"
#include "hgs/group_spec.hpp"
#include "hgs/holomorph.hpp"
#include "hgs/numtheory.hpp"
#include "hgs/ring.hpp"

namespace hgs {

namespace {

void check_eq(SuiteReport& rep, std::string name, long expected, long got) {
  CheckResult c;
  c.name = std::move(name);
  c.pass = expected == got;
  std::ostringstream os;
  os << "expected " << expected << ", got " << got;
  c.detail = os.str();
  rep.checks.push_back(std::move(c));
}

void check_true(SuiteReport& rep, std::string name, bool ok,
                std::string detail = "") {
  rep.checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
}

// Memoized brute-force count keyed by the two Cayley-table hashes.
long counted(FiniteGroup const& gamma, FiniteGroup const& g, EnumOptions opts) {
  static std::map<std::pair<std::uint64_t, std::uint64_t>, long> memo;
  auto key = std::make_pair(gamma.table_hash(), g.table_hash());
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long v = count_hgs(gamma, g, opts).count;
  memo[key] = v;
  return v;
}

// Distinct image subgroups of all regular embeddings gamma -> Hol(G).
std::vector<PermGroup> image_subgroups(FiniteGroup const& gamma,
                                       Holomorph const& hol, EnumOptions opts) {
  std::vector<PermGroup> out;
  for (auto const& beta : enumerate_regular_embeddings(gamma, hol, opts)) {
    out.push_back(PermGroup::from_elements(
        hol.base().order(),
        std::vector<Perm>(beta.image.begin(), beta.image.end())));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SuiteReport verify_prime_power(EnumOptions opts) {
  SuiteReport rep{"prime-power", {}};
  struct Row {
    char const* gamma;
    char const* g;
    long expected;
  };
  // Known counts for cyclic 2- and 3-power extensions at desk scale.
  Row const rows[] = {
      {"C4", "C4", 1},       {"C4", "C2xC2", 1},   {"C8", "C8", 2},
      {"C8", "D8", 2},       {"C8", "Q8", 2},      {"C8", "C4xC2", 0},
      {"C8", "C2xC2xC2", 0}, {"C9", "C9", 3},      {"C9", "C3xC3", 0},
  };
  for (auto const& r : rows) {
    long got = counted(construct(r.gamma), construct(r.g), opts);
    check_eq(rep, std::string("e(") + r.gamma + "," + r.g + ")", r.expected,
             got);
  }
  return rep;
}

SuiteReport verify_cyclic(std::vector<long> const& ns, EnumOptions opts) {
  SuiteReport rep{"cyclic", {}};
  for (long n : ns) {
    if (!nilpotent_census_complete(static_cast<int>(n))) {
      check_true(rep, "census complete for n=" + std::to_string(n), false,
                 "nilpotent census not certified at this order");
      continue;
    }
    auto pred = predict_cyclic(n);
    auto gamma = cyclic_group(static_cast<int>(n));
    std::vector<FiniteGroup> predicted_groups;
    for (auto const& tc : pred.per_type)
      predicted_groups.push_back(construct(tc.type_spec));

    long enum_nil = 0, enum_ab = 0;
    for (auto const& g : all_nilpotent_groups_of_order(static_cast<int>(n))) {
      long expected = 0;
      for (std::size_t i = 0; i < predicted_groups.size(); ++i)
        if (isomorphic(predicted_groups[i], g))
          expected += pred.per_type[i].count;
      long got = counted(gamma, g, opts);
      check_eq(rep,
               "n=" + std::to_string(n) + " e(C" + std::to_string(n) + "," +
                   g.name() + ")",
               expected, got);
      enum_nil += got;
      if (g.is_abelian()) enum_ab += got;
    }
    check_eq(rep, "n=" + std::to_string(n) + " e_nil", pred.e_nil, enum_nil);
    check_eq(rep, "n=" + std::to_string(n) + " e_ab", pred.e_ab, enum_ab);
  }
  return rep;
}

SuiteReport verify_n45(EnumOptions opts) {
  SuiteReport rep{"n45", {}};
  auto gamma = cyclic_group(45);
  auto hol = Holomorph::build(gamma);
  check_eq(rep, "|Hol(C45)|", 1080, static_cast<long>(hol.group().order()));
  auto result = count_hgs(gamma, hol, opts);
  check_eq(rep, "e(C45,C45)", 3, result.count);
  bool all_cyclic = true;
  for (auto const& beta : result.witnesses) {
    auto img = PermGroup::from_elements(
        45, std::vector<Perm>(beta.image.begin(), beta.image.end()));
    bool cyclic = false;
    for (auto const& p : img.elements())
      if (p.order() == 45) cyclic = true;
    if (!cyclic) all_cyclic = false;
  }
  check_true(rep, "all witnesses cyclic of order 45", all_cyclic);
  check_true(rep, "all_gamma_hypothesis(45)", all_gamma_hypothesis(45));
  check_eq(rep, "predicted total n/r(n)", 3, 45 / radical(45));
  return rep;
}

SuiteReport verify_nilpotent_product(int max_order, EnumOptions opts) {
  SuiteReport rep{"nilpotent-product", {}};
  for (int n = 2; n <= max_order; ++n) {
    if (!nilpotent_census_complete(n)) continue;
    if (prime_valuations(n).size() < 2) continue;  // product law is trivial
    auto census = all_nilpotent_groups_of_order(n);
    for (auto const& gamma : census) {
      auto gamma_dec = primary_decomposition(gamma);
      for (auto const& g : census) {
        long brute = counted(gamma, g, opts);
        long viaproduct = product_formula(
            gamma, g, [&](FiniteGroup const& gp, FiniteGroup const& hp) {
              return counted(gp, hp, opts);
            });
        check_eq(rep, "product law e(" + gamma.name() + "," + g.name() + ")",
                 viaproduct, brute);

        // Every regular embedding must have a diagonal component matrix.
        auto g_dec = HolomorphDecomposition::build(g);
        bool all_diagonal = true;
        std::size_t n_embeddings = 0;
        for (auto const& beta :
             enumerate_regular_embeddings(gamma, g_dec.hol, opts)) {
          ++n_embeddings;
          auto cm = component_matrix(gamma, beta, gamma_dec, g_dec);
          if (!cm.diagonal) all_diagonal = false;
        }
        check_true(rep,
                   "diagonality (" + gamma.name() + "," + g.name() + "), " +
                       std::to_string(n_embeddings) + " embeddings",
                   all_diagonal);
      }
    }
  }
  return rep;
}

SuiteReport verify_oracle(int max_n, EnumOptions opts) {
  SuiteReport rep{"oracle", {}};
  for (int n = 1; n <= max_n; ++n) {
    auto census = all_groups_of_order(n);
    if (census.empty()) {
      check_true(rep, "census for order " + std::to_string(n), false,
                 "no complete census");
      continue;
    }
    for (auto const& gamma : census) {
      auto entries = gp_oracle(gamma, max_n);
      long oracle_total = 0;
      for (auto const& e : entries) oracle_total += e.count;
      long enum_total = 0;
      for (auto const& g : census) {
        long got = counted(gamma, g, opts);
        enum_total += got;
        long oracle_count = 0;
        for (auto const& e : entries)
          if (isomorphic(e.sample, g)) oracle_count += e.count;
        check_eq(rep,
                 "oracle[" + gamma.name() + "] type " + g.name(), got,
                 oracle_count);
      }
      check_eq(rep, "oracle[" + gamma.name() + "] total", enum_total,
               oracle_total);
    }
  }
  return rep;
}

SuiteReport verify_centralizer(EnumOptions opts) {
  SuiteReport rep{"centralizer", {}};
  // Pairs arising in the prime-power, cyclic, n=45 and oracle suites.
  std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs;
  auto add_pair = [&](FiniteGroup const& gamma, FiniteGroup const& g) {
    pairs.emplace_back(gamma, g);
  };
  for (char const* s : {"C4", "C8", "C9"}) {
    auto gamma = construct(s);
    for (auto const& g : all_groups_of_order(gamma.order()))
      add_pair(gamma, g);
  }
  for (long n : {6, 10, 12, 15, 18, 20, 24}) {
    auto gamma = cyclic_group(static_cast<int>(n));
    for (auto const& g : all_nilpotent_groups_of_order(static_cast<int>(n)))
      add_pair(gamma, g);
  }
  add_pair(cyclic_group(45), cyclic_group(45));
  for (int n = 2; n <= 8; ++n)
    for (auto const& gamma : all_groups_of_order(n))
      for (auto const& g : all_groups_of_order(n)) add_pair(gamma, g);

  for (auto const& [gamma, g] : pairs) {
    Holomorph hol = Holomorph::build(g);
    auto subgroups = image_subgroups(gamma, hol, opts);
    bool ok = true;
    for (auto const& sub : subgroups) {
      auto cent = centralizer(hol.group(), sub);
      if (g.order() % cent.order() != 0) ok = false;
    }
    check_true(rep,
               "centralizer divides |G| (" + gamma.name() + "," + g.name() +
                   "), " + std::to_string(subgroups.size()) + " subgroups",
               ok);
  }
  return rep;
}

SuiteReport verify_ring_corr(int max_order, EnumOptions opts) {
  SuiteReport rep{"ring-corr", {}};
  for (int n = 1; n <= max_order; ++n) {
    for (auto const& g : all_abelian_groups_of_order(n)) {
      Holomorph hol = Holomorph::build(g);
      auto rings = enumerate_rings(g);

      // Round trips are table-exact, Sylow decomposition reassembles, and
      // T_p = { tau_h : h in G_p } for every prime.
      bool roundtrip_ok = true, tsyl_ok = true;
      for (auto const& r : rings) {
        auto t = subgroup_from_ring(r);
        auto back = ring_from_subgroup(hol, t);
        if (back.mult != r.mult) roundtrip_ok = false;
        ring_sylow_decompose(r);  // throws on any reassembly failure
        for (auto const& [p, v] : prime_valuations(n))
          if (!verify_t_syl(hol, t, p)) tsyl_ok = false;
      }
      check_true(rep, g.name() + " round-trips exact", roundtrip_ok);
      check_true(rep, g.name() + " Sylow parts of T match tau(G_p)", tsyl_ok);

      // Double enumeration: rings vs regular abelian subgroups of Hol(G).
      std::set<PermGroup> reg_ab;
      for (auto const& gamma : all_abelian_groups_of_order(n))
        for (auto& sub : image_subgroups(gamma, hol, opts))
          reg_ab.insert(std::move(sub));
      check_eq(rep, g.name() + " #rings vs #regular abelian subgroups",
               static_cast<long>(reg_ab.size()),
               static_cast<long>(rings.size()));

      for (auto const& gamma : all_abelian_groups_of_order(n)) {
        long via_rings = count_abelian_via_rings(gamma, hol).count;
        long via_hol = counted(gamma, g, opts);
        check_eq(rep,
                 "ring-corr e(" + gamma.name() + "," + g.name() + ")", via_hol,
                 via_rings);
      }
    }
  }
  return rep;
}

SuiteReport verify_predicates() {
  SuiteReport rep{"predicates", {}};
  struct Row {
    long n;
    bool dickson, all_gamma;
  };
  Row const rows[] = {
      {4, true, false},  {6, false, false}, {12, false, false},
      {15, true, true},  {45, true, true},  {255, true, true},
  };
  for (auto const& r : rows) {
    check_true(rep, "dickson(" + std::to_string(r.n) + ")",
               dickson_criterion(r.n) == r.dickson);
    check_true(rep, "all_gamma(" + std::to_string(r.n) + ")",
               all_gamma_hypothesis(r.n) == r.all_gamma);
  }
  bool implication = true;
  for (long n = 1; n <= 10000; ++n)
    if (all_gamma_hypothesis(n) &&
        !(dickson_criterion(n) && ab_thm_hypothesis(n)))
      implication = false;
  check_true(rep, "all_gamma => dickson and ab_thm for n <= 10^4",
             implication);
  return rep;
}

SuiteReport verify_properties(int threads) {
  SuiteReport rep{"properties", {}};
  std::vector<std::string> specs = {"C6",  "C8",   "C12",    "D8",  "Q8",
                                    "S3",  "D12",  "C2xC6",  "A4",  "C15",
                                    "Dic3", "C3xC3", "C2xC2xC2", "C10"};
  std::mt19937 rng(20240817);

  // Closure idempotence over randomized generator subsets.
  bool idem_ok = true;
  for (int t = 0; t < 40; ++t) {
    auto const& spec = specs[rng() % specs.size()];
    auto g = construct(spec);
    std::vector<Perm> gens;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i)
      gens.push_back(lambda(g, static_cast<int>(rng() % g.order())));
    auto pg = closure(gens, g.order());
    auto again = closure(pg.elements(), g.order());
    if (pg.elements() != again.elements()) idem_ok = false;
  }
  check_true(rep, "closure idempotence (40 random instances)", idem_ok);

  // Orbit-size uniformity and divisibility for normal subgroups of a
  // transitive group, randomized over the catalog.
  bool orbit_ok = true;
  for (int t = 0; t < 200; ++t) {
    auto const& spec = specs[rng() % specs.size()];
    auto g = construct(spec);
    // Normal closure of a random element.
    std::set<int> elems{0};
    std::vector<int> frontier{static_cast<int>(rng() % g.order())};
    elems.insert(frontier[0]);
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int c = 0; c < g.order(); ++c) {
        int y = g.mul(g.mul(c, x), g.inv(c));
        if (elems.insert(y).second) frontier.push_back(y);
      }
      for (int e : std::vector<int>(elems.begin(), elems.end())) {
        int y = g.mul(e, x);
        if (elems.insert(y).second) frontier.push_back(y);
      }
    }
    std::vector<Perm> ngens;
    for (int e : elems) ngens.push_back(lambda(g, e));
    auto nperm = closure(ngens, g.order());
    auto parts = orbits(nperm);
    std::size_t sz = parts[0].size();
    for (auto const& p : parts)
      if (p.size() != sz) orbit_ok = false;
    long m = static_cast<long>(parts.size());
    long h_over_n = g.order() / static_cast<long>(nperm.order());
    if (g.order() % m != 0 || h_over_n % m != 0) orbit_ok = false;
  }
  check_true(rep, "orbit uniformity for normal subgroups (200 instances)",
             orbit_ok);

  // Order laws: |Hol(G)| = |G| * |Aut(G)|, rho regular, Aut = Stab(0).
  bool law_ok = true;
  for (auto const& spec : specs) {
    auto g = construct(spec);
    auto hol = Holomorph::build(g);
    if (hol.group().order() != g.order() * hol.aut().order()) law_ok = false;
    if (!is_regular(right_translations(g))) law_ok = false;
    std::size_t stab = 0;
    for (auto const& h : hol.elements())
      if (h[0] == 0) ++stab;
    if (stab != hol.aut().order()) law_ok = false;
  }
  check_true(rep, "Aut/Hol order laws over catalog", law_ok);

  // Determinism: single- vs multi-threaded enumeration byte-identical.
  bool det_ok = true;
  for (auto const& [gs, hs] : std::vector<std::pair<char const*, char const*>>{
           {"C12", "C12"}, {"C8", "D8"}, {"C2xC2xC2", "C2xC2xC2"}}) {
    auto gamma = construct(gs);
    auto hol = Holomorph::build(construct(hs));
    auto one = enumerate_regular_embeddings(gamma, hol, EnumOptions{1});
    auto many = enumerate_regular_embeddings(gamma, hol,
                                             EnumOptions{std::max(2, threads)});
    if (one != many) det_ok = false;
  }
  check_true(rep, "thread-count determinism of enumeration", det_ok);
  return rep;
}

std::string render_report(SuiteReport const& report) {
  std::ostringstream os;
  for (auto const& c : report.checks)
    os << (c.pass ? "PASS" : "FAIL") << " [" << report.suite << "] " << c.name
       << (c.pass || c.detail.empty() ? "" : ": " + c.detail) << "\n";
  os << (report.pass() ? "PASS" : "FAIL") << " suite " << report.suite << " ("
     << report.checks.size() << " checks)\n";
  return os.str();
}

}  // namespace hgs
