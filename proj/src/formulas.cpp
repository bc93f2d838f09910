#include "hgs/formulas.hpp"

#include <algorithm>

#include "hgs/error.hpp"
#include "hgs/group_spec.hpp"
#include "hgs/numtheory.hpp"

namespace hgs {

std::vector<TypeCount> kohl_counts(long p, int v) {
  if (!is_prime(p)) throw SpecError("kohl_counts: p must be prime");
  if (v < 1) throw SpecError("kohl_counts: v must be >= 1");
  long pv = ipow(p, v);
  std::string c = "C" + std::to_string(pv);
  if (p > 2) return {{c, ipow(p, v - 1)}};
  if (v == 1) return {{c, 1}};
  if (v == 2) return {{"C4", 1}, {"C2xC2", 1}};
  long m = ipow(2, v - 2);
  return {{c, m},
          {"D" + std::to_string(pv), m},
          {"Q" + std::to_string(pv), m}};
}

CyclicPrediction predict_cyclic(long n) {
  if (n < 1) throw SpecError("predict_cyclic: n must be >= 1");
  CyclicPrediction out;
  out.n = n;
  long r = radical(n);
  std::string cn = "C" + std::to_string(n);
  if (n % 4 != 0) {
    out.theorem_case = 1;
    out.e_nil = out.e_ab = n / r;
    out.per_type = {{cn, n / r}};
  } else if (n % 8 == 4) {
    out.theorem_case = 2;
    out.e_nil = out.e_ab = n / r;
    out.per_type = {{cn, n / (2 * r)},
                    {"C2xC" + std::to_string(n / 2), n / (2 * r)}};
  } else {
    out.theorem_case = 3;
    out.e_nil = 3 * n / (2 * r);
    out.e_ab = n / (2 * r);
    long v2 = 0, odd = n;
    while (odd % 2 == 0) odd /= 2, ++v2;
    long two_part = n / odd;
    std::string suffix = odd > 1 ? "xC" + std::to_string(odd) : "";
    out.per_type = {{cn, n / (2 * r)},
                    {"D" + std::to_string(two_part) + suffix, n / (2 * r)},
                    {"Q" + std::to_string(two_part) + suffix, n / (2 * r)}};
  }
  return out;
}

long product_formula(FiniteGroup const& gamma, FiniteGroup const& g,
                     std::function<long(FiniteGroup const&, FiniteGroup const&)>
                         const& leaf) {
  if (gamma.order() != g.order())
    throw SpecError("product_formula: order mismatch");
  if (!gamma.is_nilpotent() || !g.is_nilpotent())
    throw InvariantError("product_formula: both groups must be nilpotent");
  long prod = 1;
  for (auto const& [p, v] : prime_valuations(gamma.order())) {
    auto gp = sylow_subgroup(gamma, p);
    auto hp = sylow_subgroup(g, p);
    prod *= leaf(gp.group, hp.group);
    if (prod == 0) return 0;
  }
  return prod;
}

AggregateResult aggregate(long n, Family family,
                          std::vector<TypeCount> const& per_type) {
  AggregateResult out;
  std::vector<FiniteGroup> listed;
  for (auto const& tc : per_type) {
    out.total += tc.count;
    listed.push_back(construct(tc.type_spec));
    if (listed.back().order() != n)
      throw SpecError("aggregate: type " + tc.type_spec +
                      " has wrong order for n = " + std::to_string(n));
  }
  // Coverage check against the census, by isomorphism (not name).
  std::vector<FiniteGroup> census;
  if (family == Family::kAbelian) {
    census = all_abelian_groups_of_order(static_cast<int>(n));
  } else {
    if (!nilpotent_census_complete(static_cast<int>(n))) return out;
    census = all_nilpotent_groups_of_order(static_cast<int>(n));
  }
  for (auto const& c : census) {
    bool matched = false;
    for (auto const& l : listed)
      if (isomorphic(c, l)) {
        matched = true;
        break;
      }
    if (!matched) return out;  // under-covered: refuse to certify
  }
  out.coverage_certified = true;
  return out;
}

bool ab_thm_hypothesis(long n) {
  if (n < 1) throw SpecError("ab_thm_hypothesis: n must be >= 1");
  for (auto const& [p, v] : prime_valuations(n))
    if (!(v < p - 1 || (p <= 3 && v < p))) return false;
  return true;
}

bool dickson_criterion(long n) {
  if (n < 1) throw SpecError("dickson_criterion: n must be >= 1");
  auto pv = prime_valuations(n);
  for (auto const& [p, v] : pv)
    if (v > 2) return false;
  for (auto const& [p, vp] : pv)
    for (auto const& [q, vq] : pv)
      if ((ipow(q, vq) - 1) % p == 0) return false;
  return true;
}

bool all_gamma_hypothesis(long n) {
  return dickson_criterion(n) && n % 4 != 0;
}

bool fcc_hypothesis(long p, int rank) { return p > rank + 1; }

}  // namespace hgs
