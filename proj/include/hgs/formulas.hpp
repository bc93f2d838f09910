#ifndef HGS_FORMULAS_HPP_
#define HGS_FORMULAS_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hgs/group.hpp"

namespace hgs {

/// Per-type count with the type named by a group-core spec string, so that
/// comparisons against enumeration can go through an isomorphism test.
struct TypeCount {
  std::string type_spec;
  long count = 0;
};

struct CyclicPrediction {
  long n = 0;
  int theorem_case = 0;  // 1: 4 does not divide n, 2: n = 4 mod 8, 3: 8 | n
  long e_nil = 0;
  long e_ab = 0;
  std::vector<TypeCount> per_type;  // covers every type with nonzero count
};

/// Per-type counts for a cyclic group of prime-power order p^v.
std::vector<TypeCount> kohl_counts(long p, int v);

/// Nilpotent/abelian per-type counts for a cyclic group of order n.
CyclicPrediction predict_cyclic(long n);

/// e(Gamma, G) for nilpotent groups of equal order as the product of the
/// prime-power leaf counts supplied by `leaf`.
long product_formula(FiniteGroup const& gamma, FiniteGroup const& g,
                     std::function<long(FiniteGroup const&, FiniteGroup const&)>
                         const& leaf);

enum class Family { kAbelian, kNilpotent };

struct AggregateResult {
  long total = 0;
  bool coverage_certified = false;
};

/// Sum of per-type counts over a caller-supplied type list.  Coverage is
/// certified when the list provably covers every abelian (resp. nilpotent)
/// type of order n.
AggregateResult aggregate(long n, Family family,
                          std::vector<TypeCount> const& per_type);

/// Theorem hypothesis: every p | n has v_p < p-1, or p <= 3 and v_p < p.
bool ab_thm_hypothesis(long n);

/// Every group of order n is abelian iff v_p <= 2 for all p | n and
/// p does not divide q^{v_q} - 1 for all primes p, q | n.
bool dickson_criterion(long n);

/// v_p <= 2, p not dividing q^{v_q}-1, and 4 does not divide n.  When true,
/// a cyclic extension of degree n has exactly n/r(n) structures, all cyclic.
bool all_gamma_hypothesis(long n);

/// FCC hypothesis for an abelian p-group of p-rank m: p > m + 1.
bool fcc_hypothesis(long p, int rank);

}  // namespace hgs

#endif  // HGS_FORMULAS_HPP_
