#ifndef HGS_VERIFY_HPP_
#define HGS_VERIFY_HPP_

#include <string>
#include <vector>

#include "hgs/enumerate.hpp"

namespace hgs {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // "expected ... got ..." on failure, summary on pass
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (auto const& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Prime-power cyclic counts against the known table for C4, C8, C9.
SuiteReport verify_prime_power(EnumOptions opts = {});

/// Per-type enumeration vs predict_cyclic over complete nilpotent censuses.
SuiteReport verify_cyclic(std::vector<long> const& ns, EnumOptions opts = {});

/// Single-generator scan of Hol(C45): 3 structures, all cyclic.
SuiteReport verify_n45(EnumOptions opts = {});

/// Product law e(Gamma,G) = prod_p e(Gamma_p,G_p) over all nilpotent pairs
/// of equal order <= max_order with complete censuses, plus diagonality of
/// every enumerated component matrix.
SuiteReport verify_nilpotent_product(int max_order, EnumOptions opts = {});

/// gp_oracle per-type totals vs count_hgs sums for catalog Gamma, |Gamma| <= max_n.
SuiteReport verify_oracle(int max_n, EnumOptions opts = {});

/// Centralizer order of every image subgroup arising in the other suites
/// divides |G|.
SuiteReport verify_centralizer(EnumOptions opts = {});

/// Ring correspondence: double-enumeration equality, exact round-trips,
/// Sylow reassembly, and ring-route counts vs holomorph counts, for abelian
/// G with |G| <= max_order.
SuiteReport verify_ring_corr(int max_order, EnumOptions opts = {});

/// Arithmetic predicates on hand-checked instances plus the implication
/// sweep all_gamma => dickson and ab_thm for n <= 10^4.
SuiteReport verify_predicates();

/// Randomized property checks: closure idempotence, orbit-size uniformity
/// for normal subgroups, Aut/Hol order laws, and thread determinism.
SuiteReport verify_properties(int threads);

std::string render_report(SuiteReport const& report);

}  // namespace hgs

#endif  // HGS_VERIFY_HPP_
