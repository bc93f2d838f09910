// Acceptance gate: one criterion per invocation (argv[1] in 1..9), one
// PASS/FAIL line per criterion on stdout, exit 0 iff the criterion holds.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "hgs/enumerate.hpp"
#include "hgs/verify.hpp"

namespace {

int run(int criterion) {
  using namespace hgs;
  EnumOptions opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());

  SuiteReport rep;
  char const* label = nullptr;
  switch (criterion) {
    case 1:
      label = "criterion 1: prime-power cyclic counts";
      rep = verify_prime_power(opts);
      break;
    case 2:
      label = "criterion 2: cyclic per-type predictions n in {6,10,12,15,18,20,24}";
      rep = verify_cyclic({6, 10, 12, 15, 18, 20, 24}, opts);
      break;
    case 3:
      label = "criterion 3: n = 45 scan of Hol(C45)";
      rep = verify_n45(opts);
      break;
    case 4:
      label = "criterion 4: nilpotent product law and diagonality, order <= 24";
      rep = verify_nilpotent_product(24, opts);
      break;
    case 5:
      label = "criterion 5: subgroup-oracle agreement, |Gamma| <= 8";
      rep = verify_oracle(8, opts);
      break;
    case 6:
      label = "criterion 6: centralizer order divides |G|";
      rep = verify_centralizer(opts);
      break;
    case 7:
      label = "criterion 7: ring correspondence, abelian order <= 12";
      rep = verify_ring_corr(12, opts);
      break;
    case 8:
      label = "criterion 8: arithmetic predicates and implication sweep";
      rep = verify_predicates();
      break;
    case 9:
      label = "criterion 9: property suite";
      rep = verify_properties(opts.threads);
      break;
    default:
      std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
      return 2;
  }

  for (auto const& c : rep.checks)
    if (!c.pass)
      std::fprintf(stderr, "  check failed: %s (%s)\n", c.name.c_str(),
                   c.detail.c_str());
  std::printf("%s %s (%zu checks)\n", rep.pass() ? "PASS" : "FAIL", label,
              rep.checks.size());
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
    return 2;
  }
  return run(std::atoi(argv[1]));
}
