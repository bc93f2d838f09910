#ifndef HGS_NUMTHEORY_HPP_
#define HGS_NUMTHEORY_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace hgs {

// prime_valuations(12) = {(2,2),(3,1)}, ascending primes.
std::vector<std::pair<long, int>> prime_valuations(long n);

bool is_prime(long n);

// r(n) = product of distinct primes dividing n; r(1) = 1.
long radical(long n);

long euler_phi(long n);

long ipow(long base, int exp);

// All partitions of v, each partition sorted descending.
std::vector<std::vector<int>> partitions(int v);

}  // namespace hgs

#endif  // HGS_NUMTHEORY_HPP_
