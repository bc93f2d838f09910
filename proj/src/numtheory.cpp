#include "hgs/numtheory.hpp"

#include "hgs/error.hpp"

namespace hgs {

std::vector<std::pair<long, int>> prime_valuations(long n) {
  if (n < 1) throw SpecError("prime_valuations: n must be >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int v = 0;
      while (n % p == 0) n /= p, ++v;
      out.emplace_back(p, v);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long radical(long n) {
  long r = 1;
  for (auto const& [p, v] : prime_valuations(n)) r *= p;
  return r;
}

long euler_phi(long n) {
  long phi = n;
  for (auto const& [p, v] : prime_valuations(n)) phi = phi / p * (p - 1);
  return phi;
}

long ipow(long base, int exp) {
  long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

namespace {
void partitions_rec(int v, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (v == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(v, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(v - part, part, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> partitions(int v) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(v, v, cur, out);
  return out;
}

}  // namespace hgs
