#include "hgs/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hgs/error.hpp"
#include "hgs/hom_search.hpp"
#include "hgs/numtheory.hpp"

namespace hgs {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string name)
    : n_(order), table_(std::move(table)), name_(std::move(name)) {
  if (n_ < 1 || table_.size() != static_cast<std::size_t>(n_) * n_)
    throw SpecError("FiniteGroup: table size does not match order");
  validate();
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  order_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int ord = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++ord;
    }
    order_[a] = ord;
  }
}

void FiniteGroup::validate() const {
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw SpecError("FiniteGroup: index 0 is not a two-sided identity");
  std::vector<char> seen(n_);
  for (int a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n_; ++b) {
      int v = mul(a, b);
      if (v < 0 || v >= n_ || seen[v])
        throw SpecError("FiniteGroup: row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n_; ++b) {
      int v = mul(b, a);
      if (v < 0 || v >= n_ || seen[v])
        throw SpecError("FiniteGroup: column is not a permutation");
      seen[v] = 1;
    }
  }
  auto check = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw SpecError("FiniteGroup: associativity fails");
  };
  if (n_ <= 512) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0xB10C5EED);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int t = 0; t < 100000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

int FiniteGroup::power(int a, long e) const {
  long m = elem_order(a);
  e %= m;
  if (e < 0) e += m;
  int r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_nilpotent() const {
  // Nilpotent iff for each prime p the p-power-order elements form a
  // subgroup of full Sylow size.
  for (auto const& [p, v] : prime_valuations(n_)) {
    std::vector<int> pelems;
    for (int a = 0; a < n_; ++a) {
      long o = elem_order(a);
      while (o % p == 0) o /= p;
      if (o == 1) pelems.push_back(a);
    }
    if (static_cast<long>(pelems.size()) != ipow(p, v)) return false;
    std::set<int> pset(pelems.begin(), pelems.end());
    for (int a : pelems)
      for (int b : pelems)
        if (!pset.count(mul(a, b))) return false;
  }
  return true;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, elem_order(a));
  return e;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b)
      if (mul(a, b) != mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> FiniteGroup::order_multiset() const {
  std::vector<int> out = order_;
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t FiniteGroup::table_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(n_));
  for (int v : table_) mix(static_cast<std::uint64_t>(v));
  return h;
}

Subgroup generated_subgroup(FiniteGroup const& g, std::vector<int> const& gens) {
  std::set<int> elems{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier) {
      for (int s : gens) {
        int p = g.mul(e, s);
        if (elems.insert(p).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  std::vector<int> embedding(elems.begin(), elems.end());
  std::map<int, int> index;
  for (std::size_t i = 0; i < embedding.size(); ++i) index[embedding[i]] = i;
  int m = static_cast<int>(embedding.size());
  std::vector<int> table(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a * m + b] = index.at(g.mul(embedding[a], embedding[b]));
  return Subgroup{FiniteGroup(m, std::move(table), "sub of " + g.name()),
                  std::move(embedding)};
}

Subgroup sylow_subgroup(FiniteGroup const& g, long p) {
  if (!is_prime(p)) throw SpecError("sylow_subgroup: p must be prime");
  if (!g.is_nilpotent())
    throw InvariantError(
        "sylow_subgroup: group is not nilpotent, Sylow subgroup not unique");
  std::vector<int> pelems;
  for (int a = 0; a < g.order(); ++a) {
    long o = g.elem_order(a);
    while (o % p == 0) o /= p;
    if (o == 1) pelems.push_back(a);
  }
  auto sub = generated_subgroup(g, pelems);
  sub.group.set_name(g.name() + "_Sylow" + std::to_string(p));
  return sub;
}

std::vector<int> minimal_generating_set(FiniteGroup const& g) {
  std::vector<int> gens;
  std::set<int> have{0};
  while (static_cast<int>(have.size()) < g.order()) {
    int best = -1;
    for (int a = 0; a < g.order(); ++a) {
      if (have.count(a)) continue;
      if (best == -1 || g.elem_order(a) > g.elem_order(best)) best = a;
    }
    gens.push_back(best);
    auto sub = generated_subgroup(g, gens);
    have = std::set<int>(sub.embedding.begin(), sub.embedding.end());
  }
  return gens;
}

std::optional<std::vector<int>> isomorphic(FiniteGroup const& g,
                                           FiniteGroup const& h, int bound) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > bound)
    throw CapabilityError("isomorphic: order exceeds backtracking bound");
  if (g.order_multiset() != h.order_multiset()) return std::nullopt;
  if (g.center().size() != h.center().size()) return std::nullopt;

  auto gens = minimal_generating_set(g);
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int ord = g.elem_order(gens[i]);
    for (int a = 0; a < h.order(); ++a)
      if (h.elem_order(a) == ord) cands[i].push_back(a);
  }
  std::optional<std::vector<int>> found;
  search_injective_homs(g, h, gens, cands,
                        [&](std::vector<int> const& img) {
                          found = img;
                          return false;  // stop at first
                        });
  return found;
}

std::vector<long> abelian_invariants(FiniteGroup const& g) {
  if (!g.is_abelian())
    throw InvariantError("abelian_invariants: group is not abelian");
  std::vector<long> factors;
  for (auto const& [p, v] : prime_valuations(g.order())) {
    // a_k = log_p #{x : p^k x = 0}; conjugate partition counts recover the
    // cyclic factor multiplicities.
    std::vector<int> a(v + 1, 0);
    for (int k = 0; k <= v; ++k) {
      long pk = ipow(p, k);
      int cnt = 0;
      for (int x = 0; x < g.order(); ++x)
        if (g.power(x, pk) == 0) ++cnt;
      int log = 0;
      long c = cnt;
      while (c > 1) c /= p, ++log;
      a[k] = log;
    }
    std::vector<int> conj(v + 2, 0);
    for (int k = 1; k <= v; ++k) conj[k] = a[k] - a[k - 1];
    for (int k = 1; k <= v; ++k) {
      int mult = conj[k] - conj[k + 1];
      for (int i = 0; i < mult; ++i) factors.push_back(ipow(p, k));
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::string abelian_type_name(std::vector<long> const& invariants) {
  if (invariants.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) out += "x";
    out += "C" + std::to_string(invariants[i]);
  }
  return out;
}

}  // namespace hgs
