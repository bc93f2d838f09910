#include "hgs/holomorph.hpp"

#include <algorithm>
#include <numeric>

#include "hgs/error.hpp"
#include "hgs/hom_search.hpp"
#include "hgs/numtheory.hpp"

namespace hgs {

PermGroup automorphism_group(FiniteGroup const& g, int bound) {
  if (g.order() > bound)
    throw CapabilityError("automorphism_group: order " +
                          std::to_string(g.order()) + " exceeds bound " +
                          std::to_string(bound));
  auto gens = minimal_generating_set(g);
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int ord = g.elem_order(gens[i]);
    for (int a = 0; a < g.order(); ++a)
      if (g.elem_order(a) == ord) cands[i].push_back(a);
  }
  std::vector<Perm> auts;
  search_injective_homs(g, g, gens, cands, [&](std::vector<int> const& img) {
    auts.emplace_back(img);
    return true;
  });
  return PermGroup::from_elements(g.order(), std::move(auts));
}

Perm rho(FiniteGroup const& g, int elem) {
  std::vector<int> img(g.order());
  int gi = g.inv(elem);
  for (int x = 0; x < g.order(); ++x) img[x] = g.mul(x, gi);
  return Perm(std::move(img));
}

Perm lambda(FiniteGroup const& g, int elem) {
  std::vector<int> img(g.order());
  for (int x = 0; x < g.order(); ++x) img[x] = g.mul(elem, x);
  return Perm(std::move(img));
}

namespace {
PermGroup translations(FiniteGroup const& g, bool right) {
  std::vector<Perm> elems;
  elems.reserve(g.order());
  for (int a = 0; a < g.order(); ++a)
    elems.push_back(right ? rho(g, a) : lambda(g, a));
  return PermGroup::from_elements(g.order(), std::move(elems));
}
}  // namespace

PermGroup right_translations(FiniteGroup const& g) {
  return translations(g, true);
}
PermGroup left_translations(FiniteGroup const& g) {
  return translations(g, false);
}

Holomorph::Holomorph(FiniteGroup base, PermGroup aut)
    : base_(std::move(base)), aut_(std::move(aut)) {
  std::vector<Perm> elems;
  elems.reserve(base_.order() * aut_.order());
  for (int g = 0; g < base_.order(); ++g)
    for (auto const& alpha : aut_.elements()) elems.push_back(make(g, alpha));
  std::size_t expect = elems.size();
  group_ = PermGroup::from_elements(base_.order(), std::move(elems));
  if (group_.order() != expect)
    throw InvariantError("Holomorph: factorization is not unique");
}

Holomorph Holomorph::build(FiniteGroup const& g, int aut_bound) {
  return Holomorph(g, automorphism_group(g, aut_bound));
}

Perm Holomorph::make(int g, Perm const& alpha) const {
  std::vector<int> img(base_.order());
  int gi = base_.inv(g);
  for (int x = 0; x < base_.order(); ++x)
    img[x] = base_.mul(alpha[x], gi);
  return Perm(std::move(img));
}

std::pair<int, Perm> Holomorph::factor(Perm const& h) const {
  int g = base_.inv(h[0]);
  std::vector<int> img(base_.order());
  for (int x = 0; x < base_.order(); ++x) img[x] = base_.mul(h[x], g);
  return {g, Perm(std::move(img))};
}

bool Holomorph::contains(Perm const& h) const {
  if (h.degree() != base_.order()) return false;
  auto [g, alpha] = factor(h);
  return aut_.contains(alpha);
}

int Holomorph::index_of(Perm const& h) const {
  auto const& elems = group_.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), h);
  if (it == elems.end() || *it != h) return -1;
  return static_cast<int>(it - elems.begin());
}

int PrimaryDecomposition::assemble(FiniteGroup const& g,
                                   std::vector<int> const& parts) const {
  if (parts.size() != primes.size())
    throw InvariantError("PrimaryDecomposition: part count mismatch");
  int out = 0;
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    out = g.mul(out, sylows[pi].embedding[parts[pi]]);
  return out;
}

PrimaryDecomposition primary_decomposition(FiniteGroup const& g) {
  if (!g.is_nilpotent())
    throw InvariantError("primary_decomposition: group is not nilpotent");
  PrimaryDecomposition dec;
  for (auto const& [p, v] : prime_valuations(g.order())) {
    dec.primes.push_back(p);
    dec.sylows.push_back(sylow_subgroup(g, p));
  }
  dec.part_index.resize(dec.primes.size());
  for (std::size_t pi = 0; pi < dec.primes.size(); ++pi) {
    long p = dec.primes[pi];
    auto const& emb = dec.sylows[pi].embedding;  // sorted ascending
    dec.part_index[pi].resize(g.order());
    for (int x = 0; x < g.order(); ++x) {
      // p-part of x: raise to c with c = 1 mod p^a, c = 0 mod m, where
      // ord(x) = p^a * m with p coprime to m.
      long ord = g.elem_order(x);
      long pa = 1;
      while (ord % p == 0) ord /= p, pa *= p;
      long m = ord;
      // c = m * (m^-1 mod pa)
      long minv = 1 % pa;
      for (long t = 0; t < pa; ++t)
        if ((m % pa) * t % pa == 1 % pa) {
          minv = t;
          break;
        }
      long c = m * minv;
      if (pa == 1) c = 0;  // p-part is the identity
      int xp = g.power(x, c);
      auto it = std::lower_bound(emb.begin(), emb.end(), xp);
      if (it == emb.end() || *it != xp)
        throw InvariantError("primary_decomposition: p-part outside Sylow");
      dec.part_index[pi][x] = static_cast<int>(it - emb.begin());
    }
  }
  return dec;
}

HolomorphDecomposition HolomorphDecomposition::build(FiniteGroup const& g,
                                                     int aut_bound) {
  Holomorph hol = Holomorph::build(g, aut_bound);
  PrimaryDecomposition dec = primary_decomposition(g);
  std::vector<Holomorph> part_hols;
  for (auto const& s : dec.sylows)
    part_hols.push_back(Holomorph::build(s.group, aut_bound));
  return HolomorphDecomposition{std::move(hol), std::move(dec),
                                std::move(part_hols)};
}

std::vector<Perm> HolomorphDecomposition::components(Perm const& h) const {
  auto [g, alpha] = hol.factor(h);
  std::vector<Perm> out;
  for (std::size_t pi = 0; pi < dec.primes.size(); ++pi) {
    auto const& sub = dec.sylows[pi];
    int m = sub.group.order();
    // alpha preserves the (characteristic) Sylow subgroup.
    std::vector<int> restricted(m);
    auto const& emb = sub.embedding;
    for (int i = 0; i < m; ++i) {
      int y = alpha[emb[i]];
      auto it = std::lower_bound(emb.begin(), emb.end(), y);
      if (it == emb.end() || *it != y)
        throw InvariantError("components: automorphism does not preserve Sylow");
      restricted[i] = static_cast<int>(it - emb.begin());
    }
    out.push_back(
        part_hols[pi].make(dec.part_index[pi][g], Perm(std::move(restricted))));
  }
  return out;
}

Perm HolomorphDecomposition::assemble(std::vector<Perm> const& comps) const {
  if (comps.size() != dec.primes.size())
    throw InvariantError("assemble: component count mismatch");
  FiniteGroup const& g = hol.base();
  std::vector<int> gparts(dec.primes.size());
  std::vector<Perm> alphas(dec.primes.size());
  for (std::size_t pi = 0; pi < comps.size(); ++pi) {
    auto [gp, ap] = part_hols[pi].factor(comps[pi]);
    gparts[pi] = gp;
    alphas[pi] = std::move(ap);
  }
  int gelem = dec.assemble(g, gparts);
  std::vector<int> alpha_img(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int y = 0;
    for (std::size_t pi = 0; pi < dec.primes.size(); ++pi) {
      int xp = dec.part_index[pi][x];
      y = g.mul(y, dec.sylows[pi].embedding[alphas[pi][xp]]);
    }
    alpha_img[x] = y;
  }
  return hol.make(gelem, Perm(std::move(alpha_img)));
}

}  // namespace hgs
