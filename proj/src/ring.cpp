#include "hgs/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hgs/error.hpp"
#include "hgs/group_spec.hpp"
#include "hgs/hom_search.hpp"
#include "hgs/numtheory.hpp"

namespace hgs {

std::string ring_axiom_failure(FiniteGroup const& add,
                               std::vector<int> const& mult) {
  int n = add.order();
  if (mult.size() != static_cast<std::size_t>(n) * n)
    return "multiplication table has wrong size";
  if (!add.is_abelian()) return "additive group is not abelian";
  auto mul = [&](int x, int y) { return mult[x * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) return "multiplication not commutative";
      for (int z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          return "multiplication not associative";
        if (mul(x, add.mul(y, z)) != add.mul(mul(x, y), mul(x, z)))
          return "left distributivity fails";
        if (mul(add.mul(x, y), z) != add.mul(mul(x, z), mul(y, z)))
          return "right distributivity fails";
      }
    }
  // Circle invertibility: every row of x o y = x + y + x*y must be a
  // bijection (with associativity, that makes (G, o) a group with id 0).
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = add.mul(add.mul(x, y), mul(x, y));
      if (seen[v]) return "circle operation is not invertible";
      seen[v] = 1;
    }
  }
  return "";
}

RingStructure make_ring(FiniteGroup const& add, std::vector<int> mult) {
  if (auto err = ring_axiom_failure(add, mult); !err.empty())
    throw InvariantError("make_ring: " + err + " (on " + add.name() + ")");
  int n = add.order();
  std::vector<int> circle(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      circle[static_cast<std::size_t>(x) * n + y] =
          add.mul(add.mul(x, y), mult[x * n + y]);
  FiniteGroup circ(n, std::move(circle), "(" + add.name() + ",o)");
  return RingStructure{add, std::move(mult), std::move(circ)};
}

RingStructure ring_from_subgroup(Holomorph const& hol, PermGroup const& t) {
  FiniteGroup const& g = hol.base();
  int n = g.order();
  if (!g.is_abelian())
    throw InvariantError("ring_from_subgroup: G is not abelian");
  if (!is_regular(t))
    throw InvariantError("ring_from_subgroup: T is not regular");
  for (auto const& a : t.elements()) {
    if (!hol.contains(a))
      throw InvariantError("ring_from_subgroup: T is not inside Hol(G)");
    for (auto const& b : t.elements())
      if (a * b != b * a)
        throw InvariantError("ring_from_subgroup: T is not abelian");
  }
  // g_t = t(0); row g_t of the circle table is t itself.
  std::vector<int> circle(static_cast<std::size_t>(n) * n, -1);
  for (auto const& tt : t.elements()) {
    int gt = tt[0];
    for (int x = 0; x < n; ++x)
      circle[static_cast<std::size_t>(gt) * n + x] = tt[x];
  }
  std::vector<int> mult(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mult[static_cast<std::size_t>(x) * n + y] = g.mul(
          g.mul(circle[static_cast<std::size_t>(x) * n + y], g.inv(x)),
          g.inv(y));
  if (auto err = ring_axiom_failure(g, mult); !err.empty())
    throw InvariantError(
        "ring_from_subgroup: ring axioms fail, contradicting the subgroup "
        "correspondence: " + err + " (G = " + g.name() + ")");
  return make_ring(g, std::move(mult));
}

PermGroup subgroup_from_ring(RingStructure const& r) {
  int n = r.add.order();
  std::vector<Perm> taus;
  taus.reserve(n);
  for (int g = 0; g < n; ++g) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = r.circ(g, x);
    taus.emplace_back(std::move(img));
  }
  return PermGroup::from_elements(n, std::move(taus));
}

std::vector<RingSylowPart> ring_sylow_decompose(RingStructure const& r) {
  int n = r.add.order();
  std::vector<RingSylowPart> parts;
  for (auto const& [p, v] : prime_valuations(n)) {
    auto sub = sylow_subgroup(r.add, p);
    int m = sub.group.order();
    auto const& emb = sub.embedding;
    std::set<int> in_part(emb.begin(), emb.end());
    // R_p is an ideal: R_p * R stays inside R_p.
    for (int i : emb)
      for (int s = 0; s < n; ++s)
        if (!in_part.count(r.mul(i, s)))
          throw InvariantError("ring_sylow_decompose: R_p * R escapes R_p");
    std::map<int, int> index;
    for (int i = 0; i < m; ++i) index[emb[i]] = i;
    std::vector<int> mult(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        mult[static_cast<std::size_t>(a) * m + b] = index.at(r.mul(emb[a], emb[b]));
    parts.push_back(RingSylowPart{p, make_ring(sub.group, std::move(mult)),
                                  emb});
  }
  // Cross products between distinct Sylow parts vanish.
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (int i : parts[a].embedding)
        for (int j : parts[b].embedding)
          if (r.mul(i, j) != 0)
            throw InvariantError("ring_sylow_decompose: R_p * R_q != 0");
  // Exact reassembly: decompose each element into its p-parts and check the
  // parent multiplication is recovered componentwise.
  auto dec = primary_decomposition(r.add);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int expected = 0;
      for (std::size_t pi = 0; pi < dec.primes.size(); ++pi) {
        int xp = dec.part_index[pi][x], yp = dec.part_index[pi][y];
        int prod_local = parts[pi].part.mul(xp, yp);
        expected = r.add.mul(expected, parts[pi].embedding[prod_local]);
      }
      if (expected != r.mul(x, y))
        throw InvariantError("ring_sylow_decompose: reassembly mismatch");
    }
  return parts;
}

bool verify_t_syl(Holomorph const& hol, PermGroup const& t, long p) {
  FiniteGroup const& g = hol.base();
  // Sylow p-subgroup of T: elements of p-power order.
  std::vector<Perm> tp;
  for (auto const& a : t.elements()) {
    long o = a.order();
    while (o % p == 0) o /= p;
    if (o == 1) tp.push_back(a);
  }
  std::sort(tp.begin(), tp.end());
  // { tau_h : h in G_p }: members of T moving 0 into the Sylow p-part of G.
  std::vector<Perm> expected;
  for (auto const& a : t.elements()) {
    long o = g.elem_order(a[0]);
    while (o % p == 0) o /= p;
    if (o == 1) expected.push_back(a);
  }
  std::sort(expected.begin(), expected.end());
  return tp == expected;
}

namespace {

// A primary basis of an abelian group: elements b_i of orders d_i (the
// abelian invariants, largest first) generating G as a direct sum.
struct Basis {
  std::vector<int> elems;
  std::vector<long> orders;
};

Basis find_primary_basis(FiniteGroup const& g) {
  auto inv = abelian_invariants(g);
  std::sort(inv.rbegin(), inv.rend());
  Basis basis;
  std::vector<int> chosen;
  long covered = 1;
  for (long d : inv) {
    bool found = false;
    for (int cand = 0; cand < g.order() && !found; ++cand) {
      if (g.elem_order(cand) != d) continue;
      auto trial = chosen;
      trial.push_back(cand);
      auto sub = generated_subgroup(g, trial);
      if (sub.group.order() == covered * d) {
        chosen = std::move(trial);
        covered *= d;
        basis.elems.push_back(cand);
        basis.orders.push_back(d);
        found = true;
      }
    }
    if (!found)
      throw InvariantError("find_primary_basis: no independent generator");
  }
  return basis;
}

}  // namespace

std::vector<RingStructure> enumerate_rings(FiniteGroup const& g) {
  if (!g.is_abelian())
    throw InvariantError("enumerate_rings: G is not abelian");
  int n = g.order();
  Basis basis = find_primary_basis(g);
  int k = static_cast<int>(basis.elems.size());

  // Coordinates of every element in the basis (mixed-radix enumeration).
  std::vector<std::vector<int>> coords(n);
  {
    std::vector<int> tuple(k, 0);
    int count = 0;
    while (true) {
      int e = 0;
      for (int i = 0; i < k; ++i)
        e = g.mul(e, g.power(basis.elems[i], tuple[i]));
      if (!coords[e].empty())
        throw InvariantError("enumerate_rings: basis is not independent");
      coords[e] = tuple;
      ++count;
      int i = k - 1;
      while (i >= 0 && ++tuple[i] == basis.orders[i]) tuple[i--] = 0;
      if (i < 0) break;
    }
    if (count != n) throw InvariantError("enumerate_rings: basis incomplete");
  }

  // Candidate products for each basis pair (i <= j): order must divide
  // gcd(d_i, d_j), since d_i (b_i * b_j) = (d_i b_i) * b_j = 0.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<int>> pair_cands(pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    long d = std::gcd(basis.orders[pairs[t].first],
                      basis.orders[pairs[t].second]);
    for (int e = 0; e < n; ++e)
      if (d % g.elem_order(e) == 0) pair_cands[t].push_back(e);
  }

  std::vector<RingStructure> out;
  std::vector<int> choice(pairs.size(), 0);
  std::vector<int> prod(static_cast<std::size_t>(k) * k);
  while (true) {
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      auto [i, j] = pairs[t];
      prod[i * k + j] = pair_cands[t][choice[t]];
      prod[j * k + i] = pair_cands[t][choice[t]];
    }
    // Bilinear extension: x*y = sum_{i,j} x_i y_j (b_i * b_j).
    std::vector<int> mult(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int acc = 0;
        for (int i = 0; i < k; ++i) {
          if (coords[x][i] == 0) continue;
          for (int j = 0; j < k; ++j) {
            if (coords[y][j] == 0) continue;
            acc = g.mul(acc, g.power(prod[i * k + j],
                                     static_cast<long>(coords[x][i]) *
                                         coords[y][j]));
          }
        }
        mult[static_cast<std::size_t>(x) * n + y] = acc;
      }
    if (ring_axiom_failure(g, mult).empty())
      out.push_back(make_ring(g, std::move(mult)));

    std::size_t t = 0;
    while (t < pairs.size() &&
           ++choice[t] == static_cast<int>(pair_cands[t].size()))
      choice[t++] = 0;
    if (t == pairs.size()) break;
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.mult < b.mult;
  });
  return out;
}

HGSCount count_abelian_via_rings(FiniteGroup const& gamma,
                                 Holomorph const& hol) {
  FiniteGroup const& g = hol.base();
  if (!gamma.is_abelian() || !g.is_abelian())
    throw InvariantError("count_abelian_via_rings: both groups must be abelian");
  if (gamma.order() != g.order())
    throw SpecError("count_abelian_via_rings: order mismatch");

  std::vector<PermGroup> subgroups;
  for (auto const& r : enumerate_rings(g)) {
    if (!isomorphic(r.circle, gamma)) continue;
    auto t = subgroup_from_ring(r);
    subgroups.push_back(std::move(t));
  }
  std::sort(subgroups.begin(), subgroups.end());
  subgroups.erase(std::unique(subgroups.begin(), subgroups.end()),
                  subgroups.end());

  // Each subgroup T carries |Aut(gamma)| regular embeddings (one per
  // isomorphism gamma -> T); classing those under Aut(G) matches the
  // holomorph route's equivalence exactly.
  std::vector<RegularEmbedding> embeddings;
  for (auto const& t : subgroups) {
    auto const& telems = t.elements();
    auto tabs = group_from_perms(telems, "T");
    auto gens = minimal_generating_set(gamma);
    std::vector<std::vector<int>> cands(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int ord = gamma.elem_order(gens[i]);
      for (int a = 0; a < tabs.order(); ++a)
        if (tabs.elem_order(a) == ord) cands[i].push_back(a);
    }
    search_injective_homs(gamma, tabs, gens, cands,
                          [&](std::vector<int> const& img) {
                            RegularEmbedding beta;
                            for (int c = 0; c < gamma.order(); ++c)
                              beta.image.push_back(telems[img[c]]);
                            embeddings.push_back(std::move(beta));
                            return true;
                          });
  }
  std::sort(embeddings.begin(), embeddings.end());
  embeddings.erase(std::unique(embeddings.begin(), embeddings.end()),
                   embeddings.end());
  auto cls = equivalence_classes(embeddings, hol.aut());

  HGSCount out;
  out.gamma_spec = gamma.name();
  out.g_spec = g.name();
  out.count = static_cast<long>(cls.classes.size());
  out.method = "ring-corr";
  return out;
}

}  // namespace hgs
