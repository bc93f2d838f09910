#include "hgs/enumerate.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "hgs/error.hpp"
#include "hgs/group_spec.hpp"

namespace hgs {

namespace {

// Shared per-search view of Hol(G): sorted element list plus cached
// per-element order and semiregularity flags.
struct HolCtx {
  std::vector<Perm> const& elems;
  std::vector<int> order;
  std::vector<char> semiregular;  // fixed-point-free with uniform cycle type

  explicit HolCtx(Holomorph const& hol) : elems(hol.elements()) {
    order.reserve(elems.size());
    semiregular.reserve(elems.size());
    for (auto const& e : elems) {
      order.push_back(e.order());
      semiregular.push_back(e.is_fixed_point_free() &&
                            e.has_uniform_cycle_type());
    }
  }

  int index_of(Perm const& p) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || *it != p)
      throw InvariantError("holomorph element set is not closed");
    return static_cast<int>(it - elems.begin());
  }

  int mul(int a, int b) const { return index_of(elems[a] * elems[b]); }
};

// Propagate a partial map gamma -> Hol to the subgroup generated by the
// defined elements.  Every derived image must preserve element order
// exactly (an injective homomorphism does); violations prune the branch.
bool close_embedding(FiniteGroup const& gamma, HolCtx const& ctx,
                     std::vector<int>& img) {
  std::vector<int> known;
  for (int a = 0; a < gamma.order(); ++a)
    if (img[a] != -1) known.push_back(a);

  auto handle = [&](int a, int b) -> bool {
    int c = gamma.mul(a, b);
    int hc = ctx.mul(img[a], img[b]);
    if (img[c] == -1) {
      if (ctx.order[hc] != gamma.elem_order(c)) return false;
      img[c] = hc;
      known.push_back(c);
      return true;
    }
    return img[c] == hc;
  };

  std::size_t processed = 0;
  while (processed < known.size()) {
    std::size_t hi = known.size();
    for (std::size_t i = processed; i < hi; ++i)
      for (std::size_t j = 0; j < known.size(); ++j) {
        if (!handle(known[i], known[j])) return false;
        if (!handle(known[j], known[i])) return false;
      }
    processed = hi;
  }
  return true;
}

struct SearchCtx {
  FiniteGroup const& gamma;
  HolCtx const& hol;
  std::vector<int> const& gens;
  std::vector<std::vector<int>> const& cands;
};

void finalize(SearchCtx const& sc, std::vector<int> const& img,
              std::vector<RegularEmbedding>& out) {
  int n = sc.gamma.order();
  // Transitivity of the image on G: the orbit of 0 must be everything.
  std::vector<char> hit(n, 0);
  for (int a = 0; a < n; ++a) {
    if (img[a] == -1) return;
    hit[sc.hol.elems[img[a]][0]] = 1;
  }
  for (int x = 0; x < n; ++x)
    if (!hit[x]) return;
  RegularEmbedding beta;
  beta.image.reserve(n);
  for (int a = 0; a < n; ++a) beta.image.push_back(sc.hol.elems[img[a]]);
  out.push_back(std::move(beta));
}

void search(SearchCtx const& sc, std::size_t depth, std::vector<int> const& img,
            std::vector<RegularEmbedding>& out) {
  if (depth == sc.gens.size()) {
    finalize(sc, img, out);
    return;
  }
  int g = sc.gens[depth];
  for (int h : sc.cands[depth]) {
    if (img[g] != -1) {
      if (img[g] == h) search(sc, depth + 1, img, out);
      continue;
    }
    // Cheap pairwise pre-checks against already placed generators before
    // paying for a full closure: products must preserve element order.
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      int g2 = sc.gens[d];
      if (img[g2] == -1) continue;
      Perm prod = sc.hol.elems[img[g2]] * sc.hol.elems[h];
      if (prod.order() != sc.gamma.elem_order(sc.gamma.mul(g2, g))) ok = false;
    }
    if (!ok) continue;
    std::vector<int> img2 = img;
    img2[g] = h;
    if (!close_embedding(sc.gamma, sc.hol, img2)) continue;
    search(sc, depth + 1, img2, out);
  }
}

}  // namespace

std::vector<RegularEmbedding> enumerate_regular_embeddings(
    FiniteGroup const& gamma, Holomorph const& hol, EnumOptions opts) {
  if (gamma.order() != hol.base().order())
    throw SpecError("enumerate_regular_embeddings: order mismatch");
  HolCtx ctx(hol);
  auto gens = minimal_generating_set(gamma);
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int ord = gamma.elem_order(gens[i]);
    for (std::size_t h = 0; h < ctx.elems.size(); ++h)
      if (ctx.order[h] == ord && ctx.semiregular[h])
        cands[i].push_back(static_cast<int>(h));
  }

  SearchCtx sc{gamma, ctx, gens, cands};
  std::vector<int> img(gamma.order(), -1);
  img[0] = 0;  // identity to identity (sorted element 0 is the identity)

  std::vector<RegularEmbedding> out;
  int threads = std::max(1, opts.threads);
  if (threads == 1 || gens.empty() || cands[0].size() < 2) {
    search(sc, 0, img, out);
  } else {
    // Fan out over first-generator candidates; merge and re-sort, so the
    // result is schedule-independent.
    int nchunk = std::min<int>(threads, static_cast<int>(cands[0].size()));
    std::vector<std::future<std::vector<RegularEmbedding>>> futs;
    for (int c = 0; c < nchunk; ++c) {
      futs.push_back(std::async(std::launch::async, [&, c]() {
        std::vector<int> mine;
        for (std::size_t i = c; i < cands[0].size(); i += nchunk)
          mine.push_back(cands[0][i]);
        std::vector<std::vector<int>> cands2 = cands;
        cands2[0] = std::move(mine);
        SearchCtx sc2{gamma, ctx, gens, cands2};
        std::vector<RegularEmbedding> part;
        search(sc2, 0, img, part);
        return part;
      }));
    }
    for (auto& f : futs) {
      auto part = f.get();
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  for (auto const& beta : out)
    if (!check_embedding(gamma, hol, beta))
      throw InvariantError("enumerate_regular_embeddings: soundness recheck failed");
  return out;
}

bool check_embedding(FiniteGroup const& gamma, Holomorph const& hol,
                     RegularEmbedding const& beta) {
  int n = gamma.order();
  if (static_cast<int>(beta.image.size()) != n) return false;
  for (int a = 0; a < n; ++a) {
    if (!hol.contains(beta.image[a])) return false;
    for (int b = 0; b < n; ++b)
      if (beta.image[gamma.mul(a, b)] != beta.image[a] * beta.image[b])
        return false;
  }
  std::set<Perm> distinct(beta.image.begin(), beta.image.end());
  if (static_cast<int>(distinct.size()) != n) return false;
  return is_regular(PermGroup::from_elements(
      n, std::vector<Perm>(beta.image.begin(), beta.image.end())));
}

EquivClasses equivalence_classes(std::vector<RegularEmbedding> const& embeddings,
                                 PermGroup const& aut) {
  std::map<RegularEmbedding, int> index;
  for (std::size_t i = 0; i < embeddings.size(); ++i)
    index[embeddings[i]] = static_cast<int>(i);

  std::vector<char> seen(embeddings.size(), 0);
  EquivClasses out;
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cls{static_cast<int>(i)};
    seen[i] = 1;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      auto const& cur = embeddings[cls[k]];
      for (auto const& a : aut.elements()) {
        Perm ai = a.inverse();
        RegularEmbedding conj;
        conj.image.reserve(cur.image.size());
        for (auto const& p : cur.image) conj.image.push_back(a * p * ai);
        auto it = index.find(conj);
        if (it == index.end())
          throw InvariantError(
              "equivalence_classes: conjugate embedding missing from list");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          cls.push_back(it->second);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(cls);
    out.representatives.push_back(embeddings[cls.front()]);
  }
  return out;
}

HGSCount count_hgs(FiniteGroup const& gamma, Holomorph const& hol,
                   EnumOptions opts) {
  auto embeddings = enumerate_regular_embeddings(gamma, hol, opts);
  auto classes = equivalence_classes(embeddings, hol.aut());
  HGSCount out;
  out.gamma_spec = gamma.name();
  out.g_spec = hol.base().name();
  out.count = static_cast<long>(classes.classes.size());
  out.method = "holomorph-enum";
  out.witnesses = std::move(classes.representatives);
  return out;
}

HGSCount count_hgs(FiniteGroup const& gamma, FiniteGroup const& g,
                   EnumOptions opts, int aut_bound) {
  if (gamma.order() != g.order())
    throw SpecError("count_hgs: |Gamma| != |G|");
  return count_hgs(gamma, Holomorph::build(g, aut_bound), opts);
}

ComponentMatrix component_matrix(FiniteGroup const& gamma,
                                 RegularEmbedding const& beta,
                                 PrimaryDecomposition const& gamma_dec,
                                 HolomorphDecomposition const& g_dec) {
  std::size_t np = gamma_dec.primes.size();
  if (g_dec.dec.primes != gamma_dec.primes)
    throw InvariantError("component_matrix: prime sets differ");
  ComponentMatrix out;
  out.primes = gamma_dec.primes;
  out.entries.assign(np, std::vector<std::vector<Perm>>(np));
  out.diagonal = true;
  for (std::size_t pi = 0; pi < np; ++pi) {
    auto const& emb = gamma_dec.sylows[pi].embedding;
    for (std::size_t qi = 0; qi < np; ++qi)
      out.entries[pi][qi].reserve(emb.size());
    for (int parent : emb) {
      auto comps = g_dec.components(beta.image[parent]);
      for (std::size_t qi = 0; qi < np; ++qi) {
        if (pi != qi && !comps[qi].is_identity()) out.diagonal = false;
        out.entries[pi][qi].push_back(std::move(comps[qi]));
      }
    }
  }
  return out;
}

RegularEmbedding product_embedding(FiniteGroup const& gamma,
                                   PrimaryDecomposition const& gamma_dec,
                                   HolomorphDecomposition const& g_dec,
                                   std::vector<RegularEmbedding> const& parts) {
  if (parts.size() != gamma_dec.primes.size() ||
      gamma_dec.primes != g_dec.dec.primes)
    throw SpecError("product_embedding: prime cover mismatch");
  for (std::size_t pi = 0; pi < parts.size(); ++pi)
    if (parts[pi].image.size() !=
        static_cast<std::size_t>(gamma_dec.sylows[pi].group.order()))
      throw SpecError("product_embedding: part size mismatch");
  RegularEmbedding beta;
  beta.image.reserve(gamma.order());
  for (int x = 0; x < gamma.order(); ++x) {
    std::vector<Perm> comps;
    comps.reserve(parts.size());
    for (std::size_t pi = 0; pi < parts.size(); ++pi)
      comps.push_back(parts[pi].image[gamma_dec.part_index[pi][x]]);
    beta.image.push_back(g_dec.assemble(comps));
  }
  return beta;
}

// ---------------------------------------------------------------------------
// Greither-Pareigis oracle
// ---------------------------------------------------------------------------

namespace {

// State of the Cayley-style completion: slot[x] is the unique element of N
// with n_x(0) = x, or empty.  Products and lambda-conjugates of assigned
// slots are propagated eagerly; any forced slot that is not semiregular or
// clashes with an existing assignment kills the branch.
struct OracleSearch {
  FiniteGroup const& gamma;
  int n;
  std::vector<Perm> lambda_gens;
  std::vector<std::vector<Perm>> cands;  // per x, admissible n_x
  std::vector<FiniteGroup> found;

  struct State {
    std::vector<std::optional<Perm>> slot;
    int assigned = 0;
  };

  explicit OracleSearch(FiniteGroup const& g) : gamma(g), n(g.order()) {
    for (int gen : minimal_generating_set(gamma))
      lambda_gens.push_back(lambda(gamma, gen));
    // Candidate permutations for each slot: pi(0) = x, order dividing n,
    // all cycles of equal length (hence fixed-point-free for x != 0).
    cands.assign(n, {});
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    do {
      Perm p{std::vector<int>(img)};
      if (p.is_identity()) continue;
      if (!p.has_uniform_cycle_type() || !p.is_fixed_point_free()) continue;
      if (n % p.order() != 0) continue;
      cands[p[0]].push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
  }

  State initial_state() const {
    State st;
    st.slot.assign(n, std::nullopt);
    st.slot[0] = Perm::identity(n);
    st.assigned = 1;
    return st;
  }

  bool admissible(Perm const& p, int x) const {
    if (x == 0) return p.is_identity();
    return p[0] == x && p.is_fixed_point_free() &&
           p.has_uniform_cycle_type() && n % p.order() == 0;
  }

  // Assign slot[x] = p (or verify), then propagate closure requirements:
  // products of assigned slots and lambda-conjugates are forced members.
  bool assign(State& st, int x, Perm const& p) const {
    std::vector<std::pair<int, Perm>> work{{x, p}};
    while (!work.empty()) {
      auto [y, q] = std::move(work.back());
      work.pop_back();
      if (st.slot[y]) {
        if (*st.slot[y] != q) return false;
        continue;
      }
      if (!admissible(q, y)) return false;
      st.slot[y] = q;
      ++st.assigned;
      for (int z = 0; z < n; ++z) {
        if (!st.slot[z]) continue;
        Perm a = q * (*st.slot[z]);
        work.emplace_back(a[0], std::move(a));
        Perm b = (*st.slot[z]) * q;
        work.emplace_back(b[0], std::move(b));
      }
      for (auto const& l : lambda_gens) {
        Perm c = l * q * l.inverse();
        work.emplace_back(c[0], std::move(c));
      }
    }
    return true;
  }

  void dfs(State const& st) {
    if (st.assigned == n) {
      record(st);
      return;
    }
    int x = 0;
    while (st.slot[x]) ++x;
    for (auto const& p : cands[x]) {
      State copy = st;
      if (assign(copy, x, p)) dfs(copy);
    }
  }

  void record(State const& st) {
    // Defensive final verification: group, regular, normalized by lambda.
    std::vector<Perm> elems;
    for (auto const& s : st.slot) elems.push_back(*s);
    auto pg = PermGroup::from_elements(n, elems);
    if (pg.order() != static_cast<std::size_t>(n) || !is_regular(pg)) return;
    if (n > 1 && !normalizes(PermGroup(n, lambda_gens), pg)) return;
    // Reconstruct the abstract group: x * y := n_x(y).
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        table[static_cast<std::size_t>(x) * n + y] = (*st.slot[x])[y];
    found.emplace_back(n, std::move(table), "oracle-subgroup");
  }
};

}  // namespace

std::vector<OracleEntry> gp_oracle(FiniteGroup const& gamma, int bound) {
  if (gamma.order() > bound)
    throw CapabilityError("gp_oracle: degree " + std::to_string(gamma.order()) +
                          " exceeds bound " + std::to_string(bound));
  OracleSearch srch(gamma);
  srch.dfs(srch.initial_state());

  auto catalog = all_groups_of_order(gamma.order());
  std::map<std::string, OracleEntry> tally;
  for (auto& g : srch.found) {
    std::string type;
    for (auto const& c : catalog)
      if (isomorphic(g, c)) {
        type = c.name();
        break;
      }
    if (type.empty()) {
      if (g.is_abelian())
        type = abelian_type_name(abelian_invariants(g));
      else
        type = "unknown order-" + std::to_string(g.order()) + " type";
    }
    auto it = tally.find(type);
    if (it == tally.end()) {
      g.set_name(type);
      tally.emplace(type, OracleEntry{type, 1, std::move(g)});
    } else {
      ++it->second.count;
    }
  }
  std::vector<OracleEntry> out;
  for (auto& [k, v] : tally) out.push_back(std::move(v));
  return out;
}

}  // namespace hgs
