#ifndef HGS_ENUMERATE_HPP_
#define HGS_ENUMERATE_HPP_

#include <string>
#include <vector>

#include "hgs/group.hpp"
#include "hgs/holomorph.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

/// A homomorphism Gamma -> Hol(G) stored as the full image table: one
/// permutation of G per element of Gamma.
struct RegularEmbedding {
  std::vector<Perm> image;
  auto operator<=>(RegularEmbedding const&) const = default;
};

struct EnumOptions {
  int threads = 1;
};

/// The complete, duplicate-free, canonically sorted list of regular
/// embeddings of gamma into hol.  Backtracks over images of a minimal
/// generating set, pruning by element order and by semiregularity of the
/// partial image; a single-generator scan is used when gamma is cyclic.
std::vector<RegularEmbedding> enumerate_regular_embeddings(
    FiniteGroup const& gamma, Holomorph const& hol, EnumOptions opts = {});

/// Independent soundness check: homomorphism property, injectivity, and
/// regularity of the image, each verified from scratch.
bool check_embedding(FiniteGroup const& gamma, Holomorph const& hol,
                     RegularEmbedding const& beta);

struct EquivClasses {
  std::vector<std::vector<int>> classes;  // indices into the embedding list
  std::vector<RegularEmbedding> representatives;  // canonically least members
};

/// Partition under beta |-> alpha . beta . alpha^-1 (pointwise conjugation).
EquivClasses equivalence_classes(std::vector<RegularEmbedding> const& embeddings,
                                 PermGroup const& aut);

struct HGSCount {
  std::string gamma_spec;
  std::string g_spec;
  long count = 0;
  std::string method;
  std::vector<RegularEmbedding> witnesses;
};

/// e(gamma, G) by holomorph enumeration: regular embeddings up to
/// Aut(G)-conjugacy.  Throws SpecError on order mismatch.
HGSCount count_hgs(FiniteGroup const& gamma, FiniteGroup const& g,
                   EnumOptions opts = {}, int aut_bound = kDefaultAutBound);
HGSCount count_hgs(FiniteGroup const& gamma, Holomorph const& hol,
                   EnumOptions opts = {});

/// Matrix of component homomorphisms beta_pq : Gamma_p -> Hol(G_q) for
/// nilpotent Gamma and G.  entries[p][q][i] is the image of the i-th
/// element of Gamma_p.
struct ComponentMatrix {
  std::vector<long> primes;
  std::vector<std::vector<std::vector<Perm>>> entries;
  bool diagonal = false;  // all off-diagonal entries trivial
};

ComponentMatrix component_matrix(FiniteGroup const& gamma,
                                 RegularEmbedding const& beta,
                                 PrimaryDecomposition const& gamma_dec,
                                 HolomorphDecomposition const& g_dec);

/// Assemble per-prime regular embeddings Gamma_p -> Hol(G_p) into a regular
/// embedding Gamma -> Hol(G).  parts[pi] matches gamma_dec.primes[pi];
/// throws SpecError on prime-cover mismatch.
RegularEmbedding product_embedding(FiniteGroup const& gamma,
                                   PrimaryDecomposition const& gamma_dec,
                                   HolomorphDecomposition const& g_dec,
                                   std::vector<RegularEmbedding> const& parts);

inline constexpr int kDefaultOracleBound = 8;

struct OracleEntry {
  std::string type_name;
  long count = 0;
  // Reconstructed Cayley table of one representative subgroup.
  FiniteGroup sample;
};

/// Greither-Pareigis oracle: enumerate every regular subgroup of
/// Perm(gamma) normalized by lambda(gamma), classified by isomorphism type.
/// Entries sorted by type name.  Throws CapabilityError above the bound.
std::vector<OracleEntry> gp_oracle(FiniteGroup const& gamma,
                                   int bound = kDefaultOracleBound);

}  // namespace hgs

#endif  // HGS_ENUMERATE_HPP_
