#ifndef HGS_HOLOMORPH_HPP_
#define HGS_HOLOMORPH_HPP_

#include <utility>
#include <vector>

#include "hgs/group.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

inline constexpr int kDefaultAutBound = 64;

/// Aut(G) as a permutation group on G's element indices; every element
/// preserves the Cayley table.  Computed by backtracking over images of a
/// minimal generating set with element-order pruning.
/// Throws CapabilityError when |G| exceeds `bound`.
PermGroup automorphism_group(FiniteGroup const& g,
                             int bound = kDefaultAutBound);

/// Right regular representation: rho(g) maps x to x * g^-1.
Perm rho(FiniteGroup const& g, int elem);
/// Left regular representation: lambda(g) maps x to g * x.
Perm lambda(FiniteGroup const& g, int elem);

PermGroup right_translations(FiniteGroup const& g);
PermGroup left_translations(FiniteGroup const& g);

/// Hol(G) = rho(G) . Aut(G) inside Perm(G), materialized, with unique
/// factorization h = rho(g) * alpha for every element.
class Holomorph {
 public:
  Holomorph(FiniteGroup base, PermGroup aut);

  static Holomorph build(FiniteGroup const& g, int aut_bound = kDefaultAutBound);

  FiniteGroup const& base() const { return base_; }
  PermGroup const& aut() const { return aut_; }
  PermGroup const& group() const { return group_; }
  std::vector<Perm> const& elements() const { return group_.elements(); }

  Perm make(int g, Perm const& alpha) const;

  /// The unique (g, alpha) with h = rho(g) * alpha.  The permutation need
  /// not be a member; use contains() to test membership.
  std::pair<int, Perm> factor(Perm const& h) const;

  bool contains(Perm const& h) const;
  int index_of(Perm const& h) const;  // -1 when absent

 private:
  FiniteGroup base_;
  PermGroup aut_;
  PermGroup group_;
};

/// Primary (Sylow) decomposition of a nilpotent group, with index
/// translation between G and the product of its Sylow subgroups.
struct PrimaryDecomposition {
  std::vector<long> primes;
  std::vector<Subgroup> sylows;
  // part_index[pi][g] = index inside sylows[pi].group of the p-part of g.
  std::vector<std::vector<int>> part_index;

  int assemble(FiniteGroup const& g, std::vector<int> const& parts) const;
};

PrimaryDecomposition primary_decomposition(FiniteGroup const& g);

/// Hol(G) together with the per-prime holomorphs Hol(G_p) and the component
/// projections of the direct-product decomposition (nilpotent G only).
struct HolomorphDecomposition {
  Holomorph hol;
  PrimaryDecomposition dec;
  std::vector<Holomorph> part_hols;

  static HolomorphDecomposition build(FiniteGroup const& g,
                                      int aut_bound = kDefaultAutBound);

  /// Images of h under the projections Hol(G) -> Hol(G_p), one per prime.
  std::vector<Perm> components(Perm const& h) const;

  /// Inverse of components(); reassembles an element of Hol(G).
  Perm assemble(std::vector<Perm> const& comps) const;
};

}  // namespace hgs

#endif  // HGS_HOLOMORPH_HPP_
