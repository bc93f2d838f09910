#ifndef HGS_RING_HPP_
#define HGS_RING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hgs/enumerate.hpp"
#include "hgs/group.hpp"
#include "hgs/holomorph.hpp"

namespace hgs {

/// A commutative associative non-unital multiplication on an abelian group,
/// with every element invertible under x o y = x + y + x*y.  The circle
/// group (G, o) shares the element numbering and has identity 0.
struct RingStructure {
  FiniteGroup add;
  std::vector<int> mult;  // n*n table, mult[x*n+y] = x*y
  FiniteGroup circle;

  int mul(int x, int y) const { return mult[x * add.order() + y]; }
  int circ(int x, int y) const { return circle.mul(x, y); }
};

/// Validates all ring axioms and circle-invertibility; throws InvariantError
/// with a diagnostic on failure.
RingStructure make_ring(FiniteGroup const& add, std::vector<int> mult);

/// Empty string when valid, else a description of the first failed axiom.
std::string ring_axiom_failure(FiniteGroup const& add,
                               std::vector<int> const& mult);

/// The multiplication induced by a regular abelian subgroup T of Hol(G):
/// with g_t = t(0), define g_t o x = t(x) and x*y = (x o y) - x - y.
/// Axiom failure here is a hard internal fault and aborts with diagnostics.
RingStructure ring_from_subgroup(Holomorph const& hol, PermGroup const& t);

/// T = { tau_g : g in G } with tau_g(x) = g o x; regular, abelian, inside
/// Hol(G); exact inverse of ring_from_subgroup.
PermGroup subgroup_from_ring(RingStructure const& r);

struct RingSylowPart {
  long p;
  RingStructure part;
  std::vector<int> embedding;  // indices into the parent element set
};

/// Sylow ideal decomposition: for each p | n the Sylow p-part with the
/// restricted multiplication.  Verifies R_p * R is contained in R_p, that
/// R_p * R_q = {0} for p != q, and exact reassembly of the parent tables.
std::vector<RingSylowPart> ring_sylow_decompose(RingStructure const& r);

/// True iff the Sylow p-subgroup of T equals { tau_g : g in G_p } exactly.
bool verify_t_syl(Holomorph const& hol, PermGroup const& t, long p);

/// All valid multiplication tables on G, found by choosing products of a
/// primary basis and extending bilinearly.  Canonically sorted by table.
std::vector<RingStructure> enumerate_rings(FiniteGroup const& g);

/// Alternate abelian counting path: rings on G whose circle group is
/// isomorphic to gamma, mapped to their subgroups T and classed under
/// Aut(G)-conjugacy.  method = "ring-corr".
HGSCount count_abelian_via_rings(FiniteGroup const& gamma, Holomorph const& hol);

}  // namespace hgs

#endif  // HGS_RING_HPP_
