#ifndef HGS_GROUP_SPEC_HPP_
#define HGS_GROUP_SPEC_HPP_

#include <string>
#include <vector>

#include "hgs/group.hpp"
#include "hgs/perm.hpp"

namespace hgs {

// Direct constructors.  All return validated Cayley tables with identity 0
// and a fixed, reproducible element numbering.
FiniteGroup cyclic_group(int m);
FiniteGroup dihedral_group(int order);         // order = 2m, m >= 2
FiniteGroup dicyclic_group(int m);             // order 4m, m >= 2; Q8 = Dic2
FiniteGroup semidirect_cyclic(int m, int k, long u);  // Cm : Ck, a |-> a^u
FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);
FiniteGroup abelian_group(std::vector<long> const& factor_orders);

// Group abstracted from a faithful permutation action of its generators.
FiniteGroup group_from_perms(std::vector<Perm> const& gens, std::string name);

/// Parse a group spec expression: atoms C<m>, D<2m>, Q<2^v> (v>=3), SD16,
/// Dic<m>, A4, S3, semidirect "C<m>:C<k>@<u>", direct products joined with
/// "x", or "file:<path>" for a Cayley-table file.  Same spec always yields
/// the identical table.
FiniteGroup construct(std::string const& spec);

/// Cayley-table file: line 1 holds n, then n rows of n indices; identity 0.
FiniteGroup load_cayley_file(std::string const& path);
void save_cayley_file(FiniteGroup const& g, std::string const& path);

/// The complete list of isomorphism classes of groups of order n, or an
/// empty list when the catalog cannot certify completeness.  Certified for
/// n <= 15 and any prime power p^v with v <= 2 or p^v = 8.
std::vector<FiniteGroup> all_groups_of_order(int n);

/// All abelian groups of order n up to isomorphism (always complete).
std::vector<FiniteGroup> all_abelian_groups_of_order(int n);

/// All nilpotent groups of order n up to isomorphism, built as products of
/// Sylow choices.  Complete only when every prime-power part has a complete
/// census; throws CapabilityError otherwise.
std::vector<FiniteGroup> all_nilpotent_groups_of_order(int n);
bool nilpotent_census_complete(int n);

}  // namespace hgs

#endif  // HGS_GROUP_SPEC_HPP_
