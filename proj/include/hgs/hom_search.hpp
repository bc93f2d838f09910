#ifndef HGS_HOM_SEARCH_HPP_
#define HGS_HOM_SEARCH_HPP_

#include <functional>
#include <vector>

#include "hgs/group.hpp"

namespace hgs {

/// Propagate a partially defined injective homomorphism src -> dst to the
/// subgroup generated by the defined elements.  `img[a]` is the image of a
/// (-1 if undefined), `used[h]` the preimage of h (-1 if unused).  Returns
/// false on any product conflict or injectivity violation.
bool close_partial_hom(FiniteGroup const& src, FiniteGroup const& dst,
                       std::vector<int>& img, std::vector<int>& used);

/// Backtracking over images of `gens` (which must generate src) drawn from
/// the per-generator candidate lists.  Invokes `visit` once per complete
/// injective homomorphism, in a canonical order; `visit` returns false to
/// stop the search.
void search_injective_homs(
    FiniteGroup const& src, FiniteGroup const& dst,
    std::vector<int> const& gens, std::vector<std::vector<int>> const& cands,
    std::function<bool(std::vector<int> const&)> const& visit);

}  // namespace hgs

#endif  // HGS_HOM_SEARCH_HPP_
