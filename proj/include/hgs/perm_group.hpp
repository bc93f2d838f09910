#ifndef HGS_PERM_GROUP_HPP_
#define HGS_PERM_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "hgs/perm.hpp"

namespace hgs {

inline constexpr std::size_t kDefaultClosureLimit = 1'000'000;

/// A permutation group given by generators, with an optional materialized
/// element list.  Materialized elements are always duplicate-free and sorted
/// lexicographically by image table, so equal groups compare equal and the
/// identity sits at index 0.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators);

  // Construct directly from a full element set (sorted on entry or not).
  // The set is sorted; group axioms are not re-verified here.
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  std::vector<Perm> const& generators() const { return generators_; }

  bool materialized() const { return !elements_.empty(); }
  std::vector<Perm> const& elements() const;
  std::size_t order() const { return elements().size(); }

  /// Materialize the generated group.  Throws CapabilityError if the closure
  /// grows past `limit` elements.  Idempotent; result independent of
  /// generator order.
  void materialize(std::size_t limit = kDefaultClosureLimit);

  bool contains(Perm const& p) const;

  auto operator<=>(PermGroup const&) const = default;

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

PermGroup closure(std::vector<Perm> const& generators, int degree,
                  std::size_t limit = kDefaultClosureLimit);

/// True iff the group acts transitively with order == degree.
bool is_regular(PermGroup const& group);

/// A set of permutations (not necessarily a group) acts semiregularly if no
/// non-identity member fixes a point.
bool is_semiregular_set(std::vector<Perm> const& perms);

/// Orbit partition on {0..degree-1}; orbits sorted by least element, each
/// orbit sorted ascending.
std::vector<std::vector<int>> orbits(PermGroup const& group);

/// Elements of `ambient` commuting with every element of `sub`.
/// Throws InvariantError if `sub` is not contained in `ambient`.
PermGroup centralizer(PermGroup const& ambient, PermGroup const& sub);

/// True iff every generator of `outer` conjugates `inner` onto itself.
bool normalizes(PermGroup const& outer, PermGroup const& inner);

}  // namespace hgs

#endif  // HGS_PERM_GROUP_HPP_
