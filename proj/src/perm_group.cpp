#include "hgs/perm_group.hpp"

#include <algorithm>
#include <set>

#include "hgs/error.hpp"

namespace hgs {

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (auto const& g : generators_)
    if (g.degree() != degree_)
      throw InvariantError("PermGroup: generator degree mismatch");
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  g.generators_ = elements;
  g.elements_ = std::move(elements);
  return g;
}

std::vector<Perm> const& PermGroup::elements() const {
  if (elements_.empty())
    throw InvariantError("PermGroup: elements not materialized");
  return elements_;
}

void PermGroup::materialize(std::size_t limit) {
  if (!elements_.empty()) return;
  std::set<Perm> seen;
  seen.insert(Perm::identity(degree_));
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& e : frontier) {
      for (auto const& g : generators_) {
        Perm p = g * e;
        if (seen.insert(p).second) {
          if (seen.size() > limit)
            throw CapabilityError("closure exceeded element limit");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());
}

bool PermGroup::contains(Perm const& p) const {
  return std::binary_search(elements().begin(), elements().end(), p);
}

PermGroup closure(std::vector<Perm> const& generators, int degree,
                  std::size_t limit) {
  PermGroup g(degree, generators);
  g.materialize(limit);
  return g;
}

bool is_regular(PermGroup const& group) {
  if (group.order() != static_cast<std::size_t>(group.degree())) return false;
  auto parts = orbits(group);
  return parts.size() == 1;
}

bool is_semiregular_set(std::vector<Perm> const& perms) {
  for (auto const& p : perms)
    if (!p.is_identity() && !p.is_fixed_point_free()) return false;
  return true;
}

std::vector<std::vector<int>> orbits(PermGroup const& group) {
  int n = group.degree();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> parts;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const& g : group.generators()) {
        int y = g[orbit[i]];
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    parts.push_back(std::move(orbit));
  }
  return parts;
}

PermGroup centralizer(PermGroup const& ambient, PermGroup const& sub) {
  if (ambient.degree() != sub.degree())
    throw InvariantError("centralizer: degree mismatch");
  for (auto const& s : sub.elements())
    if (!ambient.contains(s))
      throw InvariantError("centralizer: sub is not contained in ambient");
  // Commuting with a generating set suffices; use the sub's generators.
  auto const& gens = sub.generators();
  std::vector<Perm> out;
  for (auto const& a : ambient.elements()) {
    bool commutes = true;
    for (auto const& s : gens) {
      if (a * s != s * a) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(a);
  }
  return PermGroup::from_elements(ambient.degree(), std::move(out));
}

bool normalizes(PermGroup const& outer, PermGroup const& inner) {
  if (outer.degree() != inner.degree())
    throw InvariantError("normalizes: degree mismatch");
  auto const& inner_elems = inner.elements();
  for (auto const& g : outer.generators()) {
    Perm gi = g.inverse();
    for (auto const& h : inner_elems) {
      if (!inner.contains(g * h * gi)) return false;
    }
  }
  return true;
}

}  // namespace hgs
