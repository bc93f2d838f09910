#include "hgs/group_spec.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "hgs/error.hpp"
#include "hgs/numtheory.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

FiniteGroup cyclic_group(int m) {
  if (m < 1) throw SpecError("C<m>: m must be >= 1");
  std::vector<int> table(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a * m + b] = (a + b) % m;
  return FiniteGroup(m, std::move(table), "C" + std::to_string(m));
}

FiniteGroup dihedral_group(int order) {
  if (order < 4 || order % 2 != 0)
    throw SpecError("D<2m>: order must be even and >= 4");
  int m = order / 2;
  // r^i s^j with index i + m*j; s r s = r^-1.
  int n = order;
  auto idx = [m](int i, int j) { return i + m * j; };
  std::vector<int> table(n * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii = (j == 0) ? (i + k) % m : ((i - k) % m + m) % m;
          int jj = (j + l) % 2;
          table[idx(i, j) * n + idx(k, l)] = idx(ii, jj);
        }
  return FiniteGroup(n, std::move(table), "D" + std::to_string(order));
}

FiniteGroup dicyclic_group(int m) {
  if (m < 2) throw SpecError("Dic<m>: m must be >= 2");
  // <a, b | a^{2m} = 1, b^2 = a^m, b a b^{-1} = a^{-1}>, elements a^i b^j
  // with 0 <= i < 2m, j in {0,1}, index i + 2m*j.
  int n = 4 * m;
  int mm = 2 * m;
  auto idx = [mm](int i, int j) { return i + mm * j; };
  std::vector<int> table(n * n);
  for (int i = 0; i < mm; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < mm; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii, jj;
          if (j == 0) {
            ii = (i + k) % mm;
            jj = l;
          } else if (l == 0) {
            ii = ((i - k) % mm + mm) % mm;
            jj = 1;
          } else {
            ii = (((i - k) % mm + mm) + m) % mm;
            jj = 0;
          }
          table[idx(i, j) * n + idx(k, l)] = idx(ii, jj);
        }
  return FiniteGroup(n, std::move(table), "Dic" + std::to_string(m));
}

FiniteGroup semidirect_cyclic(int m, int k, long u) {
  if (m < 1 || k < 1) throw SpecError("Cm:Ck@u: orders must be >= 1");
  u = ((u % m) + m) % m;
  if (std::gcd(static_cast<long>(m), u) != 1)
    throw SpecError("Cm:Ck@u: multiplier u must be coprime to m");
  long uk = 1;
  for (int i = 0; i < k; ++i) uk = (uk * u) % m;
  if (uk != 1 % m)
    throw SpecError("Cm:Ck@u: u^k must be 1 mod m for a valid action");
  // (i, j)(i', j') = (i + u^j i', j + j'), index j*m + i.
  std::vector<long> upow(k);
  upow[0] = 1 % m;
  for (int j = 1; j < k; ++j) upow[j] = (upow[j - 1] * u) % m;
  int n = m * k;
  auto idx = [m](int i, int j) { return j * m + i; };
  std::vector<int> table(n * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < k; ++j2)
          table[idx(i, j) * n + idx(i2, j2)] =
              idx(static_cast<int>((i + upow[j] * i2) % m), (j + j2) % k);
  std::ostringstream name;
  name << "C" << m << ":C" << k << "@" << u;
  return FiniteGroup(n, std::move(table), name.str());
}

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[static_cast<std::size_t>(idx(x, y)) * n + idx(x2, y2)] =
              idx(a.mul(x, x2), b.mul(y, y2));
  return FiniteGroup(n, std::move(table), a.name() + "x" + b.name());
}

FiniteGroup abelian_group(std::vector<long> const& factor_orders) {
  FiniteGroup g = cyclic_group(1);
  for (long f : factor_orders)
    g = direct_product(g, cyclic_group(static_cast<int>(f)));
  std::vector<long> sorted = factor_orders;
  std::sort(sorted.begin(), sorted.end());
  g.set_name(abelian_type_name(sorted));
  return g;
}

FiniteGroup group_from_perms(std::vector<Perm> const& gens, std::string name) {
  if (gens.empty()) throw SpecError("group_from_perms: empty generator list");
  PermGroup pg = closure(gens, gens[0].degree());
  auto const& elems = pg.elements();  // sorted, identity first
  int n = static_cast<int>(elems.size());
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = index.at(elems[a] * elems[b]);
  return FiniteGroup(n, std::move(table), std::move(name));
}

namespace {

FiniteGroup construct_atom(std::string const& atom) {
  auto num_after = [&](std::size_t prefix) -> int {
    std::string s = atom.substr(prefix);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw SpecError("bad group atom: " + atom +
                      " (supported: C<m>, D<2m>, Q<2^v>, SD16, Dic<m>, A4, "
                      "S3, C<m>:C<k>@<u>, file:<path>)");
    return std::stoi(s);
  };
  if (atom == "A4") {
    return group_from_perms({Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})}, "A4");
  }
  if (atom == "S3") {
    auto g = dihedral_group(6);
    g.set_name("S3");
    return g;
  }
  if (atom == "SD16") {
    auto g = semidirect_cyclic(8, 2, 3);
    g.set_name("SD16");
    return g;
  }
  if (atom.rfind("Dic", 0) == 0) return dicyclic_group(num_after(3));
  if (atom.rfind("SD", 0) == 0)
    throw SpecError("unsupported semidihedral order in atom: " + atom);
  if (atom[0] == 'C') return cyclic_group(num_after(1));
  if (atom[0] == 'D') return dihedral_group(num_after(1));
  if (atom[0] == 'Q') {
    int q = num_after(1);
    if (q < 8 || (q & (q - 1)) != 0)
      throw SpecError("Q<2^v> requires a power of two >= 8, got " + atom);
    auto g = dicyclic_group(q / 4);
    g.set_name("Q" + std::to_string(q));
    return g;
  }
  throw SpecError(
      "unknown group atom '" + atom +
      "' (supported: C<m>, D<2m>, Q<2^v>, SD16, Dic<m>, A4, S3, "
      "C<m>:C<k>@<u>, file:<path>)");
}

FiniteGroup construct_factor(std::string const& factor) {
  auto colon = factor.find(':');
  if (colon != std::string::npos) {
    auto at = factor.find('@');
    if (at == std::string::npos || factor[0] != 'C' ||
        factor[colon + 1] != 'C')
      throw SpecError("bad semidirect spec (want C<m>:C<k>@<u>): " + factor);
    int m = std::stoi(factor.substr(1, colon - 1));
    int k = std::stoi(factor.substr(colon + 2, at - colon - 2));
    long u = std::stol(factor.substr(at + 1));
    return semidirect_cyclic(m, k, u);
  }
  return construct_atom(factor);
}

}  // namespace

FiniteGroup construct(std::string const& spec) {
  if (spec.rfind("file:", 0) == 0) return load_cayley_file(spec.substr(5));
  if (spec.empty()) throw SpecError("empty group spec");
  std::vector<std::string> factors;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(cur);
  FiniteGroup g = construct_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = direct_product(g, construct_factor(factors[i]));
  g.set_name(spec);
  return g;
}

FiniteGroup load_cayley_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open Cayley file: " + path);
  int n;
  if (!(in >> n) || n < 1) throw SpecError("bad order in Cayley file");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (auto& v : table)
    if (!(in >> v)) throw SpecError("truncated Cayley file: " + path);
  return FiniteGroup(n, std::move(table), "file:" + path);
}

void save_cayley_file(FiniteGroup const& g, std::string const& path) {
  std::ofstream out(path);
  out << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b)
      out << g.mul(a, b) << (b + 1 == g.order() ? "" : " ");
    out << "\n";
  }
}

std::vector<FiniteGroup> all_abelian_groups_of_order(int n) {
  // One group per choice of partition of each v_p.
  std::vector<std::vector<long>> types{{}};
  for (auto const& [p, v] : prime_valuations(n)) {
    std::vector<std::vector<long>> next;
    for (auto const& part : partitions(v)) {
      for (auto const& base : types) {
        auto t = base;
        for (int e : part) t.push_back(ipow(p, e));
        next.push_back(std::move(t));
      }
    }
    types = std::move(next);
  }
  std::vector<FiniteGroup> out;
  for (auto& t : types) {
    std::sort(t.begin(), t.end());
    out.push_back(abelian_group(t));
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.name() < b.name();
  });
  return out;
}

namespace {

// Complete lists of prime-power censuses the catalog can certify.
std::vector<FiniteGroup> prime_power_census(long p, int v) {
  if (v == 1) return {cyclic_group(static_cast<int>(p))};
  if (v == 2)  // all groups of order p^2 are abelian
    return all_abelian_groups_of_order(static_cast<int>(p * p));
  if (p == 2 && v == 3) {
    std::vector<FiniteGroup> out = all_abelian_groups_of_order(8);
    out.push_back(dihedral_group(8));
    auto q8 = dicyclic_group(2);
    q8.set_name("Q8");
    out.push_back(q8);
    return out;
  }
  throw CapabilityError("no complete census for order " +
                        std::to_string(ipow(p, v)));
}

}  // namespace

bool nilpotent_census_complete(int n) {
  for (auto const& [p, v] : prime_valuations(n))
    if (v > 2 && !(p == 2 && v == 3)) return false;
  return true;
}

std::vector<FiniteGroup> all_nilpotent_groups_of_order(int n) {
  if (!nilpotent_census_complete(n))
    throw CapabilityError("nilpotent census incomplete for order " +
                          std::to_string(n));
  std::vector<FiniteGroup> out{cyclic_group(1)};
  for (auto const& [p, v] : prime_valuations(n)) {
    auto sylows = prime_power_census(p, v);
    std::vector<FiniteGroup> next;
    for (auto const& base : out)
      for (auto const& s : sylows) {
        auto g = direct_product(base, s);
        if (base.order() == 1) g.set_name(s.name());
        next.push_back(std::move(g));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<FiniteGroup> all_groups_of_order(int n) {
  // Certified complete censuses only.
  auto pv = prime_valuations(n);
  if (n == 1) return {cyclic_group(1)};
  if (pv.size() == 1) {
    try {
      return prime_power_census(pv[0].first, pv[0].second);
    } catch (CapabilityError const&) {
      return {};
    }
  }
  if (pv.size() == 2 && pv[0].first == 2 && pv[0].second == 1 &&
      pv[1].second == 1) {
    // Order 2p: cyclic and dihedral only.
    return {cyclic_group(n), dihedral_group(n)};
  }
  if (n == 12) {
    auto dic3 = dicyclic_group(3);
    return {cyclic_group(12), abelian_group({2, 6}), dihedral_group(12),
            construct("A4"), dic3};
  }
  if (n == 15) return {cyclic_group(15)};
  if (n == 9) return all_abelian_groups_of_order(9);
  return {};
}

}  // namespace hgs
