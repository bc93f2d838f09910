#ifndef HGS_PERM_HPP_
#define HGS_PERM_HPP_

#include <compare>
#include <string>
#include <vector>

namespace hgs {

/// A permutation of {0..degree-1} stored as an image table.
///
/// Permutations act on the left and compose as (a*b)(x) = a(b(x)).
/// Ordering is lexicographic on the image table, so the identity is the
/// least element of any set of permutations of equal degree.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> image);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator[](int x) const { return image_[x]; }
  std::vector<int> const& image() const { return image_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;

  // All cycles of equal length, i.e. <*this> acts semiregularly.
  bool has_uniform_cycle_type() const;
  bool is_fixed_point_free() const;

  friend Perm operator*(Perm const& a, Perm const& b);
  auto operator<=>(Perm const&) const = default;

  std::string to_cycle_string() const;

 private:
  std::vector<int> image_;
};

}  // namespace hgs

#endif  // HGS_PERM_HPP_
