#include "hgs/perm.hpp"

#include <numeric>

#include "hgs/error.hpp"

namespace hgs {

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= degree() || seen[v])
      throw SpecError("Perm: image table is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (image_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> img(image_.size());
  for (int x = 0; x < degree(); ++x) img[image_[x]] = x;
  Perm p;
  p.image_ = std::move(img);
  return p;
}

int Perm::order() const {
  int ord = 1;
  std::vector<char> seen(image_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    do {
      seen[y] = 1;
      y = image_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Perm::has_uniform_cycle_type() const {
  int first_len = -1;
  std::vector<char> seen(image_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    do {
      seen[y] = 1;
      y = image_[y];
      ++len;
    } while (y != x);
    if (first_len < 0)
      first_len = len;
    else if (len != first_len)
      return false;
  }
  return true;
}

bool Perm::is_fixed_point_free() const {
  for (int x = 0; x < degree(); ++x)
    if (image_[x] == x) return false;
  return true;
}

Perm operator*(Perm const& a, Perm const& b) {
  if (a.degree() != b.degree())
    throw InvariantError("Perm: degree mismatch in composition");
  std::vector<int> img(a.image_.size());
  for (int x = 0; x < a.degree(); ++x) img[x] = a.image_[b.image_[x]];
  Perm p;
  p.image_ = std::move(img);
  return p;
}

std::string Perm::to_cycle_string() const {
  if (is_identity()) return "()";
  std::string out;
  std::vector<char> seen(image_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || image_[x] == x) {
      seen[x] = 1;
      continue;
    }
    out += '(';
    int y = x;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(y);
      seen[y] = 1;
      y = image_[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  return out;
}

}  // namespace hgs
