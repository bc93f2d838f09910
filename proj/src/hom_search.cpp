#include "hgs/hom_search.hpp"

#include "hgs/error.hpp"

namespace hgs {

bool close_partial_hom(FiniteGroup const& src, FiniteGroup const& dst,
                       std::vector<int>& img, std::vector<int>& used) {
  std::vector<int> known;
  for (int a = 0; a < src.order(); ++a)
    if (img[a] != -1) known.push_back(a);

  auto handle = [&](int a, int b) -> bool {
    int c = src.mul(a, b);
    int hc = dst.mul(img[a], img[b]);
    if (img[c] == -1) {
      if (used[hc] != -1) return false;
      img[c] = hc;
      used[hc] = c;
      known.push_back(c);
      return true;
    }
    return img[c] == hc;
  };

  std::size_t processed = 0;
  while (processed < known.size()) {
    std::size_t hi = known.size();
    for (std::size_t i = processed; i < hi; ++i) {
      for (std::size_t j = 0; j < known.size(); ++j) {
        if (!handle(known[i], known[j])) return false;
        if (!handle(known[j], known[i])) return false;
      }
    }
    processed = hi;
  }
  return true;
}

namespace {

bool search_rec(FiniteGroup const& src, FiniteGroup const& dst,
                std::vector<int> const& gens,
                std::vector<std::vector<int>> const& cands, std::size_t depth,
                std::vector<int> const& img, std::vector<int> const& used,
                std::function<bool(std::vector<int> const&)> const& visit) {
  if (depth == gens.size()) return visit(img);
  int g = gens[depth];
  for (int h : cands[depth]) {
    if (img[g] != -1) {
      // Generator image already forced by closure of earlier choices.
      if (img[g] != h) continue;
      if (!search_rec(src, dst, gens, cands, depth + 1, img, used, visit))
        return false;
      continue;
    }
    if (used[h] != -1) continue;
    std::vector<int> img2 = img, used2 = used;
    img2[g] = h;
    used2[h] = g;
    if (!close_partial_hom(src, dst, img2, used2)) continue;
    if (!search_rec(src, dst, gens, cands, depth + 1, img2, used2, visit))
      return false;
  }
  return true;
}

}  // namespace

void search_injective_homs(
    FiniteGroup const& src, FiniteGroup const& dst,
    std::vector<int> const& gens, std::vector<std::vector<int>> const& cands,
    std::function<bool(std::vector<int> const&)> const& visit) {
  if (gens.size() != cands.size())
    throw InvariantError("search_injective_homs: gens/cands size mismatch");
  std::vector<int> img(src.order(), -1), used(dst.order(), -1);
  img[0] = 0;
  used[0] = 0;
  search_rec(src, dst, gens, cands, 0, img, used, visit);
}

}  // namespace hgs
