#include "hocx/group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hocx {

std::size_t FiniteGroup::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (mul[g][h] == 0) return h;
  throw std::logic_error("group " + name + ": element without inverse");
}

std::vector<std::size_t> FiniteGroup::center() const {
  std::vector<std::size_t> z;
  for (std::size_t g = 0; g < order(); ++g) {
    bool central = true;
    for (std::size_t h = 0; h < order() && central; ++h) central = mul[g][h] == mul[h][g];
    if (central) z.push_back(g);
  }
  return z;
}

FiniteGroup trivial_group() { return {"1", {{0}}}; }

FiniteGroup cyclic_group(std::size_t n) {
  FiniteGroup g{"Z/" + std::to_string(n), std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n))};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

FiniteGroup klein_group() {
  FiniteGroup g{"Klein", std::vector<std::vector<std::size_t>>(4, std::vector<std::size_t>(4))};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) g.mul[a][b] = a ^ b;
  return g;
}

FiniteGroup symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g{"S3", std::vector<std::vector<std::size_t>>(6, std::vector<std::size_t>(6))};
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};  // (a b)(i) = a(b(i))
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

bool is_group(const FiniteGroup& g) {
  std::size_t n = g.order();
  for (const auto& row : g.mul)
    if (row.size() != n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul[0][a] != a || g.mul[a][0] != a) return false;
    bool inv = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mul[a][b] >= n) return false;
      inv = inv || (g.mul[a][b] == 0 && g.mul[b][a] == 0);
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) return false;
    }
    if (!inv) return false;
  }
  return true;
}

}  // namespace hocx
