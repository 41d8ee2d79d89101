#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hocx/linalg.hpp"

#include <random>

using namespace hocx;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density_pct = 50) {
  std::uniform_int_distribution<int> coin(0, 99), val(-3, 3), den(1, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density_pct) m.set(i, j, frac(val(rng), den(rng)));
  return m;
}

SparseVec random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(-4, 4);
  SparseVec v;
  for (std::size_t i = 0; i < n; ++i) {
    int x = val(rng);
    if (x != 0) v.emplace(i, x);
  }
  return v;
}

// Independent oracle: naive dense Gauss-Jordan over Q.
std::size_t naive_rank(const Matrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, x] : m.col(j)) a[i][j] = x;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
    std::size_t p = rk;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rk || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[rk][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

}  // namespace

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/-2"));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix(2, 2)).dim() == 2);
  CHECK(kernel(Matrix::identity(2)).dim() == 0);
  Subspace k = kernel(Matrix::from_rows({{1, 1}}));
  REQUIRE(k.dim() == 1);
  // spanned by (1, -1)
  CHECK(k.contains(SparseVec{{0, 1}, {1, -1}}));
}

TEST_CASE("solve examples") {
  SparseVec b{{0, 3}, {1, -1}};
  CHECK(*solve(Matrix::identity(2), b) == b);
  CHECK_FALSE(solve(Matrix(2, 2), b).has_value());
  CHECK(*solve(Matrix::from_rows({{2}}), SparseVec{{0, 1}}) == SparseVec{{0, frac(1, 2)}});
  CHECK_THROWS_AS(solve(Matrix::identity(1), SparseVec{{3, 1}}), DimensionMismatch);
}

TEST_CASE("restrict examples") {
  Subspace axis = Subspace::span(2, {SparseVec{{0, 1}}});
  CHECK(restrict(Matrix::identity(2), axis, axis) == Matrix::identity(1));
  Matrix rot = Matrix::from_rows({{0, -1}, {1, 0}});
  try {
    restrict(rot, axis, axis);
    FAIL("rotation should not preserve the axis");
  } catch (const NotInvariant& e) {
    CHECK(e.column == 0);
  }
  Matrix d = Matrix::from_rows({{1, 0}, {0, 2}});
  CHECK(restrict(d, axis, axis) == Matrix::from_rows({{1}}));
}

TEST_CASE("kron examples") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  CHECK(kron(Matrix::from_rows({{2}}), Matrix::from_rows({{3}})) == Matrix::from_rows({{6}}));
  Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  Matrix k = kron(swap, swap);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(k.apply(unit(2 * i + j)) == unit(2 * (1 - i) + (1 - j)));
}

TEST_CASE("rank-nullity and oracles on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    Matrix m = random_matrix(rng, r, c, 20 + static_cast<int>(rng() % 70));
    std::size_t rk = rank(m);
    CHECK(rk == naive_rank(m));
    CHECK(rk == bareiss_rank(m));
    Subspace k = kernel(m);
    CHECK(rk + k.dim() == c);
    for (std::size_t j = 0; j < k.dim(); ++j) CHECK(m.apply(k.vec(j)).empty());
  }
}

TEST_CASE("solve(M, Mv) always succeeds") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix m = random_matrix(rng, r, c);
    SparseVec b = m.apply(random_vec(rng, c));
    auto u = solve(m, b);
    REQUIRE(u.has_value());
    CHECK(m.apply(*u) == b);
  }
}

TEST_CASE("inverse of random invertible matrices") {
  std::mt19937 rng(5);
  int seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m = random_matrix(rng, 4, 4, 70);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 4));
    if (!inv) continue;
    ++seen;
    CHECK(*inv * m == Matrix::identity(4));
    CHECK(m * *inv == Matrix::identity(4));
  }
  CHECK(seen > 10);
}

TEST_CASE("TensorIndex flatten/unflatten are inverse") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::size_t> dims;
    std::size_t prod = 1;
    while (dims.size() < 5) {
      std::size_t d = 1 + rng() % 6;
      if (prod * d > 10000) break;
      prod *= d;
      dims.push_back(d);
    }
    TensorIndex ti(dims);
    REQUIRE(ti.size() == prod);
    for (std::size_t f = 0; f < prod; ++f) {
      auto idx = ti.unflatten(f);
      REQUIRE(ti.flatten(idx) == f);
    }
  }
  TensorIndex ti({2, 3, 4});
  CHECK(ti.flatten({1, 2, 3}) == (1 * 3 + 2) * 4 + 3);
}

TEST_CASE("kron is multiplicative") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3, d = 1 + rng() % 3, e = 1 + rng() % 3,
                f = 1 + rng() % 3;
    Matrix A = random_matrix(rng, a, b), C = random_matrix(rng, b, c);
    Matrix B = random_matrix(rng, d, e), D = random_matrix(rng, e, f);
    CHECK(kron(A, B) * kron(C, D) == kron(A * C, B * D));
  }
}

TEST_CASE("subspace coordinates and intersection") {
  Subspace u = Subspace::span(3, {SparseVec{{0, 1}, {1, 1}}, SparseVec{{2, 1}}});
  Subspace w = Subspace::span(3, {SparseVec{{0, 1}, {1, 1}, {2, 1}}, SparseVec{{0, 1}}});
  CHECK(u.dim() == 2);
  auto c = u.coords(SparseVec{{0, 2}, {1, 2}, {2, -1}});
  REQUIRE(c.has_value());
  CHECK(u.combine(*c) == SparseVec{{0, 2}, {1, 2}, {2, -1}});
  CHECK_FALSE(u.contains(SparseVec{{0, 1}}));
  Subspace i = u.intersect(w);
  CHECK(i.dim() == 1);
  CHECK(i.contains(SparseVec{{0, 1}, {1, 1}, {2, 1}}));
  CHECK(Subspace::image(Matrix::identity(3)) == Subspace::full(3));
}
