#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hocx/groupoid.hpp"

#include <random>

using namespace hocx;

namespace {

void require_ok(const Report& r) {
  INFO(r.str());
  CHECK(r.ok());
}

std::size_t pow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("builders are groupoids") {
  for (const FiniteGroupoid& g :
       {trivial_groupoid(), pair_groupoid(2), pair_groupoid(3), group_groupoid(symmetric_group3()),
        product_groupoid(pair_groupoid(2), group_groupoid(cyclic_group(2))),
        disjoint_union(group_groupoid(cyclic_group(3)), trivial_groupoid())}) {
    CAPTURE(g.name);
    require_ok(check_groupoid(g));
    require_ok(check_cyclic(g, identity_theta(g)));
  }
}

TEST_CASE("broken composition table is reported") {
  FiniteGroupoid p = pair_groupoid(2);
  std::vector<std::array<std::size_t, 3>> comp;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (p.comp[a][b] != npos) comp.push_back({a, b, p.comp[a][b]});
  comp[1][2] = 3;  // (0<-0)(0<-1) should be (0<-1)
  FiniteGroupoid q = groupoid_from_table("broken", p.objects, p.morphisms, p.src, p.tgt, comp);
  Report r = check_groupoid(q);
  CHECK_FALSE(r.ok());
  CHECK_THROWS_AS(groupoid_from_table("x", {"a"}, {"f"}, {0}, {1}, {}), GroupoidError);
}

TEST_CASE("cyclic structures") {
  FiniteGroupoid z2 = group_groupoid(cyclic_group(2));
  require_ok(check_cyclic(z2, {1}));
  FiniteGroupoid s3 = group_groupoid(symmetric_group3());
  Report r = check_cyclic(s3, {1});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("f theta_A = theta_B f")->witness.empty());
  // Z/3 + point, generator on the Z/3 object and the identity on the point
  FiniteGroupoid u = disjoint_union(group_groupoid(cyclic_group(3)), trivial_groupoid());
  require_ok(check_cyclic(u, {1, 3}));
  CHECK_THROWS_AS(nerve_cyclic_module(s3, {1}, 2), NotCyclic);
}

TEST_CASE("nerve dimensions") {
  CyclicObject t = nerve_cyclic_module(trivial_groupoid(), {0}, 3);
  CHECK(t.dims == std::vector<std::size_t>{1, 1, 1, 1});
  CyclicObject p = nerve_cyclic_module(pair_groupoid(2), identity_theta(pair_groupoid(2)), 3);
  CHECK(p.dims == std::vector<std::size_t>{2, 4, 8, 16});
  FiniteGroupoid s3 = group_groupoid(symmetric_group3());
  CyclicObject s = nerve_cyclic_module(s3, identity_theta(s3), 3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(s.dims[n] == pow(6, n));
}

TEST_CASE("degree-1 cyclic operator is theta_s(g) g^-1") {
  FiniteGroupoid z3 = group_groupoid(cyclic_group(3));
  CyclicObject x = nerve_cyclic_module(z3, {1}, 1);
  // tau[g] = [g1 g^-1]: g0 -> g1, g1 -> g0, g2 -> g2
  Matrix expect(3, 3);
  expect.set(1, 0, 1);
  expect.set(0, 1, 1);
  expect.set(2, 2, 1);
  CHECK(x.t[1] == expect);
}

TEST_CASE("property: nerve of random cyclic groupoids verifies") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    CyclicGroupoid c = random_cyclic_groupoid(rng);
    CAPTURE(c.label);
    CHECK(c.g.n_obj() <= 5);
    CHECK(c.g.n_mor() <= 12);
    require_ok(check_groupoid(c.g));
    require_ok(check_cyclic(c.g, c.theta));
    require_ok(verify_cyclic(nerve_cyclic_module(c.g, c.theta, 3)));
  }
}

TEST_CASE("groupoid x-Hopf coalgebra") {
  FiniteGroupoid p = pair_groupoid(2);
  RightXHopf b = groupoid_xhopf(p);
  CHECK(b.dom.space.dim() == 8);
  require_ok(check_right_bicoalgebroid(b.base));
  require_ok(lemma_suite_right(b));
  CHECK(b.nu_inv_m * b.nu_m == Matrix::identity(8));
  // nu^-1(g (x) h) = g (x) g^-1 h
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h) {
      if (p.tgt[g] != p.tgt[h]) continue;
      Tensor x = Tensor::basis({4, 4}, {uint32_t(g), uint32_t(h)});
      CHECK(b.nu_inv(x) == Tensor::basis({4, 4}, {uint32_t(g), uint32_t(p.mul(p.inv[g], h))}));
    }
  RightXHopf t = groupoid_xhopf(trivial_groupoid());
  CHECK(t.base.B.dim() == 1);
  require_ok(lemma_suite_right(t));
  require_ok(lemma_suite_right(groupoid_xhopf(group_groupoid(cyclic_group(3)))));
}

TEST_CASE("theta C is a SAYD module") {
  for (const auto& [g, th] : std::vector<std::pair<FiniteGroupoid, Theta>>{
           {pair_groupoid(2), identity_theta(pair_groupoid(2))},
           {trivial_groupoid(), {0}},
           {group_groupoid(cyclic_group(3)), {2}},
           {product_groupoid(pair_groupoid(2), group_groupoid(cyclic_group(2))),
            product_theta(pair_groupoid(2), identity_theta(pair_groupoid(2)), group_groupoid(cyclic_group(2)), {1})}}) {
    CAPTURE(g.name);
    RightXHopf b = groupoid_xhopf(g);
    require_ok(check_sayd_rl(theta_sayd(b, g, th)));
  }
}

TEST_CASE("comparison isomorphism") {
  FiniteGroupoid p = pair_groupoid(2), z3 = group_groupoid(cyclic_group(3)), z2 = group_groupoid(cyclic_group(2));
  for (const auto& [g, th] : std::vector<std::pair<FiniteGroupoid, Theta>>{
           {trivial_groupoid(), {0}}, {p, identity_theta(p)}, {z3, {0}}, {z3, {1}}, {z2, {0}}}) {
    CAPTURE(g.name);
    ComparisonIso c = comparison_iso(g, th, 3);
    require_ok(c.report);
    require_ok(verify_cyclic(c.coefficients));
  }
  ComparisonIso z = comparison_iso(z2, {0}, 1);
  CHECK(z.coefficients.dims[1] == 2);
  ComparisonIso t = comparison_iso(trivial_groupoid(), {0}, 3);
  for (const Matrix& m : t.forward) CHECK(m == Matrix::identity(1));
}

TEST_CASE("corrupted comparison map fails tau commutation") {
  FiniteGroupoid p = pair_groupoid(2);
  ComparisonIso c = comparison_iso(p, identity_theta(p), 2);
  std::vector<Matrix> maps = c.forward;
  Matrix& m = maps[1];
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.col(j).empty()) {
      auto [r, v] = *m.col(j).begin();
      m.set(r, j, -v);
      break;
    }
  CHECK_FALSE(iso_check(c.coefficients, c.nerve, maps).ok());
}

TEST_CASE("groupoid algebra is a weak Hopf algebra") {
  WeakHopf w = groupoid_algebra(pair_groupoid(2));
  require_ok(check_weak_hopf(w));
  LeftXHopf k = weak_hopf_to_xhopf(w);
  CHECK(k.base.C.dim() == 2);
  require_ok(lemma_suite_left(k));
}
