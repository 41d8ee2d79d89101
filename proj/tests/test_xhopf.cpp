#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hocx/xhopf.hpp"

#include <random>

using namespace hocx;

namespace {

void require_ok(const Report& r) {
  INFO(r.str());
  CHECK(r.ok());
}

Tensor random_tensor(std::mt19937& rng, const Dims& dims, const Subspace& s) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Tensor out(dims);
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Tensor b = Tensor::from_flat(dims, s.vec(j));
    out = out + b.scaled(Rational(coef(rng)));
  }
  return out;
}

// Small coalgebras to run every structure on: grouplike(1..3), the path
// coalgebra and a tensor product.
std::vector<Coalgebra> sample_coalgebras() {
  return {Coalgebra::grouplike(1), Coalgebra::grouplike(2), Coalgebra::grouplike(3), Coalgebra::path(),
          tensor_coalgebra(Coalgebra::grouplike(2), Coalgebra::path())};
}

}  // namespace

TEST_CASE("coenveloping bicoalgebroids") {
  for (const Coalgebra& c : sample_coalgebras()) {
    CAPTURE(c.dim());
    require_ok(check_left_bicoalgebroid(coenveloping_left_data(c)));
    require_ok(check_right_bicoalgebroid(coenveloping_right_data(c)));
    LeftXHopf k = coenveloping_left(c);
    RightXHopf b = coenveloping_right(c);
    require_ok(lemma_suite_left(k));
    require_ok(lemma_suite_right(b));
    CHECK(lemma_suite_left(k).items.size() == 10);
    CHECK(lemma_suite_right(b).items.size() == 10);
  }
}

TEST_CASE("coenveloping group-like and character") {
  for (const Coalgebra& c : sample_coalgebras()) {
    CAPTURE(c.dim());
    LeftXHopf k = coenveloping_left(c);
    Op id = Op::identity(c.dim());
    require_ok(check_group_like(k, coenveloping_group_like(c, id)));
    require_ok(check_character(k, coenveloping_character(c)));
  }
}

TEST_CASE("Hopf algebras give x-Hopf coalgebras") {
  std::vector<HopfAlgebra> hs{group_algebra(cyclic_group(2)), group_algebra(symmetric_group3()), sweedler_h4()};
  for (const HopfAlgebra& h : hs) {
    CAPTURE(h.name);
    require_ok(check_hopf(h));
    LeftXHopf k = hopf_to_left_xhopf(h);
    RightXHopf b = hopf_to_right_xhopf(h);
    require_ok(lemma_suite_left(k));
    require_ok(lemma_suite_right(b));
    // the computed inverse agrees with the closed form
    Op li = hopf_left_nu_inverse(h), ri = hopf_right_nu_inverse(h);
    for (std::size_t j = 0; j < k.cod.space.dim(); ++j) {
      Tensor x = Tensor::from_flat(k.cod.legs, k.cod.space.vec(j));
      CHECK(k.nu_inv(x) == li(x));
    }
    for (std::size_t j = 0; j < b.cod.space.dim(); ++j) {
      Tensor x = Tensor::from_flat(b.cod.legs, b.cod.space.vec(j));
      CHECK(b.nu_inv(x) == ri(x));
    }
  }
}

TEST_CASE("bialgebra without antipode is not x-Hopf") {
  HopfAlgebra m = idempotent_monoid_bialgebra();
  CHECK_FALSE(check_hopf(m).ok());
  require_ok(check_left_bicoalgebroid(hopf_left_data(m)));
  CHECK_THROWS_AS(hopf_to_left_xhopf(m), NotXHopf);
  CHECK_THROWS_AS(hopf_to_right_xhopf(m), NotXHopf);
}

TEST_CASE("weak Hopf algebras") {
  WeakHopf w = weak_from_hopf(sweedler_h4());
  require_ok(check_weak_hopf(w));
  LeftXHopf k = weak_hopf_to_xhopf(w);
  CHECK(k.base.C.dim() == 1);
  require_ok(lemma_suite_left(k));
}

TEST_CASE("property: nu and nu^-1 are mutually inverse on random elements") {
  std::mt19937 rng(7);
  for (const Coalgebra& c : sample_coalgebras()) {
    LeftXHopf k = coenveloping_left(c);
    RightXHopf b = coenveloping_right(c);
    for (int trial = 0; trial < 10; ++trial) {
      Tensor x = random_tensor(rng, k.dom.legs, k.dom.space);
      CHECK(k.nu_inv(k.nu(x)) == x);
      Tensor y = random_tensor(rng, b.cod.legs, b.cod.space);
      CHECK(b.nu(b.nu_inv(y)) == y);
    }
  }
}

TEST_CASE("replacing nu^-1 by a wrong matrix breaks the lemma suite") {
  LeftXHopf k = coenveloping_left(Coalgebra::grouplike(2));
  Matrix bad = k.nu_inv_m;
  bad = bad.scaled(Rational(2));
  Report r = lemma_suite_left(with_nu_inverse(k, bad));
  CHECK_FALSE(r.ok());
}
