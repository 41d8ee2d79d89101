#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hocx/builders.hpp"
#include "hocx/galois.hpp"
#include "hocx/groupoid.hpp"

using namespace hocx;

namespace {

void require_ok(const Report& r) {
  INFO(r.str());
  CHECK(r.ok());
}

bool item_fails(const Report& r, const std::string& name) {
  const CheckItem* it = r.find(name);
  return it && !it->pass && !it->witness.empty();
}

}  // namespace

TEST_CASE("C is a SAYD module over C^e") {
  for (const Coalgebra& c : {Coalgebra::grouplike(1), Coalgebra::grouplike(3), Coalgebra::path()}) {
    LeftXHopf k = coenveloping_left(c);
    InducedSayd m = induced_sayd_on_base(k, coenveloping_group_like(c, Op::identity(c.dim())),
                                         coenveloping_character(c));
    require_ok(m.conditions);
    require_ok(check_sayd_lr(m.module));
  }
}

TEST_CASE("perturbed coaction breaks the anti Yetter-Drinfeld condition") {
  Coalgebra c = Coalgebra::grouplike(2);
  LeftXHopf k = coenveloping_left(c);
  SaydLR m = induced_sayd_on_base(k, coenveloping_group_like(c, Op::identity(2)), coenveloping_character(c)).module;
  // m -> m (x) (m (x) m) in C^e; the unperturbed coaction is c -> c (x) (c (x) c)
  Matrix co = m.coaction.matrix();
  Matrix bad = co;
  // send e_0 additionally to e_0 (x) (e_0 (x) e_1) which keeps it inside M box_C K
  bad.add_to(0 * 4 + 1, 0, Rational(1));
  SaydLR p = m;
  p.coaction = Op("bad", {2}, {2, 4}, bad);
  Report r = check_sayd_lr(p);
  INFO(r.str());
  CHECK(item_fails(r, "(ii) anti Yetter-Drinfeld"));
}

TEST_CASE("groupoid coefficients") {
  FiniteGroupoid p = pair_groupoid(2);
  require_ok(check_sayd_rl(theta_sayd(groupoid_xhopf(p), p, identity_theta(p))));
  FiniteGroupoid z3 = group_groupoid(cyclic_group(3));
  require_ok(check_sayd_rl(theta_sayd(groupoid_xhopf(z3), z3, {1})));
}

TEST_CASE("hand-edited coaction fails stability") {
  // Z/3 with theta = generator and the coaction doubled: c |> g = c for every g,
  // so stability reads 2c = c
  FiniteGroupoid z3 = group_groupoid(cyclic_group(3));
  RightXHopf b = groupoid_xhopf(z3);
  SaydRL m = theta_sayd(b, z3, {1});
  m.coaction = Op("co", {1}, {3, 1}, m.coaction.matrix().scaled(Rational(2)));
  Report r = check_sayd_rl(m);
  CHECK(item_fails(r, "stability"));
}

TEST_CASE("trivial one-dimensional SAYD") {
  HopfAlgebra q = group_algebra(trivial_group());
  require_ok(check_sayd_lr(hopf_trivial_sayd_lr(hopf_to_left_xhopf(q))));
  require_ok(check_sayd_rl(hopf_trivial_sayd_rl(hopf_to_right_xhopf(q))));
}

TEST_CASE("B over itself") {
  FiniteGroup z3 = cyclic_group(3);
  for (const FiniteGroupoid& g : {pair_groupoid(2), group_groupoid(z3)}) {
    CAPTURE(g.name);
    RightXHopf b = groupoid_xhopf(g);
    ComoduleRing a = self_comodule_ring(b);
    require_ok(check_cring(a.ring));
    require_ok(check_comodule_ring(a));
    Report mc = check_module_coalgebra(self_module_coalgebra(b));
    for (const char* item : {"action associative", "action unital", "ii eps(t <| b) = eps(t) eps(b)",
                             "iii Delta(t <| b) = t1 <| b1 (x) t2 <| b2"})
      CHECK_MESSAGE(mc.passed(item), item);
  }
  for (const HopfAlgebra& h : {group_algebra(cyclic_group(2)), sweedler_h4()})
    require_ok(check_module_coalgebra(hopf_module_coalgebra(h.name, h, h.coalg, h.mul)));
}

TEST_CASE("groupoid coalgebra as a comodule coalgebra over S^e") {
  // one object, so S = Q
  FiniteGroupoid z3 = group_groupoid(cyclic_group(3));
  EquivariantCoextension x = self_coextension(groupoid_xhopf(z3));
  CHECK(x.s.quotient.quotient.dim() == 1);
  require_ok(check_comodule_coalgebra(x.k));
}

TEST_CASE("checkers are total") {
  // wrong shapes are reported, not thrown
  Coalgebra c = Coalgebra::grouplike(2);
  LeftXHopf k = coenveloping_left(c);
  SaydLR m;
  m.name = "broken";
  m.over = k;
  m.dim = 2;
  m.left_c = Op("l", {2}, {2, 2}, Matrix(4, 2));
  m.action = Op("a", {4, 2}, {2}, Matrix(2, 8));
  m.coaction = Op("co", {2}, {2, 4}, Matrix(8, 2));
  Report r;
  CHECK_NOTHROW(r = check_sayd_lr(m));
  CHECK_FALSE(r.ok());
}
