#include "hocx/sayd.hpp"

namespace hocx {

namespace {

Tensor D(const Coalgebra& c, const Tensor& t, std::size_t leg) { return c.delta().apply(t, leg); }
Tensor E(const Coalgebra& c, const Tensor& t, std::size_t leg) { return c.eps().apply(t, leg); }

void expect_ok(Report& r, const std::string& name, const Report& sub) {
  for (const auto& it : sub.items)
    if (!it.pass) {
      r.fail(name, it.name + ": " + it.witness);
      return;
    }
  r.pass(name);
}

}  // namespace

Realized action_domain(const LeftXHopf& k, std::size_t dim, const Op& left_c) {
  Dims legs{k.base.K.dim(), dim};
  return {legs, iterated_cotensor(legs, {{coaction_right(k.base), left_c}})};
}

Realized action_domain(const RightXHopf& b, std::size_t dim, const Op& right_c) {
  Dims legs{dim, b.base.B.dim()};
  return {legs, iterated_cotensor(legs, {{right_c, coaction_left(b.base)}})};
}

Op canonical_right_coaction(const SaydLR& m) {
  const LeftBicoalgebroid& k = m.over.base;
  return Op::from_fn("rho_R", {m.dim}, {m.dim, k.C.dim()}, [&](const Idx& i) {
    Tensor t = D(k.K, k.eta.apply(m.left_c(Tensor::basis({m.dim}, i)), 0), 0);  // k1 k2 m
    t = m.action.apply(permute(t, {0, 2, 1}), 0);
    return k.alpha.apply(t, 1);
  });
}

Op canonical_left_coaction(const SaydRL& m) {
  const RightBicoalgebroid& b = m.over.base;
  return Op::from_fn("rho_L", {m.dim}, {b.C.dim(), m.dim}, [&](const Idx& i) {
    Tensor t = D(b.B, b.eta.apply(m.right_c(Tensor::basis({m.dim}, i)), 1), 1);  // m b1 b2
    t = m.action.apply(permute(t, {1, 0, 2}), 1);
    return b.alpha.apply(t, 0);
  });
}

Report check_sayd_lr(const SaydLR& m) {
  Report r;
  r.title = "left-right SAYD " + m.name;
  r.guard("structure", [&](Report& r) {
    const LeftBicoalgebroid& k = m.over.base;
    const Coalgebra& K = k.K;
    std::size_t d = m.dim, kd = K.dim();
    Realized mm = full_space({d});
    expect_ok(r, "M left C-comodule", check_left_comodule({d, k.C, m.left_c}));
    expect_ok(r, "M right K-comodule", check_right_comodule({d, K, m.coaction}));
    Op KR = coaction_right(k), KL = coaction_left(k);
    Realized dom = action_domain(m.over, d, m.left_c);
    Realized triple{{kd, kd, d}, iterated_cotensor({kd, kd, d}, {{KR, KL}, {KR, m.left_c}})};
    expect_identity(r, "action associative", triple, [&](const Tensor& x) { return m.action(k.mu.apply(x, 0)); },
                    [&](const Tensor& x) { return m.action(m.action.apply(x, 1)); });
    expect_identity(r, "action unital", mm, [&](const Tensor& x) { return m.action(k.eta.apply(m.left_c(x), 0)); },
                    [](const Tensor& x) { return x; });
    expect_identity(r, "action left C-colinear", dom, [&](const Tensor& x) { return m.left_c(m.action(x)); },
                    [&](const Tensor& x) { return m.action.apply(k.alpha.apply(D(K, x, 0), 0), 1); });
    Op canon = canonical_right_coaction(m);
    expect_identity(r, "(i) induced right C-coaction is the canonical one", mm,
                    [&](const Tensor& x) { return k.alpha.apply(m.coaction(x), 1); },
                    [&](const Tensor& x) { return canon(x); });
    Realized mk{{d, kd}, iterated_cotensor({d, kd}, {{canon, KL}})};
    expect_lands(r, "coaction lands in M box_C K", mm, mk, [&](const Tensor& x) { return m.coaction(x); });
    expect_identity(r, "(ii) anti Yetter-Drinfeld", dom, [&](const Tensor& x) { return m.coaction(m.action(x)); },
                    [&](const Tensor& x) {
                      Tensor t = D(K, m.coaction.apply(x, 1), 0);  // k1 k2 m0 m1
                      t = m.over.nu_inv.apply(permute(t, {3, 0, 2, 1}), 0);  // n- n+ m0 k2
                      t = m.action.apply(t, 1);                             // n- m' k2
                      return k.mu.apply(permute(t, {1, 2, 0}), 1);
                    });
    Realized km{{kd, d}, dom.space};
    expect_lands(r, "flipped coaction lands in K box_C M", mm, km,
                 [&](const Tensor& x) { return permute(m.coaction(x), {1, 0}); });
    expect_identity(r, "stability", mm, [&](const Tensor& x) { return m.action(permute(m.coaction(x), {1, 0})); },
                    [](const Tensor& x) { return x; });
  });
  return r;
}

Report check_sayd_rl(const SaydRL& m) {
  Report r;
  r.title = "right-left SAYD " + m.name;
  r.guard("structure", [&](Report& r) {
    const RightBicoalgebroid& b = m.over.base;
    const Coalgebra& B = b.B;
    std::size_t d = m.dim, bd = B.dim();
    Realized mm = full_space({d});
    expect_ok(r, "M right C-comodule", check_right_comodule({d, b.C, m.right_c}));
    expect_ok(r, "M left B-comodule", check_left_comodule({d, B, m.coaction}));
    Op BR = coaction_right(b), BL = coaction_left(b);
    Realized dom = action_domain(m.over, d, m.right_c);
    Realized triple{{d, bd, bd}, iterated_cotensor({d, bd, bd}, {{m.right_c, BL}, {BR, BL}})};
    expect_identity(r, "action associative", triple, [&](const Tensor& x) { return m.action(m.action.apply(x, 0)); },
                    [&](const Tensor& x) { return m.action(b.mu.apply(x, 1)); });
    expect_identity(r, "action unital", mm, [&](const Tensor& x) { return m.action(b.eta.apply(m.right_c(x), 1)); },
                    [](const Tensor& x) { return x; });
    expect_identity(r, "action right C-colinear", dom, [&](const Tensor& x) { return m.right_c(m.action(x)); },
                    [&](const Tensor& x) { return m.action.apply(b.alpha.apply(D(B, x, 1), 2), 0); });
    Op canon = canonical_left_coaction(m);
    expect_identity(r, "(i) induced left C-coaction is the canonical one", mm,
                    [&](const Tensor& x) { return b.alpha.apply(m.coaction(x), 0); },
                    [&](const Tensor& x) { return canon(x); });
    Realized bm{{bd, d}, iterated_cotensor({bd, d}, {{BR, canon}})};
    expect_lands(r, "coaction lands in B box_C M", mm, bm, [&](const Tensor& x) { return m.coaction(x); });
    expect_identity(r, "(ii) anti Yetter-Drinfeld", dom, [&](const Tensor& x) { return m.coaction(m.action(x)); },
                    [&](const Tensor& x) {
                      Tensor t = D(B, m.coaction.apply(x, 0), 2);                // m-1 m0 b1 b2
                      t = m.over.nu_inv.apply(permute(t, {3, 0, 1, 2}), 0);     // n- n+ m0 b1
                      t = b.mu.apply(permute(t, {1, 3, 2, 0}), 0);              // n+b1 m0 n-
                      return m.action.apply(t, 1);
                    });
    Realized mb{{d, bd}, dom.space};
    expect_lands(r, "flipped coaction lands in M box_C B", mm, mb,
                 [&](const Tensor& x) { return permute(m.coaction(x), {1, 0}); });
    expect_identity(r, "stability", mm, [&](const Tensor& x) { return m.action(permute(m.coaction(x), {1, 0})); },
                    [](const Tensor& x) { return x; });
  });
  return r;
}

InducedSayd induced_sayd_on_base(const LeftXHopf& kx, const Op& delta, const Op& sigma) {
  const LeftBicoalgebroid& k = kx.base;
  const Coalgebra& K = k.K;
  const Coalgebra& C = k.C;
  std::size_t cd = C.dim(), kd = K.dim();
  InducedSayd out;
  SaydLR& m = out.module;
  m.name = "C over " + k.name;
  m.over = kx;
  m.dim = cd;
  m.left_c = C.delta();
  // c -> alpha(delta(c)1) (x) delta(c)2
  m.coaction = Op::from_fn("rho", {cd}, {cd, kd}, [&](const Idx& i) {
    return k.alpha.apply(K.delta()(delta(Tensor::basis({cd}, i))), 0);
  });
  // k |> c = alpha(k1) eps(c) eps(sigma(k2))
  Op amb = Op::from_fn("action", {kd, cd}, {cd}, [&](const Idx& i) {
    Tensor t = D(K, Tensor::basis({kd}, {i[0]}), 0);
    t = E(C, sigma.apply(t, 1), 1);
    return k.alpha(t).scaled(C.epsilon(i[1]));
  });
  m.action = restricted(amb, action_domain(kx, cd, m.left_c).space);

  Report& r = out.conditions;
  r.title = "induced SAYD conditions";
  r.guard("conditions", [&](Report& r) {
    // pairs c (x) k with delta(c) (x) k in K box_{C_cop} K
    Subspace pre = equalizer(
        {cd, kd}, Subspace::full(cd * kd),
        [&](const Tensor& x) { return right_coaction_via(K, k.beta).apply(delta.apply(x, 0), 0); },
        [&](const Tensor& x) { return left_coaction_via(K, k.beta).apply(delta.apply(x, 0), 1); });
    Realized p{{cd, kd}, pre};
    auto eps_sigma = [&](const Tensor& t, std::size_t leg) { return E(C, sigma.apply(t, leg), leg); };
    expect_identity(r, "AYD condition on nu^-1(delta(c), k)", p,
                    [&](const Tensor& x) {
                      Tensor t = D(K, kx.nu_inv(delta.apply(x, 0)), 1);  // n- n+1 n+2
                      t = E(K, eps_sigma(t, 2), 0);
                      return k.alpha(t);
                    },
                    [&](const Tensor& x) {
                      Tensor t = D(K, E(C, x, 0), 0);  // k1 k2
                      t = eps_sigma(t, 1);
                      return k.alpha(delta(k.alpha(t)));
                    });
    Realized cc = full_space({cd});
    expect_identity(r, "alpha(eta(c)2) eps(sigma(eta(c)1)) = alpha(delta(c))", cc,
                    [&](const Tensor& x) { return k.alpha(eps_sigma(K.delta()(k.eta(x)), 0)); },
                    [&](const Tensor& x) { return k.alpha(delta(x)); });
    expect_identity(r, "stability alpha(delta(c)1) eps(sigma(delta(c)2)) = c", cc,
                    [&](const Tensor& x) { return k.alpha(eps_sigma(K.delta()(delta(x)), 1)); },
                    [](const Tensor& x) { return x; });
  });
  return out;
}

// ---------------------------------------------------------------------------

Op base_left_coaction(const ComoduleCoalgebra& t) {
  return chain("rho_L", t.coaction, t.over.base.alpha, 0);
}

Op base_right_coaction(const ComoduleCoalgebra& t) {
  const LeftBicoalgebroid& k = t.over.base;
  std::size_t d = t.T.dim();
  return Op::from_fn("rho_R", {d}, {d, k.C.dim()}, [&](const Idx& i) {
    return permute(k.beta.apply(t.coaction(Tensor::basis({d}, i)), 0), {1, 0});
  });
}

Report check_comodule_coalgebra(const ComoduleCoalgebra& t) {
  Report r;
  r.title = "left comodule coalgebra " + t.name;
  r.guard("structure", [&](Report& r) {
    const LeftBicoalgebroid& k = t.over.base;
    const Coalgebra& T = t.T;
    const Op& rho = t.coaction;
    Realized tt = full_space({T.dim()});
    expect_ok(r, "T coalgebra", check_coalgebra(T));
    expect_ok(r, "T left K-comodule", check_left_comodule({T.dim(), k.K, rho}));
    expect_identity(r, "(1) counit K-colinear", tt, [&](const Tensor& x) { return E(T, rho(x), 1); },
                    [&](const Tensor& x) { return k.eta(k.alpha(E(T, rho(x), 1))); });
    expect_identity(r, "(2) comultiplication K-colinear", tt, [&](const Tensor& x) { return D(T, rho(x), 1); },
                    [&](const Tensor& x) {
                      Tensor u = rho.apply(rho.apply(T.delta()(x), 0), 2);  // k t1 k' t2
                      return k.mu.apply_ext(permute(u, {0, 2, 1, 3}), 0);
                    });
    expect_identity(r, "(3) comultiplication C-cobalanced", tt,
                    [&](const Tensor& x) { return k.beta.apply(rho.apply(T.delta()(x), 0), 0); },
                    [&](const Tensor& x) {
                      return permute(k.alpha.apply(rho.apply(T.delta()(x), 1), 1), {1, 0, 2});
                    });
  });
  return r;
}

Realized ring_product_space(const CRing& a) {
  return {{a.dim, a.dim}, iterated_cotensor({a.dim, a.dim}, {{a.right_c, a.left_c}})};
}

Report check_cring(const CRing& a) {
  Report r;
  r.title = "C-ring " + a.name;
  r.guard("structure", [&](Report& r) {
    std::size_t d = a.dim;
    expect_ok(r, "C-bicomodule", check_bicomodule({{d, a.C, a.left_c}, {d, a.C, a.right_c}}));
    Realized aa = full_space({d}), cc = full_space({a.C.dim()}), pa = ring_product_space(a);
    Realized triple{{d, d, d}, iterated_cotensor({d, d, d}, {{a.right_c, a.left_c}, {a.right_c, a.left_c}})};
    expect_identity(r, "associative", triple, [&](const Tensor& x) { return a.m(a.m.apply(x, 0)); },
                    [&](const Tensor& x) { return a.m(a.m.apply(x, 1)); });
    expect_identity(r, "unital on the right", aa, [&](const Tensor& x) { return a.m(a.unit.apply(a.right_c(x), 1)); },
                    [](const Tensor& x) { return x; });
    expect_identity(r, "unital on the left", aa, [&](const Tensor& x) { return a.m(a.unit.apply(a.left_c(x), 0)); },
                    [](const Tensor& x) { return x; });
    expect_identity(r, "m left C-colinear", pa, [&](const Tensor& x) { return a.left_c(a.m(x)); },
                    [&](const Tensor& x) { return a.m.apply(a.left_c.apply(x, 0), 1); });
    expect_identity(r, "m right C-colinear", pa, [&](const Tensor& x) { return a.right_c(a.m(x)); },
                    [&](const Tensor& x) { return a.m.apply(a.right_c.apply(x, 1), 0); });
    expect_identity(r, "unit left C-colinear", cc, [&](const Tensor& x) { return a.left_c(a.unit(x)); },
                    [&](const Tensor& x) { return a.unit.apply(a.C.delta()(x), 1); });
    expect_identity(r, "unit right C-colinear", cc, [&](const Tensor& x) { return a.right_c(a.unit(x)); },
                    [&](const Tensor& x) { return a.unit.apply(a.C.delta()(x), 0); });
  });
  return r;
}

Report check_comodule_ring(const ComoduleRing& a) {
  Report r = check_cring(a.ring);
  r.title = "comodule ring " + a.ring.name;
  r.guard("comodule", [&](Report& r) {
    const RightBicoalgebroid& b = a.over.base;
    const CRing& A = a.ring;
    expect_ok(r, "right B-comodule", check_right_comodule({A.dim, b.B, a.coaction}));
    expect_identity(r, "(mc1) unit", full_space({b.C.dim()}), [&](const Tensor& x) { return a.coaction(A.unit(x)); },
                    [&](const Tensor& x) { return A.unit.apply(b.alpha.apply(b.B.delta()(b.eta(x)), 0), 0); });
    expect_identity(r, "(mc2) multiplication", ring_product_space(A),
                    [&](const Tensor& x) { return a.coaction(A.m(x)); },
                    [&](const Tensor& x) {
                      Tensor u = a.coaction.apply(a.coaction.apply(x, 0), 2);  // a1 b1 a2 b2
                      u = A.m.apply_ext(permute(u, {0, 2, 1, 3}), 0);
                      return b.mu.apply_ext(u, 1);
                    });
  });
  return r;
}

ComoduleRing self_comodule_ring(const RightXHopf& b) {
  const RightBicoalgebroid& B = b.base;
  CRing ring{B.name, B.C, B.B.dim(), coaction_left(B), coaction_right(B), B.mu, B.eta};
  return {ring, b, B.B.delta()};
}

Report check_module_coalgebra(const ModuleCoalgebra& t) {
  Report r;
  r.title = "module coalgebra " + t.name;
  r.guard("structure", [&](Report& r) {
    const RightBicoalgebroid& b = t.over.base;
    const Coalgebra& T = t.T;
    std::size_t d = T.dim(), bd = b.B.dim();
    Realized tt = full_space({d});
    expect_ok(r, "T coalgebra", check_coalgebra(T));
    expect_ok(r, "C-bicomodule", check_bicomodule({{d, b.C, t.left_c}, {d, b.C, t.right_c}}));
    Realized dom = action_domain(t.over, d, t.right_c);
    Realized triple{{d, bd, bd},
                    iterated_cotensor({d, bd, bd}, {{t.right_c, coaction_left(b)}, {coaction_right(b), coaction_left(b)}})};
    expect_identity(r, "action associative", triple, [&](const Tensor& x) { return t.action(t.action.apply(x, 0)); },
                    [&](const Tensor& x) { return t.action(b.mu.apply(x, 1)); });
    expect_identity(r, "action unital", tt, [&](const Tensor& x) { return t.action(b.eta.apply(t.right_c(x), 1)); },
                    [](const Tensor& x) { return x; });
    expect_identity(r, "i comultiplication C-cobalanced", tt,
                    [&](const Tensor& x) { return t.right_c.apply(T.delta()(x), 0); },
                    [&](const Tensor& x) { return t.left_c.apply(T.delta()(x), 1); });
    expect_identity(r, "ii eps(t <| b) = eps(t) eps(b)", dom, [&](const Tensor& x) { return T.eps()(t.action(x)); },
                    [&](const Tensor& x) { return E(b.B, E(T, x, 0), 0); });
    expect_identity(r, "iii Delta(t <| b) = t1 <| b1 (x) t2 <| b2", dom,
                    [&](const Tensor& x) { return T.delta()(t.action(x)); },
                    [&](const Tensor& x) {
                      Tensor u = permute(D(b.B, D(T, x, 0), 2), {0, 2, 1, 3});
                      return t.action.apply_ext(t.action.apply_ext(u, 0), 1);
                    });
  });
  return r;
}

ModuleCoalgebra self_module_coalgebra(const RightXHopf& b) {
  const RightBicoalgebroid& B = b.base;
  return {B.name, b, B.B, coaction_left(B), coaction_right(B), B.mu};
}

}  // namespace hocx
