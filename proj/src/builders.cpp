#include "hocx/builders.hpp"

#include <numeric>

namespace hocx {

namespace {

// Apply a right coaction X -> X (x) B to legs [first, first + count) and
// multiply the B parts in order: (.., x0', .., x(k-1)', b0 b1 .. b(k-1), ..).
Tensor right_diag(const Tensor& x, std::size_t first, std::size_t count, const Op& rho, const Op& mu) {
  Tensor t = x;
  for (std::size_t i = 0; i < count; ++i) t = rho.apply(t, first + 2 * i);
  std::vector<std::size_t> perm(first);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = 0; i < count; ++i) perm.push_back(first + 2 * i);
  for (std::size_t i = 0; i < count; ++i) perm.push_back(first + 2 * i + 1);
  for (std::size_t i = first + 2 * count; i < t.legs(); ++i) perm.push_back(i);
  t = permute(t, perm);
  for (std::size_t i = 1; i < count; ++i) t = mu.apply_ext(t, first + count);
  return t;
}

// Left coaction X -> K (x) X on legs [first, first + count), product first:
// (.., k0 k1 .. k(k-1), x0', .., x(k-1)', ..).
Tensor left_diag(const Tensor& x, std::size_t first, std::size_t count, const Op& rho, const Op& mu) {
  Tensor t = x;
  for (std::size_t i = 0; i < count; ++i) t = rho.apply(t, first + 2 * i);
  std::vector<std::size_t> perm(first);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = 0; i < count; ++i) perm.push_back(first + 2 * i);
  for (std::size_t i = 0; i < count; ++i) perm.push_back(first + 2 * i + 1);
  for (std::size_t i = first + 2 * count; i < t.legs(); ++i) perm.push_back(i);
  t = permute(t, perm);
  for (std::size_t i = 1; i < count; ++i) t = mu.apply_ext(t, first);
  return t;
}

Subspace chain_space(std::size_t d, std::size_t count, const Op& right, const Op& left) {
  if (count == 1) return Subspace::full(d);
  return iterated_cotensor(repeat(d, count), std::vector<Junction>(count - 1, Junction{right, left}));
}

CocyclicObject checked(CocyclicObject x, const std::string& what) {
  Report r = verify_cocyclic(x);
  if (!r.ok()) throw IdentityFailure(what + " does not verify:\n" + r.str());
  return x;
}

CyclicObject checked(CyclicObject x, const std::string& what) {
  Report r = verify_cyclic(x);
  if (!r.ok()) throw IdentityFailure(what + " does not verify:\n" + r.str());
  return x;
}

Op unit_element(const HopfAlgebra& h) { return element("1", {h.dim()}, h.unit); }

}  // namespace

// ---------------------------------------------------------------------------
// comodule coalgebras over a left x-Hopf coalgebra

std::vector<Realized> comodule_coalgebra_spaces(const ComoduleCoalgebra& t, const SaydLR& m, std::size_t top) {
  const LeftBicoalgebroid& k = t.over.base;
  std::size_t td = t.T.dim();
  Op rs = base_right_coaction(t), ls = base_left_coaction(t);
  std::vector<Realized> out;
  for (std::size_t n = 0; n <= top; ++n) {
    Dims legs = concat({m.dim}, repeat(td, n + 1));
    Subspace dom = tensor_subspace(Subspace::full(m.dim), chain_space(td, n + 1, rs, ls));
    Subspace s = equalizer(legs, dom, [&](const Tensor& x) { return m.coaction.apply(x, 0); },
                           [&](const Tensor& x) { return left_diag(x, 1, n + 1, t.coaction, k.mu); });
    out.push_back({legs, s});
  }
  return out;
}

CocyclicObject build_comodule_coalgebra_cocyclic(const ComoduleCoalgebra& t, const SaydLR& m, std::size_t top) {
  const LeftBicoalgebroid& k = t.over.base;
  const Coalgebra& T = t.T;
  AmbientCocyclic a;
  a.spaces = comodule_coalgebra_spaces(t, m, top);
  a.tau = [&](std::size_t n, const Tensor& x) {
    if (n == 0) return x;
    Tensor y = move_leg(x, 1, n + 1);  // m t1 .. tn t0
    y = left_diag(y, 1, n, t.coaction, k.mu);
    return m.action.apply_ext(move_leg(y, 1, 0), 0);
  };
  a.coface = [&](std::size_t n, std::size_t i, const Tensor& x) {
    if (i <= n) return T.delta().apply(x, 1 + i);
    return a.tau(n + 1, T.delta().apply(x, 1));
  };
  a.codegen = [&](std::size_t, std::size_t j, const Tensor& x) { return T.eps().apply(x, j + 2); };
  return checked(realize_cocyclic(a), "comodule coalgebra cocyclic module");
}

Report check_hopf_comodule_coalgebra(const HopfComoduleCoalgebra& c) {
  Report r;
  r.title = "right comodule coalgebra " + c.name;
  r.guard("structure", [&](Report& r) {
    const HopfAlgebra& h = c.h;
    const Coalgebra& C = c.c;
    const Op& rho = c.coaction;
    Realized cc = full_space({C.dim()});
    Report co = check_right_comodule({C.dim(), h.coalg, rho});
    r.add("right H-comodule", co.ok(), co.str());
    expect_identity(r, "comultiplication colinear", cc, [&](const Tensor& x) { return C.delta().apply(rho(x), 0); },
                    [&](const Tensor& x) { return right_diag(C.delta()(x), 0, 2, rho, h.mul); });
    expect_identity(r, "counit colinear", cc, [&](const Tensor& x) { return C.eps().apply(rho(x), 0); },
                    [&](const Tensor& x) { return tensor_product(C.eps()(x), h.unit); });
  });
  return r;
}

HopfComoduleCoalgebra coadjoint_comodule_coalgebra(const HopfAlgebra& h) {
  if (!h.antipode) throw NotXHopf(h.name + ": no antipode");
  std::size_t d = h.dim();
  const Coalgebra& H = h.coalg;
  Op rho = Op::from_fn("coad", {d}, {d, d}, [&](const Idx& i) {
    Tensor t = H.delta().apply(H.delta()(Tensor::basis({d}, i)), 1);  // h1 h2 h3
    t = h.antipode->apply(t, 0);
    t = h.mul.apply(move_leg(t, 1, 0), 1);  // h2 S(h1) h3
    return t;
  });
  return {"coadjoint " + h.name, h, H, rho};
}

ComoduleCoalgebra adjoint_comodule_coalgebra(const HopfAlgebra& h) {
  if (!h.antipode) throw NotXHopf(h.name + ": no antipode");
  std::size_t d = h.dim();
  const Coalgebra& H = h.coalg;
  Op rho = Op::from_fn("ad", {d}, {d, d}, [&](const Idx& i) {
    Tensor t = H.delta().apply(H.delta()(Tensor::basis({d}, i)), 1);  // h1 h2 h3
    t = h.antipode->apply(t, 2);
    t = h.mul.apply(move_leg(t, 2, 1), 0);  // h1 S(h3) h2
    return t;
  });
  return {"adjoint " + h.name, hopf_to_left_xhopf(h), H, rho};
}

ComoduleCoalgebra base_comodule_coalgebra(const Coalgebra& c) {
  std::size_t n = c.dim();
  Op rho = Op::from_fn("rho", {n}, {n * n, n}, [&](const Idx& i) {
    Tensor t = c.delta().apply(c.delta()(Tensor::basis({n}, i)), 1);  // c1 c2 c3
    Tensor out({n * n, n});
    for (const auto& [idx, x] : t.terms()) out.add({uint32_t(idx[0] * n + idx[2]), idx[1]}, x);
    return out;
  });
  return {"C over C^e", coenveloping_left(c), c, rho};
}

// ---------------------------------------------------------------------------
// Hopf specialization: right comodule coalgebra

CocyclicObject build_hopf_comodule_coalgebra(const HopfComoduleCoalgebra& c, const SaydRL& m, std::size_t top) {
  const HopfAlgebra& h = c.h;
  const Coalgebra& C = c.c;
  std::size_t cd = C.dim();
  AmbientCocyclic a;
  for (std::size_t n = 0; n <= top; ++n) {
    Dims legs = concat(repeat(cd, n + 1), {m.dim});
    Subspace s = equalizer(legs, Subspace::full(flat_size(legs)),
                           [&](const Tensor& x) { return right_diag(x, 0, n + 1, c.coaction, h.mul); },
                           [&](const Tensor& x) { return m.coaction.apply(x, n + 1); });
    a.spaces.push_back({legs, s});
  }
  // c1 .. cn c0<0> m <| c0<1>
  a.tau = [&](std::size_t n, const Tensor& x) {
    Tensor y = c.coaction.apply(move_leg(x, 0, n), n);  // c1..cn c0' h m
    return m.action.apply_ext(move_leg(y, n + 1, n + 2), n + 1);
  };
  a.coface = [&](std::size_t n, std::size_t i, const Tensor& x) {
    if (i <= n) return C.delta().apply(x, i);
    return a.tau(n + 1, C.delta().apply(x, 0));
  };
  a.codegen = [&](std::size_t, std::size_t j, const Tensor& x) { return C.eps().apply(x, j + 1); };
  return checked(realize_cocyclic(a), "Hopf comodule coalgebra cocyclic module");
}

// ---------------------------------------------------------------------------
// comodule rings

CocyclicObject build_comodule_ring_cocyclic(const ComoduleRing& ar, const SaydRL& m, std::size_t top) {
  const CRing& A = ar.ring;
  const RightBicoalgebroid& b = ar.over.base;
  std::size_t ad = A.dim;
  AmbientCocyclic a;
  for (std::size_t n = 0; n <= top; ++n) {
    Dims legs = concat(repeat(ad, n + 1), {m.dim});
    Subspace dom = tensor_subspace(chain_space(ad, n + 1, A.right_c, A.left_c), Subspace::full(m.dim));
    Subspace s = equalizer(legs, dom, [&](const Tensor& x) { return right_diag(x, 0, n + 1, ar.coaction, b.mu); },
                           [&](const Tensor& x) { return m.coaction.apply(x, n + 1); });
    a.spaces.push_back({legs, s});
  }
  a.tau = [&](std::size_t n, const Tensor& x) {
    Tensor y = ar.coaction.apply(move_leg(x, 0, n), n);  // a1..an a0' b m
    return m.action.apply_ext(move_leg(y, n + 1, n + 2), n + 1);
  };
  // a0 .. eta(ai<-1>) ai<0> .. an m
  a.coface = [&](std::size_t n, std::size_t i, const Tensor& x) {
    if (i <= n) return A.unit.apply(A.left_c.apply(x, i), i);
    return a.tau(n + 1, A.unit.apply(A.left_c.apply(x, 0), 0));
  };
  a.codegen = [&](std::size_t, std::size_t j, const Tensor& x) { return A.m.apply_ext(x, j); };
  return checked(realize_cocyclic(a), "comodule ring cocyclic module");
}

// ---------------------------------------------------------------------------
// transfer through phi

Realized transfer_target(const RightXHopf& bx, const SaydRL& m, std::size_t n) {
  const RightBicoalgebroid& b = bx.base;
  const Coalgebra& B = b.B;
  std::size_t bd = B.dim();
  if (n == 0) return full_space({m.dim});
  Dims legs = concat(repeat(bd, n), {m.dim});
  Subspace dom = tensor_subspace(chain_space(bd, n, coaction_right(b), coaction_left(b)), Subspace::full(m.dim));
  Subspace s = equalizer(
      legs, dom,
      [&](const Tensor& x) { return move_leg(b.beta.apply(B.delta().apply(x, 0), 1), 1, n); },
      [&](const Tensor& x) { return b.beta.apply(m.coaction.apply(x, n), n); });
  return {legs, s};
}

namespace {

// eps[nu^-(P, m<-1>)] nu^+(P, m<-1>) m<0> with P = b0(2) .. b(k-1)(2): legs
// (b0(1), .., b(k-1)(1), nu^+, m<0>).
Tensor nu_tail(const RightXHopf& bx, const SaydRL& m, const Tensor& x, std::size_t k) {
  const RightBicoalgebroid& b = bx.base;
  if (k == 0) return m.coaction(x);
  Tensor y = right_diag(x, 0, k, b.B.delta(), b.mu);
  y = m.coaction.apply(y, k + 1);
  y = bx.nu_inv.apply_ext(y, k);
  return b.B.eps().apply(y, k);
}

}  // namespace

TransferPhi transfer_phi(const RightXHopf& bx, const SaydRL& m, std::size_t top) {
  const RightBicoalgebroid& b = bx.base;
  const Coalgebra& B = b.B;
  TransferPhi out;
  Report& r = out.report;
  r.title = "transfer of the cocyclic structure along phi";
  ComoduleRing self = self_comodule_ring(bx);
  out.source = build_comodule_ring_cocyclic(self, m, top + 1);

  std::vector<Realized> src;
  for (std::size_t n = 0; n <= top + 1; ++n) {
    // same realization as the builder
    Dims legs = concat(repeat(B.dim(), n + 1), {m.dim});
    Subspace dom =
        tensor_subspace(chain_space(B.dim(), n + 1, coaction_right(b), coaction_left(b)), Subspace::full(m.dim));
    src.push_back({legs, equalizer(legs, dom, [&](const Tensor& x) { return right_diag(x, 0, n + 1, B.delta(), b.mu); },
                                   [&](const Tensor& x) { return m.coaction.apply(x, n + 1); })});
    out.targets.push_back(transfer_target(bx, m, n));
  }
  for (std::size_t n = 0; n <= top + 1; ++n) {
    const Realized &s = src[n], &t = out.targets[n];
    out.phi.push_back(realize(s, t, [&](const Tensor& x) { return B.eps().apply(x, n); }, "phi"));
    out.phi_inv.push_back(realize(t, s, [&](const Tensor& x) { return nu_tail(bx, m, x, n); }, "phi^-1"));
    std::string d = " in degree " + std::to_string(n);
    r.add("phi^-1 phi = id" + d, out.phi_inv[n] * out.phi[n] == Matrix::identity(s.space.dim()));
    r.add("phi phi^-1 = id" + d, out.phi[n] * out.phi_inv[n] == Matrix::identity(t.space.dim()));
  }
  if (!r.ok()) return out;

  const CocyclicObject& x = out.source;
  CocyclicObject& y = out.transported;
  y.top = top;
  y.cofaces.resize(top + 1);
  y.codegens.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    y.dims.push_back(out.targets[n].space.dim());
    y.t.push_back(out.phi[n] * x.t[n] * out.phi_inv[n]);
    if (n < top)
      for (const Matrix& f : x.cofaces[n]) y.cofaces[n].push_back(out.phi[n + 1] * f * out.phi_inv[n]);
    if (n >= 1)
      for (const Matrix& s : x.codegens[n]) y.codegens[n].push_back(out.phi[n - 1] * s * out.phi_inv[n]);
  }

  AmbientCocyclic a;
  for (std::size_t n = 0; n <= top; ++n) a.spaces.push_back(out.targets[n]);
  a.tau = [&](std::size_t n, const Tensor& x) {
    if (n == 0) return x;
    Tensor z = nu_tail(bx, m, x, n);  // b0(1) .. b(n-1)(1) nu+ m<0>
    return m.action.apply_ext(move_leg(z, 0, n + 1), n);
  };
  a.coface = [&](std::size_t n, std::size_t i, const Tensor& x) {
    if (i < n) return b.eta.apply(coaction_left(b).apply(x, i), i);
    if (i == n && n == 0) return b.eta.apply(move_leg(m.right_c(x), 1, 0), 0);
    if (i == n) return b.eta.apply(coaction_right(b).apply(x, n - 1), n);
    return nu_tail(bx, m, x, n);
  };
  a.codegen = [&](std::size_t n, std::size_t j, const Tensor& x) {
    if (j + 1 < n) return b.mu.apply_ext(x, j);
    return B.eps().apply(x, j);
  };
  out.closed_form = realize_cocyclic(a);

  const CocyclicObject& z = out.closed_form;
  for (std::size_t n = 0; n <= top; ++n) {
    std::string d = " in degree " + std::to_string(n);
    r.add("tau matches closed form" + d, y.t[n] == z.t[n]);
    for (std::size_t i = 0; n < top && i < z.cofaces[n].size(); ++i)
      r.add("delta" + std::to_string(i) + " matches closed form" + d, y.cofaces[n][i] == z.cofaces[n][i]);
    for (std::size_t j = 0; n >= 1 && j < z.codegens[n].size(); ++j)
      r.add("sigma" + std::to_string(j) + " matches closed form" + d, y.codegens[n][j] == z.codegens[n][j]);
  }
  r.merge(verify_cocyclic(z), "closed form: ");
  return out;
}

// ---------------------------------------------------------------------------
// Hopf specializations

CocyclicObject build_hopf_dual_cocyclic(const HopfAlgebra& h, const SaydRL& m, std::size_t top) {
  if (!h.antipode) throw NotXHopf(h.name + ": no antipode");
  const Coalgebra& H = h.coalg;
  const Op& S = *h.antipode;
  Op one = unit_element(h);
  // h0(1) .. h(k-1)(1) S(h0(2) .. h(k-1)(2)) m<-1> m<0>
  auto tail = [&](const Tensor& x, std::size_t k) {
    if (k == 0) return m.coaction(x);
    Tensor y = right_diag(x, 0, k, H.delta(), h.mul);
    y = m.coaction.apply(S.apply(y, k), k + 1);
    return h.mul.apply(y, k);
  };
  AmbientCocyclic a;
  for (std::size_t n = 0; n <= top; ++n) a.spaces.push_back(full_space(concat(repeat(h.dim(), n), {m.dim})));
  a.tau = [&](std::size_t n, const Tensor& x) {
    if (n == 0) return x;
    return m.action.apply(move_leg(tail(x, n), 0, n + 1), n);
  };
  a.coface = [&](std::size_t n, std::size_t i, const Tensor& x) {
    if (i <= n) return one.apply(x, i);
    return tail(x, n);
  };
  a.codegen = [&](std::size_t n, std::size_t j, const Tensor& x) {
    if (j + 1 < n) return h.mul.apply(x, j);
    return H.eps().apply(x, j);
  };
  return checked(realize_cocyclic(a), "Hopf dual cocyclic module");
}

CyclicObject build_hopf_cyclic_module(const HopfAlgebra& h, const SaydLR& m, std::size_t top) {
  if (!h.antipode) throw NotXHopf(h.name + ": no antipode");
  const Coalgebra& H = h.coalg;
  const Op& S = *h.antipode;
  Op one = unit_element(h);
  AmbientCyclic a;
  for (std::size_t n = 0; n <= top; ++n) a.spaces.push_back(full_space(concat({m.dim}, repeat(h.dim(), n))));
  a.face = [&](std::size_t n, std::size_t i, const Tensor& x) {
    if (i == 0) return H.eps().apply(x, 1);
    if (i < n) return h.mul.apply(x, i);
    return m.action.apply(move_leg(x, n, 0), 0);
  };
  a.degen = [&](std::size_t, std::size_t j, const Tensor& x) { return one.apply(x, j + 1); };
  // hn(2) |> m<0> (x) m<1> S(h1(1) .. hn(1)) (x) h1(2) .. h(n-1)(2)
  a.tau = [&](std::size_t n, const Tensor& x) {
    if (n == 0) return x;
    Tensor z = left_diag(m.coaction.apply(x, 0), 2, n, H.delta(), h.mul);
    z = h.mul.apply(S.apply(z, 2), 1);  // m0 X h1(2) .. hn(2)
    return m.action.apply(move_leg(z, n + 1, 0), 0);
  };
  return checked(realize_cyclic(a), "Hopf cyclic module");
}

SaydRL hopf_trivial_sayd_rl(const RightXHopf& hx) {
  const Coalgebra& H = hx.base.B;
  std::size_t d = H.dim();
  SaydRL m;
  m.name = "trivial";
  m.over = hx;
  m.dim = 1;
  m.right_c = Op("rho_C", {1}, {1, 1}, Matrix::identity(1));
  Op amb = Op::from_fn("eps", {1, d}, {1}, [&](const Idx& i) { return basis_vec(1, 0).scaled(H.epsilon(i[1])); });
  m.action = restricted(amb, action_domain(hx, 1, m.right_c).space);
  m.coaction = Op::from_fn("1", {1}, {d, 1},
                           [&](const Idx&) { return tensor_product(hx.base.eta(basis_vec(1, 0)), basis_vec(1, 0)); });
  return m;
}

SaydLR hopf_trivial_sayd_lr(const LeftXHopf& hx) {
  const Coalgebra& H = hx.base.K;
  std::size_t d = H.dim();
  SaydLR m;
  m.name = "trivial";
  m.over = hx;
  m.dim = 1;
  m.left_c = Op("rho_C", {1}, {1, 1}, Matrix::identity(1));
  Op amb = Op::from_fn("eps", {d, 1}, {1}, [&](const Idx& i) { return basis_vec(1, 0).scaled(H.epsilon(i[0])); });
  m.action = restricted(amb, action_domain(hx, 1, m.left_c).space);
  m.coaction = Op::from_fn("1", {1}, {1, d},
                           [&](const Idx&) { return tensor_product(basis_vec(1, 0), hx.base.eta(basis_vec(1, 0))); });
  return m;
}

SaydLR hopf_adjoint_sayd(const HopfAlgebra& h, const LeftXHopf& k) {
  if (!h.antipode) throw NotXHopf(h.name + ": no antipode");
  std::size_t d = h.dim();
  const Coalgebra& H = h.coalg;
  SaydLR m;
  m.name = "adjoint " + h.name;
  m.over = k;
  m.dim = d;
  m.left_c = Op::from_fn("rho_C", {d}, {1, d}, [&](const Idx& i) { return Tensor::basis({1, d}, {0, i[0]}); });
  Op amb = Op::from_fn("ad", {d, d}, {d}, [&](const Idx& i) {
    Tensor t = H.delta().apply(Tensor::basis({d, d}, i), 0);  // h1 h2 m
    t = h.antipode->apply(t, 1);
    t = h.mul.apply(move_leg(t, 1, 2), 1);  // h1 m S(h2)
    return h.mul.apply(t, 0);
  });
  m.action = restricted(amb, action_domain(k, d, m.left_c).space);
  m.coaction = H.delta();
  return m;
}

}  // namespace hocx
