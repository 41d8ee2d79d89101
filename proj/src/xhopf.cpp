#include "hocx/xhopf.hpp"

namespace hocx {

namespace {

Tensor D(const Coalgebra& c, const Tensor& t, std::size_t leg) { return c.delta().apply(t, leg); }
Tensor E(const Coalgebra& c, const Tensor& t, std::size_t leg) { return c.eps().apply(t, leg); }

void expect_coalgebra_map(Report& r, const std::string& name, const Coalgebra& src, const Coalgebra& tgt,
                          const Op& f) {
  Report sub = check_coalgebra_map({src, tgt, f});
  if (sub.ok()) {
    r.pass(name);
    return;
  }
  for (const auto& it : sub.items)
    if (!it.pass) {
      r.fail(name, it.name + ": " + it.witness);
      return;
    }
}

Realized realized(Dims legs, Subspace s) { return {std::move(legs), std::move(s)}; }

// Op on a subspace whose matrix columns are the ambient images of a matrix
// given on another subspace basis.
Op op_from_basis_matrix(std::string name, const Realized& dom, const Realized& cod, const Matrix& m) {
  std::vector<SparseVec> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = cod.space.combine(m.col(j));
  return Op(std::move(name), dom.legs, cod.legs, dom.space,
            Matrix::from_columns(flat_size(cod.legs), std::move(cols)));
}

}  // namespace

Op coaction_left(const LeftBicoalgebroid& k) { return left_coaction_via(k.K, k.alpha); }
Op coaction_right(const LeftBicoalgebroid& k) { return right_coaction_via_cop(k.K, k.beta); }
Op coaction_left(const RightBicoalgebroid& b) { return left_coaction_via_cop(b.B, b.beta); }
Op coaction_right(const RightBicoalgebroid& b) { return right_coaction_via(b.B, b.alpha); }

Realized product_space(const LeftBicoalgebroid& k) {
  std::size_t d = k.K.dim();
  return realized({d, d}, iterated_cotensor({d, d}, {{coaction_right(k), coaction_left(k)}}));
}

Realized product_space(const RightBicoalgebroid& b) {
  std::size_t d = b.B.dim();
  return realized({d, d}, iterated_cotensor({d, d}, {{coaction_right(b), coaction_left(b)}}));
}

namespace {

Realized beta_cotensor(const Coalgebra& k, const Op& beta) {
  std::size_t d = k.dim();
  return realized({d, d}, iterated_cotensor({d, d}, {{right_coaction_via(k, beta), left_coaction_via(k, beta)}}));
}

}  // namespace

Realized galois_codomain(const LeftBicoalgebroid& k) { return beta_cotensor(k.K, k.beta); }
Realized galois_codomain(const RightBicoalgebroid& b) { return beta_cotensor(b.B, b.beta); }

Report check_left_bicoalgebroid(const LeftBicoalgebroid& k) {
  Report r;
  r.title = "left bicoalgebroid " + k.name;
  const Coalgebra& K = k.K;
  const Coalgebra& C = k.C;
  Realized kk = full_space({K.dim()}), cc = full_space({C.dim()});
  r.guard("structure", [&](Report& r) {
    expect_coalgebra_map(r, "alpha coalgebra map", K, C, k.alpha);
    expect_coalgebra_map(r, "beta coalgebra map to C_cop", K, co_opposite(C), k.beta);
    expect_identity(r, "images cocommute", kk,
                    [&](const Tensor& h) { return k.beta.apply(k.alpha.apply(D(K, h, 0), 0), 1); },
                    [&](const Tensor& h) { return permute(k.alpha.apply(k.beta.apply(D(K, h, 0), 0), 1), {1, 0}); });
    Op L = coaction_left(k), R = coaction_right(k);
    Realized pk = product_space(k);
    expect_identity(r, "mu left C-colinear", pk, [&](const Tensor& x) { return L(k.mu(x)); },
                    [&](const Tensor& x) { return k.mu.apply(L.apply(x, 0), 1); });
    expect_identity(r, "mu right C-colinear", pk, [&](const Tensor& x) { return R(k.mu(x)); },
                    [&](const Tensor& x) { return k.mu.apply(R.apply(x, 1), 0); });
    expect_identity(r, "eta left C-colinear", cc, [&](const Tensor& c) { return L(k.eta(c)); },
                    [&](const Tensor& c) { return k.eta.apply(D(C, c, 0), 1); });
    expect_identity(r, "eta right C-colinear", cc, [&](const Tensor& c) { return R(k.eta(c)); },
                    [&](const Tensor& c) { return k.eta.apply(D(C, c, 0), 0); });
    expect_identity(r, "(i) Takeuchi compatibility", pk,
                    [&](const Tensor& x) { return k.alpha.apply(k.mu.apply(D(K, x, 1), 0), 1); },
                    [&](const Tensor& x) { return k.beta.apply(k.mu.apply(move_leg(D(K, x, 0), 1, 2), 0), 1); });
    expect_identity(r, "(ii) Delta mu", pk, [&](const Tensor& x) { return K.delta()(k.mu(x)); },
                    [&](const Tensor& x) {
                      Tensor t = permute(D(K, D(K, x, 0), 2), {0, 2, 1, 3});
                      return k.mu.apply_ext(k.mu.apply_ext(t, 0), 1);
                    });
    expect_identity(r, "(iii) eps mu", pk, [&](const Tensor& x) { return K.eps()(k.mu(x)); },
                    [&](const Tensor& x) { return E(K, E(K, x, 0), 0); });
    expect_identity(r, "(iv) unit on the left", kk, [&](const Tensor& h) { return k.mu(k.eta.apply(L(h), 0)); },
                    [&](const Tensor& h) { return h; });
    expect_identity(r, "(iv) unit on the right", kk, [&](const Tensor& h) { return k.mu(k.eta.apply(R(h), 1)); },
                    [&](const Tensor& h) { return h; });
    expect_identity(r, "(v) Delta eta through alpha", cc, [&](const Tensor& c) { return K.delta()(k.eta(c)); },
                    [&](const Tensor& c) { return k.eta.apply(k.alpha.apply(K.delta()(k.eta(c)), 1), 1); });
    expect_identity(r, "(v) Delta eta through beta", cc, [&](const Tensor& c) { return K.delta()(k.eta(c)); },
                    [&](const Tensor& c) { return k.eta.apply(k.beta.apply(K.delta()(k.eta(c)), 1), 1); });
    expect_identity(r, "(vi) eps eta", cc, [&](const Tensor& c) { return K.eps()(k.eta(c)); },
                    [&](const Tensor& c) { return C.eps()(c); });
  });
  return r;
}

Report check_right_bicoalgebroid(const RightBicoalgebroid& b) {
  Report r;
  r.title = "right bicoalgebroid " + b.name;
  const Coalgebra& B = b.B;
  const Coalgebra& C = b.C;
  Realized bb = full_space({B.dim()}), cc = full_space({C.dim()});
  r.guard("structure", [&](Report& r) {
    expect_coalgebra_map(r, "alpha coalgebra map", B, C, b.alpha);
    expect_coalgebra_map(r, "beta coalgebra map to C_cop", B, co_opposite(C), b.beta);
    expect_identity(r, "images cocommute", bb,
                    [&](const Tensor& h) { return b.beta.apply(b.alpha.apply(D(B, h, 0), 0), 1); },
                    [&](const Tensor& h) { return permute(b.alpha.apply(b.beta.apply(D(B, h, 0), 0), 1), {1, 0}); });
    Op L = coaction_left(b), R = coaction_right(b);
    Realized pb = product_space(b);
    expect_identity(r, "mu left C-colinear", pb, [&](const Tensor& x) { return L(b.mu(x)); },
                    [&](const Tensor& x) { return b.mu.apply(L.apply(x, 0), 1); });
    expect_identity(r, "mu right C-colinear", pb, [&](const Tensor& x) { return R(b.mu(x)); },
                    [&](const Tensor& x) { return b.mu.apply(R.apply(x, 1), 0); });
    expect_identity(r, "eta left C-colinear", cc, [&](const Tensor& c) { return L(b.eta(c)); },
                    [&](const Tensor& c) { return b.eta.apply(D(C, c, 0), 1); });
    expect_identity(r, "eta right C-colinear", cc, [&](const Tensor& c) { return R(b.eta(c)); },
                    [&](const Tensor& c) { return b.eta.apply(D(C, c, 0), 0); });
    expect_identity(r, "(i) Takeuchi compatibility", pb,
                    [&](const Tensor& x) { return b.beta.apply(b.mu.apply(permute(D(B, x, 1), {0, 2, 1}), 0), 1); },
                    [&](const Tensor& x) { return b.alpha.apply(b.mu.apply(move_leg(D(B, x, 0), 0, 2), 0), 1); });
    expect_identity(r, "(ii) Delta mu", pb, [&](const Tensor& x) { return B.delta()(b.mu(x)); },
                    [&](const Tensor& x) {
                      Tensor t = permute(D(B, D(B, x, 0), 2), {0, 2, 1, 3});
                      return b.mu.apply_ext(b.mu.apply_ext(t, 0), 1);
                    });
    expect_identity(r, "(iii) eps mu", pb, [&](const Tensor& x) { return B.eps()(b.mu(x)); },
                    [&](const Tensor& x) { return E(B, E(B, x, 0), 0); });
    expect_identity(r, "(iv) unit on the right", bb, [&](const Tensor& h) { return b.mu(b.eta.apply(R(h), 1)); },
                    [&](const Tensor& h) { return h; });
    expect_identity(r, "(iv) unit on the left", bb, [&](const Tensor& h) { return b.mu(b.eta.apply(L(h), 0)); },
                    [&](const Tensor& h) { return h; });
    expect_identity(r, "(v) Delta eta through alpha", cc, [&](const Tensor& c) { return B.delta()(b.eta(c)); },
                    [&](const Tensor& c) { return b.eta.apply(b.alpha.apply(B.delta()(b.eta(c)), 0), 0); });
    expect_identity(r, "(v) Delta eta through beta", cc, [&](const Tensor& c) { return B.delta()(b.eta(c)); },
                    [&](const Tensor& c) { return b.eta.apply(b.beta.apply(B.delta()(b.eta(c)), 0), 0); });
    expect_identity(r, "(vi) eps eta", cc, [&](const Tensor& c) { return B.eps()(b.eta(c)); },
                    [&](const Tensor& c) { return C.eps()(c); });
  });
  return r;
}

Matrix galois_nu_left(const LeftBicoalgebroid& k) {
  return realize(product_space(k), galois_codomain(k),
                 [&](const Tensor& x) { return k.mu.apply(D(k.K, x, 1), 0); }, "nu");
}

Matrix galois_nu_right(const RightBicoalgebroid& b) {
  return realize(product_space(b), galois_codomain(b),
                 [&](const Tensor& x) { return b.mu.apply(D(b.B, x, 0), 1); }, "nu");
}

Matrix invert_nu(const Matrix& nu, const Subspace& dom, const Subspace& cod) {
  if (nu.cols() != dom.dim() || nu.rows() != cod.dim())
    throw DimensionMismatch("invert_nu: matrix shape does not match the spaces");
  if (dom.dim() != cod.dim())
    throw NotXHopf("Galois map between spaces of dimension " + std::to_string(dom.dim()) + " and " +
                   std::to_string(cod.dim()));
  auto inv = inverse(nu);
  if (!inv)
    throw NotXHopf("Galois map is singular: rank " + std::to_string(rank(nu)) + " of " + std::to_string(dom.dim()));
  return *inv;
}

namespace {

template <class X>
void finish_xhopf(X& x, Matrix nu) {
  x.nu_m = std::move(nu);
  x.nu_inv_m = invert_nu(x.nu_m, x.dom.space, x.cod.space);
  x.nu = op_from_basis_matrix("nu", x.dom, x.cod, x.nu_m);
  x.nu_inv = op_from_basis_matrix("nu^-1", x.cod, x.dom, x.nu_inv_m);
}

}  // namespace

LeftXHopf make_left_xhopf(const LeftBicoalgebroid& k) {
  LeftXHopf x{k, product_space(k), galois_codomain(k), {}, {}, {}, {}};
  finish_xhopf(x, galois_nu_left(k));
  return x;
}

RightXHopf make_right_xhopf(const RightBicoalgebroid& b) {
  RightXHopf x{b, product_space(b), galois_codomain(b), {}, {}, {}, {}};
  finish_xhopf(x, galois_nu_right(b));
  return x;
}

LeftXHopf with_nu_inverse(LeftXHopf k, const Matrix& inv) {
  k.nu_inv_m = inv;
  k.nu_inv = op_from_basis_matrix("nu^-1", k.cod, k.dom, inv);
  return k;
}

RightXHopf with_nu_inverse(RightXHopf b, const Matrix& inv) {
  b.nu_inv_m = inv;
  b.nu_inv = op_from_basis_matrix("nu^-1", b.cod, b.dom, inv);
  return b;
}

Report lemma_suite_left(const LeftXHopf& x) {
  const LeftBicoalgebroid& k = x.base;
  const Coalgebra& K = k.K;
  Report r;
  r.title = "left lemma suite " + k.name;
  Realized cc = full_space({k.C.dim()});
  auto nu = [&](const Tensor& t) { return k.mu.apply(D(K, t, 1), 0); };
  auto inv = [&](const Tensor& t) { return x.nu_inv(t); };
  expect_identity(r, "leftbi i: alpha eta = id", cc, [&](const Tensor& c) { return k.alpha(k.eta(c)); },
                  [](const Tensor& c) { return c; });
  expect_identity(r, "leftbi ii: beta eta = id", cc, [&](const Tensor& c) { return k.beta(k.eta(c)); },
                  [](const Tensor& c) { return c; });
  expect_identity(r, "leftbi iii: alpha(hk) = alpha(h) eps(k)", x.dom,
                  [&](const Tensor& t) { return k.alpha(k.mu(t)); },
                  [&](const Tensor& t) { return k.alpha(E(K, t, 1)); });
  expect_identity(r, "leftbi iv: beta(hk) = eps(h) beta(k)", x.dom,
                  [&](const Tensor& t) { return k.beta(k.mu(t)); },
                  [&](const Tensor& t) { return k.beta(E(K, t, 0)); });
  expect_identity(r, "property i: nu nu^-1 = id", x.cod, [&](const Tensor& t) { return nu(inv(t)); },
                  [](const Tensor& t) { return t; });
  expect_identity(r, "property ii: nu^-1 nu = id", x.dom, [&](const Tensor& t) { return inv(nu(t)); },
                  [](const Tensor& t) { return t; });
  expect_identity(r, "property iii: eps(nu-) eps(nu+) = eps eps", x.cod,
                  [&](const Tensor& t) { return E(K, E(K, inv(t), 0), 0); },
                  [&](const Tensor& t) { return E(K, E(K, t, 0), 0); });
  expect_identity(r, "property iv: eps(nu-) nu+ = eps(k) k'", x.cod,
                  [&](const Tensor& t) { return E(K, inv(t), 0); }, [&](const Tensor& t) { return E(K, t, 0); });
  expect_identity(r, "property v: nu- nu+ = eps(k') k", x.cod, [&](const Tensor& t) { return k.mu(inv(t)); },
                  [&](const Tensor& t) { return E(K, t, 1); });
  expect_identity(r, "nu^-1 right K-colinear", x.cod, [&](const Tensor& t) { return D(K, inv(t), 1); },
                  [&](const Tensor& t) { return x.nu_inv.apply(D(K, t, 1), 0); });
  return r;
}

Report lemma_suite_right(const RightXHopf& x) {
  const RightBicoalgebroid& b = x.base;
  const Coalgebra& B = b.B;
  Report r;
  r.title = "right lemma suite " + b.name;
  Realized cc = full_space({b.C.dim()});
  auto nu = [&](const Tensor& t) { return b.mu.apply(D(B, t, 0), 1); };
  auto inv = [&](const Tensor& t) { return x.nu_inv(t); };
  expect_identity(r, "rightbi i: alpha eta = id", cc, [&](const Tensor& c) { return b.alpha(b.eta(c)); },
                  [](const Tensor& c) { return c; });
  expect_identity(r, "rightbi ii: beta eta = id", cc, [&](const Tensor& c) { return b.beta(b.eta(c)); },
                  [](const Tensor& c) { return c; });
  expect_identity(r, "rightbi iii: alpha(bb') = eps(b) alpha(b')", x.dom,
                  [&](const Tensor& t) { return b.alpha(b.mu(t)); },
                  [&](const Tensor& t) { return b.alpha(E(B, t, 0)); });
  expect_identity(r, "rightbi iv: beta(bb') = beta(b) eps(b')", x.dom,
                  [&](const Tensor& t) { return b.beta(b.mu(t)); },
                  [&](const Tensor& t) { return b.beta(E(B, t, 1)); });
  expect_identity(r, "property2 i: nu nu^-1 = id", x.cod, [&](const Tensor& t) { return nu(inv(t)); },
                  [](const Tensor& t) { return t; });
  expect_identity(r, "property2 ii: nu^-1 nu = id", x.dom, [&](const Tensor& t) { return inv(nu(t)); },
                  [](const Tensor& t) { return t; });
  expect_identity(r, "property2 iii: eps(nu-) eps(nu+) = eps eps", x.cod,
                  [&](const Tensor& t) { return E(B, E(B, inv(t), 0), 0); },
                  [&](const Tensor& t) { return E(B, E(B, t, 0), 0); });
  expect_identity(r, "property2 iv: eps(nu+) nu- = eps(b') b", x.cod,
                  [&](const Tensor& t) { return E(B, inv(t), 1); }, [&](const Tensor& t) { return E(B, t, 1); });
  expect_identity(r, "property2 v: nu- nu+ = eps(b) b'", x.cod, [&](const Tensor& t) { return b.mu(inv(t)); },
                  [&](const Tensor& t) { return E(B, t, 0); });
  expect_identity(r, "nu^-1 left B-colinear", x.cod, [&](const Tensor& t) { return D(B, inv(t), 0); },
                  [&](const Tensor& t) { return x.nu_inv.apply(D(B, t, 0), 1); });
  return r;
}

// ---------------------------------------------------------------------------
// C^e

namespace {

struct Env {
  const Coalgebra& c;
  std::uint32_t n;
  Env(const Coalgebra& cc) : c(cc), n(static_cast<std::uint32_t>(cc.dim())) {}
  std::uint32_t pair(std::uint32_t a, std::uint32_t b) const { return a * n + b; }
  std::uint32_t first(std::uint32_t k) const { return k / n; }
  std::uint32_t second(std::uint32_t k) const { return k % n; }
  Rational eps(std::uint32_t a) const { return c.epsilon(a); }
};

Op ce_alpha(const Env& e) {
  return Op::from_fn("alpha", {e.n * e.n}, {e.n}, [&](const Idx& i) {
    return basis_vec(e.n, e.first(i[0])).scaled(e.eps(e.second(i[0])));
  });
}

Op ce_beta(const Env& e) {
  return Op::from_fn("beta", {e.n * e.n}, {e.n}, [&](const Idx& i) {
    return basis_vec(e.n, e.second(i[0])).scaled(e.eps(e.first(i[0])));
  });
}

// c -> c1 (x) c2 (swap = false) or c2 (x) c1 (swap = true)
Op ce_eta(const Env& e, bool swap) {
  return Op::from_fn("eta", {e.n}, {e.n * e.n}, [&](const Idx& i) {
    Tensor out({static_cast<std::size_t>(e.n) * e.n});
    Tensor d = e.c.delta()(basis_vec(e.n, i[0]));
    for (const auto& [idx, x] : d.terms())
      out.add({swap ? e.pair(idx[1], idx[0]) : e.pair(idx[0], idx[1])}, x);
    return out;
  });
}

}  // namespace

LeftBicoalgebroid coenveloping_left_data(const Coalgebra& c) {
  Env e(c);
  std::size_t d = std::size_t(e.n) * e.n;
  LeftBicoalgebroid k{"C^e(left)", tensor_coalgebra(c, co_opposite(c)), c, ce_alpha(e), ce_beta(e), {}, ce_eta(e, false)};
  // c (x) c' . d (x) d' = eps(c') eps(d) c (x) d'
  Op mu = Op::from_fn("mu", {d, d}, {d}, [&](const Idx& i) {
    Rational s = e.eps(e.second(i[0])) * e.eps(e.first(i[1]));
    return basis_vec(d, e.pair(e.first(i[0]), e.second(i[1]))).scaled(s);
  });
  k.mu = restricted(mu, product_space(k).space);
  return k;
}

RightBicoalgebroid coenveloping_right_data(const Coalgebra& c) {
  Env e(c);
  std::size_t d = std::size_t(e.n) * e.n;
  RightBicoalgebroid b{"C^e(right)", tensor_coalgebra(c, co_opposite(c)), c, ce_alpha(e), ce_beta(e), {}, ce_eta(e, true)};
  // c (x) c' . d (x) d' = eps(c) eps(d') d (x) c'
  Op mu = Op::from_fn("mu", {d, d}, {d}, [&](const Idx& i) {
    Rational s = e.eps(e.first(i[0])) * e.eps(e.second(i[1]));
    return basis_vec(d, e.pair(e.first(i[1]), e.second(i[0]))).scaled(s);
  });
  b.mu = restricted(mu, product_space(b).space);
  return b;
}

LeftXHopf coenveloping_left(const Coalgebra& c) { return make_left_xhopf(coenveloping_left_data(c)); }
RightXHopf coenveloping_right(const Coalgebra& c) { return make_right_xhopf(coenveloping_right_data(c)); }

// ---------------------------------------------------------------------------
// Hopf algebras

HopfAlgebra make_hopf(std::string name, const Coalgebra& coalg,
                      const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& mul,
                      std::size_t unit_index, std::optional<Matrix> antipode) {
  std::size_t d = coalg.dim();
  TensorIndex ti({d, d});
  Matrix m(d, d * d);
  for (const auto& [i, j, k, c] : mul) m.add_to(k, ti.flatten({i, j}), c);
  HopfAlgebra h{std::move(name), coalg, Op("mul", {d, d}, {d}, m), basis_vec(d, unit_index), std::nullopt};
  if (antipode) h.antipode = Op("S", {d}, {d}, *antipode);
  return h;
}

namespace {

void algebra_axioms(Report& r, const Coalgebra& coalg, const Op& mul, const Tensor& unit) {
  std::size_t d = coalg.dim();
  Realized one = full_space({d}), two = full_space({d, d}), three = full_space({d, d, d});
  expect_identity(r, "associative", three, [&](const Tensor& t) { return mul(mul.apply(t, 0)); },
                  [&](const Tensor& t) { return mul(mul.apply(t, 1)); });
  expect_identity(r, "unital", one, [&](const Tensor& t) { return mul(tensor_product(unit, t)); },
                  [&](const Tensor& t) { return mul(tensor_product(t, unit)); });
  expect_identity(r, "unit is a unit", one, [&](const Tensor& t) { return mul(tensor_product(unit, t)); },
                  [](const Tensor& t) { return t; });
  expect_identity(r, "Delta multiplicative", two, [&](const Tensor& t) { return coalg.delta()(mul(t)); },
                  [&](const Tensor& t) {
                    Tensor u = permute(D(coalg, D(coalg, t, 0), 2), {0, 2, 1, 3});
                    return mul.apply(mul.apply(u, 0), 1);
                  });
}

}  // namespace

Report check_hopf(const HopfAlgebra& h) {
  Report r;
  r.title = "Hopf algebra " + h.name;
  r.guard("structure", [&](Report& r) {
    r.add("coalgebra", check_coalgebra(h.coalg).ok());
    algebra_axioms(r, h.coalg, h.mul, h.unit);
    std::size_t d = h.dim();
    expect_identity(r, "Delta(1) = 1 (x) 1", full_space({}), [&](const Tensor&) { return h.coalg.delta()(h.unit); },
                    [&](const Tensor&) { return tensor_product(h.unit, h.unit); });
    expect_identity(r, "eps multiplicative", full_space({d, d}), [&](const Tensor& t) { return h.coalg.eps()(h.mul(t)); },
                    [&](const Tensor& t) { return E(h.coalg, E(h.coalg, t, 0), 0); });
    r.add("eps(1) = 1", h.coalg.eps()(h.unit).value() == 1);
    if (!h.antipode) {
      r.fail("antipode", "no antipode given");
      return;
    }
    const Op& S = *h.antipode;
    auto eps_unit = [&](const Tensor& t) { return tensor_product(E(h.coalg, t, 0), h.unit); };
    expect_identity(r, "S(h1) h2 = eps(h) 1", full_space({d}),
                    [&](const Tensor& t) { return h.mul(S.apply(h.coalg.delta()(t), 0)); }, eps_unit);
    expect_identity(r, "h1 S(h2) = eps(h) 1", full_space({d}),
                    [&](const Tensor& t) { return h.mul(S.apply(h.coalg.delta()(t), 1)); }, eps_unit);
  });
  return r;
}

HopfAlgebra group_algebra(const FiniteGroup& g) {
  std::size_t n = g.order();
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> mul;
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul.emplace_back(a, b, g.mul[a][b], Rational(1));
    s.set(g.inverse(a), a, 1);
  }
  return make_hopf("Q[" + g.name + "]", Coalgebra::grouplike(n), mul, 0, s);
}

HopfAlgebra sweedler_h4() {
  // 0 = 1, 1 = g, 2 = x, 3 = gx
  Coalgebra c(4,
              {{0, 0, 0, 1},
               {1, 1, 1, 1},
               {2, 2, 0, 1},
               {2, 1, 2, 1},
               {3, 3, 1, 1},
               {3, 0, 3, 1}},
              {1, 1, 0, 0});
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> mul;
  for (std::size_t a = 0; a < 4; ++a) {
    mul.emplace_back(0, a, a, Rational(1));
    if (a) mul.emplace_back(a, 0, a, Rational(1));
  }
  mul.emplace_back(1, 1, 0, Rational(1));
  mul.emplace_back(1, 2, 3, Rational(1));
  mul.emplace_back(1, 3, 2, Rational(1));
  mul.emplace_back(2, 1, 3, Rational(-1));
  mul.emplace_back(3, 1, 2, Rational(-1));
  Matrix s(4, 4);
  s.set(0, 0, 1);
  s.set(1, 1, 1);
  s.set(3, 2, -1);
  s.set(2, 3, 1);
  return make_hopf("H4", c, mul, 0, s);
}

HopfAlgebra idempotent_monoid_bialgebra() {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> mul{
      {0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 0, 1, Rational(1)}, {1, 1, 1, Rational(1)}};
  return make_hopf("Q[{1,x}]", Coalgebra::grouplike(2), mul, 0, std::nullopt);
}

namespace {

Op counit_to_ground(const Coalgebra& c) {
  return Op::from_fn("eps", {c.dim()}, {1}, [&](const Idx& i) { return basis_vec(1, 0).scaled(c.epsilon(i[0])); });
}

Op unit_from_ground(const HopfAlgebra& h) {
  return Op::from_fn("eta", {1}, {h.dim()}, [&](const Idx&) { return h.unit; });
}

}  // namespace

LeftBicoalgebroid hopf_left_data(const HopfAlgebra& h) {
  LeftBicoalgebroid k{h.name, h.coalg, ground_coalgebra(), counit_to_ground(h.coalg), counit_to_ground(h.coalg), {},
                      unit_from_ground(h)};
  k.mu = restricted(h.mul, product_space(k).space);
  return k;
}

RightBicoalgebroid hopf_right_data(const HopfAlgebra& h) {
  RightBicoalgebroid b{h.name, h.coalg, ground_coalgebra(), counit_to_ground(h.coalg), counit_to_ground(h.coalg), {},
                       unit_from_ground(h)};
  b.mu = restricted(h.mul, product_space(b).space);
  return b;
}

LeftXHopf hopf_to_left_xhopf(const HopfAlgebra& h) { return make_left_xhopf(hopf_left_data(h)); }
RightXHopf hopf_to_right_xhopf(const HopfAlgebra& h) { return make_right_xhopf(hopf_right_data(h)); }

Op hopf_left_nu_inverse(const HopfAlgebra& h) {
  if (!h.antipode) throw NotXHopf("no antipode");
  std::size_t d = h.dim();
  return Op::from_fn("nu^-1", {d, d}, {d, d}, [&](const Idx& i) {
    Tensor t = D(h.coalg, Tensor::basis({d, d}, i), 1);  // h h'1 h'2
    return h.mul.apply(h.antipode->apply(t, 1), 0);
  });
}

Op hopf_right_nu_inverse(const HopfAlgebra& h) {
  if (!h.antipode) throw NotXHopf("no antipode");
  std::size_t d = h.dim();
  return Op::from_fn("nu^-1", {d, d}, {d, d}, [&](const Idx& i) {
    Tensor t = D(h.coalg, Tensor::basis({d, d}, i), 0);  // b1 b2 b'
    return h.mul.apply(h.antipode->apply(t, 1), 1);
  });
}

// ---------------------------------------------------------------------------
// weak Hopf algebras

Report check_weak_hopf(const WeakHopf& w) {
  Report r;
  r.title = "weak Hopf algebra " + w.name;
  r.guard("structure", [&](Report& r) {
    std::size_t d = w.dim();
    const Coalgebra& c = w.coalg;
    r.add("coalgebra", check_coalgebra(c).ok());
    algebra_axioms(r, c, w.mul, w.unit);
    Tensor d1 = c.delta()(w.unit);  // 1_(1) 1_(2)
    Realized pt = full_space({});
    // (Delta 1 (x) 1)(1 (x) Delta 1) and (1 (x) Delta 1)(Delta 1 (x) 1)
    auto prod3 = [&](const Tensor& a, const Tensor& b) {
      Tensor t = permute(tensor_product(a, b), {0, 3, 1, 4, 2, 5});
      return w.mul.apply(w.mul.apply(w.mul.apply(t, 0), 1), 2);
    };
    Tensor a = tensor_product(d1, w.unit), b = tensor_product(w.unit, d1);
    Tensor dd = D(c, d1, 0);
    expect_identity(r, "weak unit (Delta 1 (x) 1)(1 (x) Delta 1)", pt, [&](const Tensor&) { return prod3(a, b); },
                    [&](const Tensor&) { return dd; });
    expect_identity(r, "weak unit (1 (x) Delta 1)(Delta 1 (x) 1)", pt, [&](const Tensor&) { return prod3(b, a); },
                    [&](const Tensor&) { return dd; });
    // eps(b 1_(1)) eps(1_(2) b') = eps(bb') = eps(b 1_(2)) eps(1_(1) b')
    Realized two = full_space({d, d});
    auto weak_eps = [&](const Tensor& t, bool swap) {
      Tensor u = tensor_product(t, swap ? permute(d1, {1, 0}) : d1);  // b b' u v
      u = permute(u, {0, 2, 3, 1});                                   // b u v b'
      u = w.mul.apply(w.mul.apply(u, 0), 1);
      return E(c, E(c, u, 0), 0);
    };
    expect_identity(r, "weak counit eps(b 1_(1)) eps(1_(2) b')", two, [&](const Tensor& t) { return weak_eps(t, false); },
                    [&](const Tensor& t) { return c.eps()(w.mul(t)); });
    expect_identity(r, "weak counit eps(b 1_(2)) eps(1_(1) b')", two, [&](const Tensor& t) { return weak_eps(t, true); },
                    [&](const Tensor& t) { return c.eps()(w.mul(t)); });
    const Op& S = w.antipode;
    Realized one = full_space({d});
    // eps_t(b) = eps(1_(1) b) 1_(2), eps_s(b) = 1_(1) eps(b 1_(2))
    auto eps_t = [&](const Tensor& t) { return E(c, w.mul(permute(tensor_product(t, d1), {1, 0, 2})), 0); };
    auto eps_s = [&](const Tensor& t) { return E(c, w.mul.apply(permute(tensor_product(d1, t), {0, 2, 1}), 1), 1); };
    expect_identity(r, "b1 S(b2) = eps_t(b)", one, [&](const Tensor& t) { return w.mul(S.apply(c.delta()(t), 1)); },
                    eps_t);
    expect_identity(r, "S(b1) b2 = eps_s(b)", one, [&](const Tensor& t) { return w.mul(S.apply(c.delta()(t), 0)); },
                    eps_s);
    expect_identity(r, "S(b1) b2 S(b3) = S(b)", one,
                    [&](const Tensor& t) {
                      Tensor u = S.apply(S.apply(D(c, c.delta()(t), 1), 0), 2);
                      return w.mul(w.mul.apply(u, 0));
                    },
                    [&](const Tensor& t) { return S(t); });
  });
  return r;
}

WeakHopf weak_from_hopf(const HopfAlgebra& h) {
  if (!h.antipode) throw SNotInvertible("no antipode");
  return {h.name, h.coalg, h.mul, h.unit, *h.antipode};
}

LeftXHopf weak_hopf_to_xhopf(const WeakHopf& w) {
  Report rep = check_weak_hopf(w);
  if (!rep.ok()) throw WeakAxiomFailure(rep);
  auto sinv = inverse(w.antipode.matrix());
  if (!sinv) throw SNotInvertible("antipode of " + w.name + " has rank " + std::to_string(rank(w.antipode.matrix())));
  std::size_t d = w.dim();
  const Coalgebra& c = w.coalg;
  Tensor d1 = c.delta()(w.unit);
  Op xi = Op::from_fn("xi", {d}, {d}, [&](const Idx& i) {
    Tensor t = permute(tensor_product(basis_vec(d, i[0]), d1), {1, 0, 2});  // 1_(1) b 1_(2)
    return E(c, w.mul.apply(t, 0), 0);
  });
  CoidealQuotient q = quotient_coideal(c, kernel(xi.matrix()));
  Op sinv_op("S^-1", {d}, {d}, *sinv);
  std::size_t m = q.quotient.dim();
  LeftBicoalgebroid k{w.name, c, q.quotient, q.pi.map, {}, {}, {}};
  k.beta = Op::from_fn("beta", {d}, {m}, [&](const Idx& i) { return q.pi.map(sinv_op(Tensor::basis({d}, i))); });
  k.eta = Op::from_fn("eta", {m}, {d}, [&](const Idx& i) { return xi(q.section(Tensor::basis({m}, i))); });
  k.mu = restricted(w.mul, product_space(k).space);
  return make_left_xhopf(k);
}

// ---------------------------------------------------------------------------
// group-likes and characters

Report check_group_like(const Coalgebra& k, const Coalgebra& c, const Op& alpha, const Op& delta) {
  Report r;
  r.title = "right group-like " + delta.name();
  Realized cc = full_space({c.dim()});
  expect_identity(r, "delta(c)1 (x) alpha(delta(c)2) = delta(c1) (x) c2", cc,
                  [&](const Tensor& x) { return alpha.apply(k.delta()(delta(x)), 1); },
                  [&](const Tensor& x) { return delta.apply(c.delta()(x), 0); });
  expect_identity(r, "delta(alpha(delta(c)1)) (x) delta(c)2 = Delta delta(c)", cc,
                  [&](const Tensor& x) { return delta.apply(alpha.apply(k.delta()(delta(x)), 0), 0); },
                  [&](const Tensor& x) { return k.delta()(delta(x)); });
  expect_identity(r, "eps delta = eps", cc, [&](const Tensor& x) { return k.eps()(delta(x)); },
                  [&](const Tensor& x) { return c.eps()(x); });
  return r;
}

Report check_group_like(const LeftXHopf& k, const Op& delta) {
  return check_group_like(k.base.K, k.base.C, k.base.alpha, delta);
}

Report check_group_like(const RightXHopf& b, const Op& delta) {
  return check_group_like(b.base.B, b.base.C, b.base.alpha, delta);
}

Report check_character(const Coalgebra& k, const Coalgebra& c, const Realized& product, const Op& mu,
                       const Op& eta, const Op& sigma) {
  Report r;
  r.title = "character " + sigma.name();
  (void)k;
  expect_identity(r, "sigma eta = id", full_space({c.dim()}), [&](const Tensor& x) { return sigma(eta(x)); },
                  [](const Tensor& x) { return x; });
  expect_identity(r, "sigma(gh) = eps(sigma(g)) sigma(h)", product, [&](const Tensor& x) { return sigma(mu(x)); },
                  [&](const Tensor& x) { return E(c, sigma.apply(sigma.apply(x, 0), 1), 0); });
  return r;
}

Report check_character(const LeftXHopf& k, const Op& sigma) {
  return check_character(k.base.K, k.base.C, k.dom, k.base.mu, k.base.eta, sigma);
}

Report check_character(const RightXHopf& b, const Op& sigma) {
  return check_character(b.base.B, b.base.C, b.dom, b.base.mu, b.base.eta, sigma);
}

Op coenveloping_group_like(const Coalgebra& c, const Op& theta) {
  Env e(c);
  return Op::from_fn("delta", {e.n}, {std::size_t(e.n) * e.n}, [&](const Idx& i) {
    Tensor t = theta.apply(c.delta()(basis_vec(e.n, i[0])), 0);  // theta(c1) c2
    Tensor out({std::size_t(e.n) * e.n});
    for (const auto& [idx, x] : t.terms()) out.add({e.pair(idx[1], idx[0])}, x);
    return out;
  });
}

Op coenveloping_character(const Coalgebra& c) {
  Env e(c);
  return ce_beta(e);
}

}  // namespace hocx
