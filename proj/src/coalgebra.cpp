#include "hocx/coalgebra.hpp"

#include <sstream>

namespace hocx {

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i); }

// Compare two tensors, recording a failure naming the basis element.
void expect_equal(Report& r, const std::string& name, const Tensor& lhs, const Tensor& rhs, const std::string& where,
                  bool& ok) {
  if (lhs == rhs) return;
  if (ok) r.fail(name, where + ": lhs=" + lhs.str() + " rhs=" + rhs.str());
  ok = false;
}

}  // namespace

/* Coalgebra */

Coalgebra::Coalgebra(std::size_t dim, const std::vector<DeltaTerm>& delta, std::vector<Rational> eps) : dim_(dim) {
  if (eps.size() != dim) throw DimensionMismatch("coalgebra: epsilon length");
  Matrix d(dim * dim, dim);
  for (const auto& t : delta) {
    if (t.i >= dim || t.j >= dim || t.k >= dim) throw DimensionMismatch("coalgebra: delta index out of range");
    d.add_to(t.j * dim + t.k, t.i, t.coeff);
  }
  delta_ = Op("Delta", {dim}, {dim, dim}, d);
  eps_ = functional("eps", dim, eps);
}

Coalgebra::Coalgebra(Op delta, Op eps) : dim_(delta.in().at(0)), delta_(std::move(delta)), eps_(std::move(eps)) {
  if (delta_.in() != Dims{dim_} || delta_.out() != Dims{dim_, dim_} || eps_.in() != Dims{dim_} || !eps_.out().empty())
    throw DimensionMismatch("coalgebra: operator shapes");
}

Coalgebra Coalgebra::grouplike(std::size_t n) {
  std::vector<DeltaTerm> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back({i, i, i, 1});
  return Coalgebra(n, d, std::vector<Rational>(n, Rational(1)));
}

Coalgebra Coalgebra::path() {
  return Coalgebra(3, {{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 0, 2, 1}, {2, 2, 1, 1}}, {1, 1, 0});
}

std::vector<DeltaTerm> Coalgebra::delta_terms() const {
  std::vector<DeltaTerm> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (const auto& [r, x] : delta_.matrix().col(i)) out.push_back({i, r / dim_, r % dim_, x});
  return out;
}

std::vector<Rational> Coalgebra::eps_values() const {
  std::vector<Rational> v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = epsilon(i);
  return v;
}

Report check_coalgebra(const Coalgebra& c) {
  Report r;
  r.title = "coalgebra";
  bool coassoc = true, left = true, right = true;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Tensor e = Tensor::basis({c.dim()}, {static_cast<std::uint32_t>(i)});
    Tensor d = c.delta()(e);
    expect_equal(r, "coassociativity", c.delta().apply(d, 0), c.delta().apply(d, 1), basis_name(i), coassoc);
    expect_equal(r, "left counit", c.eps().apply(d, 0), e, basis_name(i), left);
    expect_equal(r, "right counit", c.eps().apply(d, 1), e, basis_name(i), right);
  }
  if (coassoc) r.pass("coassociativity");
  if (left) r.pass("left counit");
  if (right) r.pass("right counit");
  return r;
}

Coalgebra co_opposite(const Coalgebra& c) {
  std::vector<DeltaTerm> d = c.delta_terms();
  for (auto& t : d) std::swap(t.j, t.k);
  return Coalgebra(c.dim(), d, c.eps_values());
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  std::size_t n = c.dim() * d.dim();
  Op delta = Op::from_fn("Delta", {n}, {n, n}, [&](const Idx& i) {
    Tensor t = Tensor::basis({c.dim(), d.dim()}, {i[0] / static_cast<std::uint32_t>(d.dim()),
                                                  i[0] % static_cast<std::uint32_t>(d.dim())});
    t = d.delta().apply(c.delta().apply(t, 0), 2);  // c1 c2 d1 d2
    t = permute(t, {0, 2, 1, 3});
    Tensor out({n, n});
    for (const auto& [idx, x] : t.terms())
      out.add({static_cast<std::uint32_t>(idx[0] * d.dim() + idx[1]), static_cast<std::uint32_t>(idx[2] * d.dim() + idx[3])}, x);
    return out;
  });
  std::vector<Rational> e(n);
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t b = 0; b < d.dim(); ++b) e[a * d.dim() + b] = c.epsilon(a) * d.epsilon(b);
  return Coalgebra(std::move(delta), functional("eps", n, e));
}

/* maps and comodules */

Report check_coalgebra_map(const CoalgebraMap& f) {
  Report r;
  r.title = "coalgebra map " + f.map.name();
  bool comult = true, counit = true;
  for (std::size_t i = 0; i < f.src.dim(); ++i) {
    Tensor e = Tensor::basis({f.src.dim()}, {static_cast<std::uint32_t>(i)});
    Tensor lhs = f.tgt.delta()(f.map(e));
    Tensor rhs = f.map.apply(f.map.apply(f.src.delta()(e), 0), 1);
    expect_equal(r, "comultiplicative", lhs, rhs, basis_name(i), comult);
    expect_equal(r, "counital", f.tgt.eps()(f.map(e)), f.src.eps()(e), basis_name(i), counit);
  }
  if (comult) r.pass("comultiplicative");
  if (counit) r.pass("counital");
  return r;
}

Report check_right_comodule(const RightComodule& m) {
  Report r;
  r.title = "right comodule";
  bool coassoc = true, counit = true;
  for (std::size_t i = 0; i < m.dim; ++i) {
    Tensor e = Tensor::basis({m.dim}, {static_cast<std::uint32_t>(i)});
    Tensor d = m.rho(e);
    expect_equal(r, "coassociativity", m.rho.apply(d, 0), m.over.delta().apply(d, 1), basis_name(i), coassoc);
    expect_equal(r, "counit", m.over.eps().apply(d, 1), e, basis_name(i), counit);
  }
  if (coassoc) r.pass("coassociativity");
  if (counit) r.pass("counit");
  return r;
}

Report check_left_comodule(const LeftComodule& m) {
  Report r;
  r.title = "left comodule";
  bool coassoc = true, counit = true;
  for (std::size_t i = 0; i < m.dim; ++i) {
    Tensor e = Tensor::basis({m.dim}, {static_cast<std::uint32_t>(i)});
    Tensor d = m.rho(e);
    expect_equal(r, "coassociativity", m.over.delta().apply(d, 0), m.rho.apply(d, 1), basis_name(i), coassoc);
    expect_equal(r, "counit", m.over.eps().apply(d, 0), e, basis_name(i), counit);
  }
  if (coassoc) r.pass("coassociativity");
  if (counit) r.pass("counit");
  return r;
}

Report check_bicomodule(const Bicomodule& m) {
  Report r;
  r.title = "bicomodule";
  r.merge(check_left_comodule(m.left), "left ");
  r.merge(check_right_comodule(m.right), "right ");
  bool ok = true;
  for (std::size_t i = 0; i < m.left.dim; ++i) {
    Tensor e = Tensor::basis({m.left.dim}, {static_cast<std::uint32_t>(i)});
    expect_equal(r, "coactions commute", m.right.rho.apply(m.left.rho(e), 1), m.left.rho.apply(m.right.rho(e), 0),
                 basis_name(i), ok);
  }
  if (ok) r.pass("coactions commute");
  return r;
}

RightComodule regular_right(const Coalgebra& c) { return {c.dim(), c, c.delta()}; }
LeftComodule regular_left(const Coalgebra& c) { return {c.dim(), c, c.delta()}; }

RightComodule right_along(const Coalgebra& k, const CoalgebraMap& f) {
  Op rho = Op::from_fn("rho_R", {k.dim()}, {k.dim(), f.tgt.dim()}, [&](const Idx& i) {
    return f.map.apply(k.delta()(Tensor::basis({k.dim()}, i)), 1);
  });
  return {k.dim(), f.tgt, rho};
}

LeftComodule left_along(const Coalgebra& k, const CoalgebraMap& f) {
  Op rho = Op::from_fn("rho_L", {k.dim()}, {f.tgt.dim(), k.dim()}, [&](const Idx& i) {
    return f.map.apply(k.delta()(Tensor::basis({k.dim()}, i)), 0);
  });
  return {k.dim(), f.tgt, rho};
}

/* cotensor products */

Subspace cotensor(const RightComodule& x, const LeftComodule& y) {
  if (!(x.over == y.over)) throw DimensionMismatch("cotensor: comodules over different coalgebras");
  return iterated_cotensor({x.dim, y.dim}, {{x.rho, y.rho}});
}

Subspace iterated_cotensor(const Dims& dims, const std::vector<Junction>& junctions) {
  if (junctions.size() + 1 != dims.size()) throw DimensionMismatch("iterated_cotensor: junction count");
  std::size_t n = flat_size(dims);
  std::vector<std::size_t> offset;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < junctions.size(); ++i) {
    offset.push_back(rows);
    rows += n * junctions[i].right.out().at(1);
  }
  std::vector<SparseVec> cols(n);
  for (std::size_t f = 0; f < n; ++f) {
    Tensor b = Tensor::from_flat(dims, unit(f));
    for (std::size_t i = 0; i < junctions.size(); ++i) {
      Tensor d = junctions[i].right.apply(b, i) - junctions[i].left.apply(b, i + 1);
      for (const auto& [r, x] : d.to_flat()) cols[f].emplace(offset[i] + r, x);
    }
  }
  return kernel(Matrix::from_columns(rows, std::move(cols)));
}

Subspace nested_cotensor(const Dims& dims, const std::vector<Junction>& junctions, bool from_left) {
  if (junctions.size() + 1 != dims.size()) throw DimensionMismatch("nested_cotensor: junction count");
  std::size_t k = dims.size();
  if (from_left) {
    Subspace v = Subspace::full(dims[0]);
    Dims cur{dims[0]};
    for (std::size_t i = 0; i + 1 < k; ++i) {
      Subspace w = tensor_subspace(v, Subspace::full(dims[i + 1]));
      cur.push_back(dims[i + 1]);
      const Junction& j = junctions[i];
      v = equalizer(cur, w, [&](const Tensor& t) { return j.right.apply(t, i); },
                    [&](const Tensor& t) { return j.left.apply(t, i + 1); });
    }
    return v;
  }
  Subspace v = Subspace::full(dims[k - 1]);
  Dims cur{dims[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    Subspace w = tensor_subspace(Subspace::full(dims[i]), v);
    cur.insert(cur.begin(), dims[i]);
    const Junction& j = junctions[i];
    v = equalizer(cur, w, [&](const Tensor& t) { return j.right.apply(t, 0); },
                  [&](const Tensor& t) { return j.left.apply(t, 1); });
  }
  return v;
}

/* coideal quotients */

CoidealQuotient quotient_coideal(const Coalgebra& c, const Subspace& ideal) {
  std::size_t n = c.dim();
  if (ideal.ambient() != n) throw DimensionMismatch("quotient_coideal: ambient");
  for (std::size_t j = 0; j < ideal.dim(); ++j)
    if (c.eps()(Tensor::from_flat({n}, ideal.vec(j))).value() != 0)
      throw NotCoideal("counit does not vanish on basis vector " + std::to_string(j));
  std::vector<SparseVec> gens;
  for (std::size_t j = 0; j < ideal.dim(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      SparseVec a, b;
      for (const auto& [p, x] : ideal.vec(j)) {
        a.emplace(p * n + i, x);
        b.emplace(i * n + p, x);
      }
      gens.push_back(std::move(a));
      gens.push_back(std::move(b));
    }
  }
  Subspace j2 = Subspace::span(n * n, gens);
  for (std::size_t j = 0; j < ideal.dim(); ++j)
    if (!j2.contains(c.delta()(Tensor::from_flat({n}, ideal.vec(j))).to_flat()))
      throw NotCoideal("comultiplication leaves I(x)C + C(x)I on basis vector " + std::to_string(j));

  std::vector<char> is_pivot(n, 0);
  for (auto p : ideal.pivots()) is_pivot[p] = 1;
  std::vector<std::size_t> keep, pos(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) {
      pos[i] = keep.size();
      keep.push_back(i);
    }
  std::size_t m = keep.size();

  // pi(e_i) = e_i - (i == p_j ? b_j : 0), read on the kept coordinates
  Matrix pim(m, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) pim.set(pos[i], i, 1);
  for (std::size_t j = 0; j < ideal.dim(); ++j)
    for (const auto& [p, x] : ideal.vec(j))
      if (!is_pivot[p]) pim.add_to(pos[p], ideal.pivots()[j], -x);
  Op pi("pi", {n}, {m}, pim);

  Matrix sm(n, m);
  for (std::size_t k = 0; k < m; ++k) sm.set(keep[k], k, 1);
  Op section("section", {m}, {n}, sm);

  Op delta = Op::from_fn("Delta", {m}, {m, m}, [&](const Idx& i) {
    Tensor t = c.delta()(section(Tensor::basis({m}, i)));
    return pi.apply(pi.apply(t, 0), 1);
  });
  std::vector<Rational> e(m);
  for (std::size_t k = 0; k < m; ++k) e[k] = c.epsilon(keep[k]);
  Coalgebra d(std::move(delta), functional("eps", m, e));
  return {d, {c, d, pi}, section};
}

}  // namespace hocx
