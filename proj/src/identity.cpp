#include "hocx/identity.hpp"

#include <map>
#include <numeric>

namespace hocx {

Realized full_space(const Dims& legs) { return {legs, Subspace::full(flat_size(legs))}; }

namespace {

std::string witness(std::size_t j, const Tensor& a, const Tensor& b) {
  return "basis vector " + std::to_string(j) + ": lhs " + a.str() + " vs rhs " + b.str();
}

}  // namespace

void expect_identity(Report& r, const std::string& name, const Realized& dom, const TensorFn& lhs,
                     const TensorFn& rhs) {
  for (std::size_t j = 0; j < dom.space.dim(); ++j) {
    Tensor v = Tensor::from_flat(dom.legs, dom.space.vec(j));
    try {
      Tensor a = lhs(v), b = rhs(v);
      if (!(a == b) && !(a - b).is_zero()) {
        r.fail(name, witness(j, a, b));
        return;
      }
    } catch (const std::exception& e) {
      r.fail(name, "basis vector " + std::to_string(j) + ": " + e.what());
      return;
    }
  }
  r.pass(name);
}

void expect_lands(Report& r, const std::string& name, const Realized& dom, const Realized& cod, const TensorFn& f) {
  for (std::size_t j = 0; j < dom.space.dim(); ++j) {
    try {
      Tensor img = f(Tensor::from_flat(dom.legs, dom.space.vec(j)));
      if (img.dims() != cod.legs || !cod.space.contains(img.to_flat())) {
        r.fail(name, "image of basis vector " + std::to_string(j) + " leaves the target: " + img.str());
        return;
      }
    } catch (const std::exception& e) {
      r.fail(name, "basis vector " + std::to_string(j) + ": " + e.what());
      return;
    }
  }
  r.pass(name);
}

Op restricted(const Op& ambient, const Subspace& dom) {
  return Op::on_subspace(ambient.name(), ambient.in(), ambient.out(), dom,
                         [&](const Tensor& v) { return ambient.apply(v, 0); })
      .with_extension(ambient);
}

Tensor move_leg(const Tensor& t, std::size_t from, std::size_t to) {
  std::vector<std::size_t> rest(t.legs());
  std::iota(rest.begin(), rest.end(), 0);
  rest.erase(rest.begin() + from);
  rest.insert(rest.begin() + to, from);
  return permute(t, rest);
}

Tensor to_coords(const Tensor& t, std::size_t leg, std::size_t count, const Subspace& s) {
  const Dims& d = t.dims();
  Dims mid(d.begin() + leg, d.begin() + leg + count);
  if (flat_size(mid) != s.ambient()) throw DimensionMismatch("to_coords: ambient size");
  TensorIndex ix(mid);
  // slices keyed by the remaining legs
  std::map<Idx, SparseVec> slices;
  for (const auto& [idx, c] : t.terms()) {
    Idx rest(idx.begin(), idx.begin() + leg);
    rest.insert(rest.end(), idx.begin() + leg + count, idx.end());
    std::vector<std::size_t> m(idx.begin() + leg, idx.begin() + leg + count);
    slices[rest][ix.flatten(m)] += c;
  }
  Dims out(d.begin(), d.begin() + leg);
  out.push_back(s.dim());
  out.insert(out.end(), d.begin() + leg + count, d.end());
  Tensor r(out);
  for (auto& [rest, v] : slices) {
    std::erase_if(v, [](const auto& e) { return e.second == 0; });
    auto c = s.coords(v);
    if (!c) throw NotInvariant(0, "to_coords: slice outside the subspace: " + format_vec(v));
    for (const auto& [j, x] : *c) {
      Idx i(rest.begin(), rest.begin() + leg);
      i.push_back(static_cast<std::uint32_t>(j));
      i.insert(i.end(), rest.begin() + leg, rest.end());
      r.add(i, x);
    }
  }
  return r;
}

Tensor from_coords(const Tensor& t, std::size_t leg, const Realized& r) {
  const Dims& d = t.dims();
  Dims out(d.begin(), d.begin() + leg);
  out.insert(out.end(), r.legs.begin(), r.legs.end());
  out.insert(out.end(), d.begin() + leg + 1, d.end());
  TensorIndex ix(r.legs);
  Tensor u(out);
  for (const auto& [idx, c] : t.terms())
    for (const auto& [f, x] : r.space.vec(idx[leg])) {
      Idx i(idx.begin(), idx.begin() + leg);
      for (std::size_t k : ix.unflatten(f)) i.push_back(static_cast<std::uint32_t>(k));
      i.insert(i.end(), idx.begin() + leg + 1, idx.end());
      u.add(i, c * x);
    }
  return u;
}

Op chain(std::string name, const Op& f, const Op& g, std::size_t leg) {
  Dims out(f.out().begin(), f.out().begin() + leg);
  out.insert(out.end(), g.out().begin(), g.out().end());
  out.insert(out.end(), f.out().begin() + leg + g.in().size(), f.out().end());
  if (f.domain())
    return Op::on_subspace(std::move(name), f.in(), out, *f.domain(),
                           [&](const Tensor& x) { return g.apply(f.apply(x, 0), leg); });
  return Op::from_fn(std::move(name), f.in(), out,
                     [&](const Idx& i) { return g.apply(f(Tensor::basis(f.in(), i)), leg); });
}

Tensor basis_vec(std::size_t dim, std::size_t i) { return Tensor::basis({dim}, {static_cast<std::uint32_t>(i)}); }

Coalgebra ground_coalgebra() { return Coalgebra::grouplike(1); }

Op right_coaction_via(const Coalgebra& k, const Op& f) {
  return Op::from_fn("rho_R", {k.dim()}, {k.dim(), f.out().at(0)},
                     [&](const Idx& i) { return f.apply(k.delta()(Tensor::basis({k.dim()}, i)), 1); });
}

Op left_coaction_via(const Coalgebra& k, const Op& f) {
  return Op::from_fn("rho_L", {k.dim()}, {f.out().at(0), k.dim()},
                     [&](const Idx& i) { return f.apply(k.delta()(Tensor::basis({k.dim()}, i)), 0); });
}

Op right_coaction_via_cop(const Coalgebra& k, const Op& f) {
  return Op::from_fn("rho_R", {k.dim()}, {k.dim(), f.out().at(0)}, [&](const Idx& i) {
    return f.apply(permute(k.delta()(Tensor::basis({k.dim()}, i)), {1, 0}), 1);
  });
}

Op left_coaction_via_cop(const Coalgebra& k, const Op& f) {
  return Op::from_fn("rho_L", {k.dim()}, {f.out().at(0), k.dim()}, [&](const Idx& i) {
    return f.apply(permute(k.delta()(Tensor::basis({k.dim()}, i)), {1, 0}), 0);
  });
}

}  // namespace hocx
