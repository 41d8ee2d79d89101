#include "hocx/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hocx {

std::size_t flat_size(const Dims& d) {
  std::size_t n = 1;
  for (auto x : d) n *= x;
  return n;
}

Dims concat(const Dims& a, const Dims& b) {
  Dims d = a;
  d.insert(d.end(), b.begin(), b.end());
  return d;
}

Dims repeat(std::size_t d, std::size_t times) { return Dims(times, d); }

namespace {

std::size_t flat_of(const Dims& dims, const Idx& idx, std::size_t from, std::size_t count) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < count; ++k) f = f * dims[from + k] + idx[from + k];
  return f;
}

Idx unflat(const Dims& dims, std::size_t f) {
  Idx idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = static_cast<std::uint32_t>(f % dims[k]);
    f /= dims[k];
  }
  return idx;
}

}  // namespace

/* Tensor */

Tensor Tensor::basis(Dims dims, Idx idx) {
  if (idx.size() != dims.size()) throw DimensionMismatch("Tensor::basis arity");
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k] >= dims[k]) throw DimensionMismatch("Tensor::basis index out of range");
  Tensor t(std::move(dims));
  t.terms_.emplace(std::move(idx), 1);
  return t;
}

Tensor Tensor::scalar(const Rational& x) {
  Tensor t;
  if (x != 0) t.terms_.emplace(Idx{}, x);
  return t;
}

Tensor Tensor::from_flat(Dims dims, const SparseVec& v) {
  Tensor t(std::move(dims));
  std::size_t n = flat_size(t.dims_);
  for (const auto& [f, x] : v) {
    if (f >= n) throw DimensionMismatch("Tensor::from_flat out of range");
    t.terms_.emplace(unflat(t.dims_, f), x);
  }
  return t;
}

void Tensor::add(const Idx& idx, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.dims_ != dims_) throw DimensionMismatch("Tensor sum: dims differ");
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.dims_ != dims_) throw DimensionMismatch("Tensor difference: dims differ");
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor t = *this;
  t += o;
  return t;
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor t = *this;
  t -= o;
  return t;
}

Tensor Tensor::scaled(const Rational& a) const {
  Tensor t(dims_);
  if (a == 0) return t;
  for (const auto& [i, c] : terms_) t.terms_.emplace_hint(t.terms_.end(), i, a * c);
  return t;
}

SparseVec Tensor::to_flat() const {
  SparseVec v;
  for (const auto& [i, c] : terms_) v.emplace(flat_of(dims_, i, 0, dims_.size()), c);
  return v;
}

Rational Tensor::value() const {
  if (!dims_.empty()) throw DimensionMismatch("Tensor::value on a non-scalar");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::string Tensor::str() const {
  std::ostringstream os;
  if (terms_.empty()) return "0";
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*[";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << ']';
  }
  return os.str();
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  Tensor t(concat(a.dims(), b.dims()));
  for (const auto& [i, x] : a.terms()) {
    for (const auto& [j, y] : b.terms()) {
      Idx k = i;
      k.insert(k.end(), j.begin(), j.end());
      t.add(k, x * y);
    }
  }
  return t;
}

Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.legs()) throw DimensionMismatch("permute: arity");
  Dims d(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) d[k] = t.dims()[perm[k]];
  Tensor out(d);
  Idx j(perm.size());
  for (const auto& [i, c] : t.terms()) {
    for (std::size_t k = 0; k < perm.size(); ++k) j[k] = i[perm[k]];
    out.add(j, c);
  }
  return out;
}

/* Op */

Op::Op(std::string name, Dims in, Dims out, Matrix m)
    : name_(std::move(name)), in_(std::move(in)), out_(std::move(out)), m_(std::move(m)) {
  if (m_.cols() != flat_size(in_) || m_.rows() != flat_size(out_))
    throw DimensionMismatch("Op " + name_ + ": matrix shape does not match legs");
  cache();
}

Op::Op(std::string name, Dims in, Dims out, Subspace dom, Matrix m)
    : name_(std::move(name)), in_(std::move(in)), out_(std::move(out)), dom_(std::move(dom)), m_(std::move(m)) {
  if (dom_->ambient() != flat_size(in_) || m_.cols() != dom_->dim() || m_.rows() != flat_size(out_))
    throw DimensionMismatch("Op " + name_ + ": matrix shape does not match domain");
  cache();
}

void Op::cache() {
  in_size_ = flat_size(in_);
  cols_.assign(m_.cols(), {});
  for (std::size_t j = 0; j < m_.cols(); ++j)
    for (const auto& [r, x] : m_.col(j)) cols_[j].emplace_back(unflat(out_, r), x);
}

Op Op::from_fn(std::string name, Dims in, Dims out, const std::function<Tensor(const Idx&)>& f) {
  std::size_t n = flat_size(in);
  std::vector<SparseVec> cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    Tensor v = f(unflat(in, j));
    if (v.dims() != out) throw DimensionMismatch("Op::from_fn " + name + ": output dims");
    cols[j] = v.to_flat();
  }
  std::size_t rows = flat_size(out);
  return Op(std::move(name), std::move(in), std::move(out), Matrix::from_columns(rows, std::move(cols)));
}

Op Op::on_subspace(std::string name, Dims in, Dims out, Subspace dom,
                   const std::function<Tensor(const Tensor&)>& f) {
  std::vector<SparseVec> cols(dom.dim());
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    Tensor v = f(Tensor::from_flat(in, dom.vec(j)));
    if (v.dims() != out) throw DimensionMismatch("Op::on_subspace " + name + ": output dims");
    cols[j] = v.to_flat();
  }
  std::size_t rows = flat_size(out);
  return Op(std::move(name), std::move(in), std::move(out), std::move(dom),
            Matrix::from_columns(rows, std::move(cols)));
}

Op Op::identity(std::size_t n) { return Op("id", {n}, {n}, Matrix::identity(n)); }

Matrix Op::ambient_matrix() const {
  if (dom_) throw std::logic_error("Op " + name_ + " is only defined on a subspace");
  return m_;
}

Tensor Op::apply(const Tensor& t, std::size_t leg) const {
  std::size_t k = in_.size();
  if (leg + k > t.legs()) throw DimensionMismatch("Op " + name_ + ": not enough legs");
  for (std::size_t i = 0; i < k; ++i)
    if (t.dims()[leg + i] != in_[i]) throw DimensionMismatch("Op " + name_ + ": leg dimension mismatch");

  Dims od(t.dims().begin(), t.dims().begin() + leg);
  od.insert(od.end(), out_.begin(), out_.end());
  od.insert(od.end(), t.dims().begin() + leg + k, t.dims().end());
  Tensor out(od);

  auto emit = [&](const Idx& rest, std::size_t col, const Rational& c) {
    for (const auto& [oi, x] : cols_[col]) {
      Idx full;
      full.reserve(od.size());
      full.insert(full.end(), rest.begin(), rest.begin() + leg);
      full.insert(full.end(), oi.begin(), oi.end());
      full.insert(full.end(), rest.begin() + leg, rest.end());
      out.add(full, c * x);
    }
  };

  if (!dom_) {
    for (const auto& [idx, c] : t.terms()) {
      std::size_t f = flat_of(t.dims(), idx, leg, k);
      Idx rest(idx.begin(), idx.begin() + leg);
      rest.insert(rest.end(), idx.begin() + leg + k, idx.end());
      emit(rest, f, c);
    }
    return out;
  }

  // group by the untouched legs, then read coordinates in the domain subspace
  std::map<Idx, SparseVec> slices;
  for (const auto& [idx, c] : t.terms()) {
    Idx rest(idx.begin(), idx.begin() + leg);
    rest.insert(rest.end(), idx.begin() + leg + k, idx.end());
    slices[rest].emplace(flat_of(t.dims(), idx, leg, k), c);
  }
  for (const auto& [rest, v] : slices) {
    auto coords = dom_->coords(v);
    if (!coords) throw NotInvariant(0, "Op " + name_ + ": argument outside its domain " + format_vec(v));
    for (const auto& [j, c] : *coords) emit(rest, j, c);
  }
  return out;
}

Op Op::with_extension(const Op& ambient) const {
  if (ambient.in_ != in_ || ambient.out_ != out_) throw DimensionMismatch("Op " + name_ + ": extension legs");
  Op o = *this;
  o.ext_ = std::make_shared<const Op>(ambient);
  return o;
}

Tensor Op::apply_ext(const Tensor& t, std::size_t leg) const {
  if (!dom_) return apply(t, leg);
  if (ext_) return ext_->apply_ext(t, leg);
  std::map<std::size_t, std::size_t> at;
  for (std::size_t j = 0; j < dom_->pivots().size(); ++j) at[dom_->pivots()[j]] = j;
  std::size_t k = in_.size();
  std::map<Idx, SparseVec> slices;
  for (const auto& [idx, c] : t.terms()) {
    Idx rest(idx.begin(), idx.begin() + leg);
    rest.insert(rest.end(), idx.begin() + leg + k, idx.end());
    auto it = at.find(flat_of(t.dims(), idx, leg, k));
    if (it != at.end()) slices[rest].emplace(it->second, c);
  }
  Tensor members(t.dims());
  for (const auto& [rest, coords] : slices) {
    SparseVec v = dom_->combine(coords);
    for (const auto& [f, x] : v) {
      Idx in_idx = unflat(in_, f);
      Idx full(rest.begin(), rest.begin() + leg);
      full.insert(full.end(), in_idx.begin(), in_idx.end());
      full.insert(full.end(), rest.begin() + leg, rest.end());
      members.add(full, x);
    }
  }
  return apply(members, leg);
}

Op functional(std::string name, std::size_t n, const std::vector<Rational>& values) {
  if (values.size() != n) throw DimensionMismatch("functional: length");
  Matrix m(1, n);
  for (std::size_t i = 0; i < n; ++i) m.set(0, i, values[i]);
  return Op(std::move(name), {n}, {}, m);
}

Op element(std::string name, Dims out, const Tensor& t) {
  if (t.dims() != out) throw DimensionMismatch("element: dims");
  std::size_t rows = flat_size(out);
  return Op(std::move(name), {}, std::move(out), Matrix::from_columns(rows, {t.to_flat()}));
}

}  // namespace hocx

namespace hocx {

Subspace equalizer(const Dims& dims, const Subspace& dom, const std::function<Tensor(const Tensor&)>& f,
                   const std::function<Tensor(const Tensor&)>& g) {
  if (dom.ambient() != flat_size(dims)) throw DimensionMismatch("equalizer: ambient");
  std::vector<SparseVec> cols;
  std::size_t rows = 0;
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    Tensor b = Tensor::from_flat(dims, dom.vec(j));
    Tensor d = f(b) - g(b);
    rows = std::max(rows, flat_size(d.dims()));
    cols.push_back(d.to_flat());
  }
  Subspace k = kernel(Matrix::from_columns(rows, std::move(cols)));
  std::vector<SparseVec> vecs;
  vecs.reserve(k.dim());
  for (std::size_t j = 0; j < k.dim(); ++j) vecs.push_back(dom.combine(k.vec(j)));
  return Subspace::span(dom.ambient(), vecs);
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  std::vector<SparseVec> vecs;
  vecs.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      SparseVec v;
      for (const auto& [p, x] : a.vec(i))
        for (const auto& [q, y] : b.vec(j)) v.emplace(p * b.ambient() + q, x * y);
      vecs.push_back(std::move(v));
    }
  }
  return Subspace::span(a.ambient() * b.ambient(), vecs);
}

}  // namespace hocx
