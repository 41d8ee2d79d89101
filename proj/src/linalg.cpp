#include "hocx/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hocx {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * v);
    } else {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
  SparseVec out;
  if (a == 0) return out;
  for (const auto& [i, v] : x) out.emplace(i, a * v);
  return out;
}

SparseVec unit(std::size_t i) { return SparseVec{{i, Rational(1)}}; }

std::string format_vec(const SparseVec& v) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, x] : v) {
    if (!first) os << ", ";
    first = false;
    os << i << ':' << to_string(x);
  }
  os << '}';
  return os.str();
}

/* Matrix */

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace(i, 1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::vector<SparseVec> cols) {
  Matrix m;
  m.rows_ = rows;
  for (auto& c : cols) {
    for (auto it = c.begin(); it != c.end();) {
      if (it->first >= rows) throw DimensionMismatch("column entry out of range");
      if (it->second == 0)
        it = c.erase(it);
      else
        ++it;
    }
  }
  m.cols_ = std::move(cols);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& dense) {
  std::size_t r = dense.size();
  std::size_t c = r == 0 ? 0 : dense[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (dense[i].size() != c) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, dense[i][j]);
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Rational(0) : it->second;
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_.size()) throw DimensionMismatch("set out of range");
  if (v == 0)
    cols_[c].erase(r);
  else
    cols_[c][r] = v;
}

void Matrix::add_to(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_.size()) throw DimensionMismatch("add_to out of range");
  axpy(cols_[c], 1, SparseVec{{r, v}});
}

SparseVec Matrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, x] : v) {
    if (j >= cols_.size()) throw DimensionMismatch("apply: vector longer than matrix");
    axpy(out, x, cols_[j]);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols() != o.rows()) throw DimensionMismatch("matrix product shape");
  Matrix m(rows_, o.cols());
  for (std::size_t j = 0; j < o.cols(); ++j) m.cols_[j] = apply(o.cols_[j]);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols()) throw DimensionMismatch("matrix sum shape");
  Matrix m = *this;
  for (std::size_t j = 0; j < cols(); ++j) axpy(m.cols_[j], 1, o.cols_[j]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const Rational& a) const {
  Matrix m(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) m.cols_[j] = hocx::scaled(cols_[j], a);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) t.cols_[i].emplace(j, v);
  return t;
}

std::vector<SparseVec> Matrix::row_vectors() const {
  std::vector<SparseVec> rows(rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) rows[i].emplace(j, v);
  return rows;
}

bool Matrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_difference(const Matrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols()) return std::make_pair(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) {
    if (cols_[j] == o.cols_[j]) continue;
    SparseVec d = cols_[j];
    axpy(d, -1, o.cols_[j]);
    return std::make_pair(d.begin()->first, j);
  }
  return std::nullopt;
}

/* elimination */

namespace {

using IRow = std::vector<std::pair<std::size_t, Integer>>;

IRow to_integer_row(const SparseVec& v) {
  Integer l = 1;
  for (const auto& [i, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IRow r;
  r.reserve(v.size());
  for (const auto& [i, x] : v) r.emplace_back(i, x.get_num() * (l / x.get_den()));
  return r;
}

// Divide out the content and make the leading coefficient positive.
void make_primitive(IRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

const Integer* find_entry(const IRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// r <- a*r - b*p, where p's entry at the eliminated column is a and r's is b.
IRow combine(const IRow& r, const Integer& a, const IRow& p, const Integer& b) {
  IRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      t = a * r[i].second - b * p[j].second;
      if (t != 0) out.emplace_back(r[i].first, t);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

void eliminate(IRow& r, std::size_t col, const IRow& p) {
  const Integer* b = find_entry(r, col);
  if (b == nullptr) return;
  Integer bb = *b;
  r = combine(r, p.front().second, p, bb);
}

}  // namespace

Echelon rref(const std::vector<SparseVec>& rows, std::size_t ncols) {
  std::map<std::size_t, IRow> piv;
  std::vector<char> is_pivot(ncols, 0);
  for (const auto& v : rows) {
    if (v.empty()) continue;
    if (v.rbegin()->first >= ncols) throw DimensionMismatch("rref: entry beyond ncols");
    IRow r = to_integer_row(v);
    make_primitive(r);
    std::size_t cur = 0;
    while (true) {
      auto it = std::find_if(r.begin(), r.end(),
                             [&](const auto& e) { return e.first >= cur && is_pivot[e.first]; });
      if (it == r.end()) break;
      std::size_t c = it->first;
      eliminate(r, c, piv.at(c));
      cur = c + 1;
    }
    if (r.empty()) continue;
    std::size_t lead = r.front().first;
    is_pivot[lead] = 1;
    piv.emplace(lead, std::move(r));
  }
  // back substitution, largest pivot first
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    std::size_t p = it->first;
    for (auto jt = piv.begin(); jt != piv.end() && jt->first < p; ++jt) eliminate(jt->second, p, it->second);
  }
  Echelon e;
  for (const auto& [p, r] : piv) {
    SparseVec v;
    const Integer& lead = r.front().second;
    for (const auto& [c, x] : r) {
      Rational q(x, lead);
      q.canonicalize();
      v.emplace_hint(v.end(), c, q);
    }
    e.pivots.push_back(p);
    e.rows.push_back(std::move(v));
  }
  return e;
}

std::size_t bareiss_rank(const Matrix& m) {
  std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  auto rows = m.row_vectors();
  for (std::size_t i = 0; i < R; ++i) {
    IRow r = to_integer_row(rows[i]);
    for (auto& [j, x] : r) a[i][j] = x;
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < C && rk < R; ++c) {
    std::size_t p = rk;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        a[i][j] = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

/* Subspace */

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVec>& vecs) {
  Echelon e = rref(vecs, ambient);
  Subspace s(ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::image(const Matrix& m) {
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return span(m.rows(), cols);
}

Matrix Subspace::basis() const { return Matrix::from_columns(ambient_, basis_); }

SparseVec Subspace::combine(const SparseVec& coords) const {
  SparseVec v;
  for (const auto& [j, c] : coords) axpy(v, c, basis_.at(j));
  return v;
}

std::optional<SparseVec> Subspace::coords(const SparseVec& v) const {
  SparseVec c;
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    auto it = v.find(pivots_[j]);
    if (it != v.end()) c.emplace_hint(c.end(), j, it->second);
  }
  if (combine(c) != v) return std::nullopt;
  return c;
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) return false;
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const SparseVec& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && dim() == o.dim() && contains(o);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("intersect: ambient mismatch");
  // kernel of [A | -B]; the A-part of each kernel vector spans the intersection
  std::vector<SparseVec> cols = basis_;
  for (const auto& v : o.basis_) cols.push_back(hocx::scaled(v, -1));
  Subspace k = kernel(Matrix::from_columns(ambient_, cols));
  std::vector<SparseVec> out;
  for (const auto& kv : k.basis_) {
    SparseVec a;
    for (const auto& [j, c] : kv)
      if (j < dim()) a.emplace(j, c);
    out.push_back(combine(a));
  }
  return span(ambient_, out);
}

/* kernel / solve / restrict */

std::size_t rank(const Matrix& m) {
  if (m.cols() <= m.rows()) return rref(m.row_vectors(), m.cols()).pivots.size();
  return rref(m.transpose().row_vectors(), m.rows()).pivots.size();
}

Subspace kernel(const Matrix& m) {
  Echelon e = rref(m.row_vectors(), m.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  Subspace s(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v{{f, Rational(1)}};
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      auto it = e.rows[k].find(f);
      if (it != e.rows[k].end()) v.emplace(e.pivots[k], -it->second);
    }
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(f);
  }
  return s;
}

std::optional<SparseVec> solve(const Matrix& m, const SparseVec& b) {
  if (!b.empty() && b.rbegin()->first >= m.rows()) throw DimensionMismatch("solve: rhs length");
  auto rows = m.row_vectors();
  for (const auto& [i, x] : b) rows[i].emplace(m.cols(), x);
  Echelon e = rref(rows, m.cols() + 1);
  SparseVec x;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    auto it = e.rows[k].find(m.cols());
    if (it != e.rows[k].end()) x.emplace(e.pivots[k], it->second);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  auto rows = m.row_vectors();
  for (std::size_t i = 0; i < n; ++i) rows[i].emplace(n + i, 1);
  Echelon e = rref(rows, 2 * n);
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() >= n)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [c, x] : e.rows[k])
      if (c >= n) inv.set(e.pivots[k], c - n, x);
  return inv;
}

Matrix restrict(const Matrix& m, const Subspace& dom, const Subspace& cod) {
  if (m.cols() != dom.ambient() || m.rows() != cod.ambient())
    throw DimensionMismatch("restrict: ambient shapes do not match");
  std::vector<SparseVec> cols;
  cols.reserve(dom.dim());
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    auto c = cod.coords(m.apply(dom.vec(j)));
    if (!c) throw NotInvariant(j, "restrict: image of basis column " + std::to_string(j) + " leaves codomain");
    cols.push_back(std::move(*c));
  }
  return Matrix::from_columns(cod.dim(), std::move(cols));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
    for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
      for (const auto& [i1, x] : a.col(j1))
        for (const auto& [i2, y] : b.col(j2)) k.set(i1 * b.rows() + i2, j1 * b.cols() + j2, x * y);
  return k;
}

/* TensorIndex */

TensorIndex::TensorIndex(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  for (auto d : dims_) size_ *= d;
}

std::size_t TensorIndex::flatten(const std::vector<std::size_t>& idx) const {
  if (idx.size() != dims_.size()) throw DimensionMismatch("flatten: arity");
  std::size_t f = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= dims_[k]) throw DimensionMismatch("flatten: index out of range");
    f = f * dims_[k] + idx[k];
  }
  return f;
}

std::vector<std::size_t> TensorIndex::unflatten(std::size_t flat) const {
  if (flat >= size_) throw DimensionMismatch("unflatten: out of range");
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return idx;
}

}  // namespace hocx
