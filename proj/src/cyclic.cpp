#include "hocx/cyclic.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace hocx {

unsigned worker_threads() {
  if (const char* env = std::getenv("HOCX_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

namespace {

// Runs f(0..n-1) on worker threads; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  unsigned w = std::min<std::size_t>(worker_threads(), n);
  if (w <= 1 || n < 16) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < w; ++k) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::string diff_witness(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return "shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
           std::to_string(b.rows()) + "x" + std::to_string(b.cols());
  auto d = a.first_difference(b);
  if (!d) return {};
  return "basis " + std::to_string(d->second) + ", row " + std::to_string(d->first) + ": " +
         to_string(a.at(d->first, d->second)) + " vs " + to_string(b.at(d->first, d->second));
}

void expect_eq(Report& r, const std::string& name, const Matrix& a, const Matrix& b) {
  r.add(name, a == b, diff_witness(a, b));
}

bool shape(const Matrix& m, std::size_t rows, std::size_t cols) { return m.rows() == rows && m.cols() == cols; }

std::string at(std::size_t n) { return " @" + std::to_string(n); }

Matrix power(const Matrix& m, std::size_t k) {
  Matrix p = Matrix::identity(m.cols());
  for (std::size_t i = 0; i < k; ++i) p = m * p;
  return p;
}

std::size_t span_rank(std::vector<SparseVec> vecs, std::size_t ambient) {
  return rref(vecs, ambient).pivots.size();
}

std::vector<SparseVec> columns(const Matrix& m) {
  std::vector<SparseVec> out;
  out.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.col(j).empty()) out.push_back(m.col(j));
  return out;
}

Rational sign(std::size_t i) { return (i % 2) ? Rational(-1) : Rational(1); }

// Copies block b into m at (r0, c0).
void place(Matrix& m, std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (const auto& [i, x] : b.col(j)) m.add_to(r0 + i, c0 + j, x);
}

}  // namespace

/* verification */

Report verify_cyclic(const CyclicObject& x) {
  Report r;
  r.title = "cyclic identities";
  std::size_t N = x.top;
  bool ok = x.dims.size() == N + 1 && x.faces.size() == N + 1 && x.degens.size() == N + 1 && x.t.size() == N + 1;
  std::string bad;
  for (std::size_t n = 0; ok && n <= N; ++n) {
    if (!shape(x.t[n], x.dims[n], x.dims[n])) bad = "t" + at(n);
    if (n >= 1) {
      if (x.faces[n].size() != n + 1) bad = "face count" + at(n);
      for (std::size_t i = 0; bad.empty() && i <= n; ++i)
        if (!shape(x.faces[n][i], x.dims[n - 1], x.dims[n])) bad = "d" + std::to_string(i) + at(n);
    }
    if (n < N) {
      if (x.degens[n].size() != n + 1) bad = "degeneracy count" + at(n);
      for (std::size_t j = 0; bad.empty() && j <= n; ++j)
        if (!shape(x.degens[n][j], x.dims[n + 1], x.dims[n])) bad = "s" + std::to_string(j) + at(n);
    }
    if (!bad.empty()) ok = false;
  }
  r.add("shapes", ok, bad.empty() ? "operator lists do not match top degree" : bad);
  if (!ok) return r;

  auto d = [&](std::size_t n, std::size_t i) -> const Matrix& { return x.faces[n][i]; };
  auto s = [&](std::size_t n, std::size_t j) -> const Matrix& { return x.degens[n][j]; };
  auto id = [&](std::size_t n) { return Matrix::identity(x.dims[n]); };
  auto nm = [](const char* a, std::size_t i, const char* b, std::size_t j) {
    return std::string(a) + std::to_string(i) + " " + b + std::to_string(j);
  };

  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        expect_eq(r, nm("d", i, "d", j) + " = " + nm("d", j - 1, "d", i) + at(n), d(n - 1, i) * d(n, j),
                  d(n - 1, j - 1) * d(n, i));

  for (std::size_t n = 0; n + 2 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        expect_eq(r, nm("s", i, "s", j) + " = " + nm("s", j + 1, "s", i) + at(n), s(n + 1, i) * s(n, j),
                  s(n + 1, j + 1) * s(n, i));

  // d_i s_j on degree n, s_j : n -> n+1, d_i : n+1 -> n
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= n + 1; ++i) {
        Matrix lhs = d(n + 1, i) * s(n, j);
        std::string name = nm("d", i, "s", j);
        if (i < j)
          expect_eq(r, name + " = " + nm("s", j - 1, "d", i) + at(n), lhs, s(n - 1, j - 1) * d(n, i));
        else if (i == j || i == j + 1)
          expect_eq(r, name + " = id" + at(n), lhs, id(n));
        else
          expect_eq(r, name + " = " + nm("s", j, "d", i - 1) + at(n), lhs, s(n - 1, j) * d(n, i - 1));
      }
    }
  }

  for (std::size_t n = 1; n <= N; ++n) {
    expect_eq(r, "d0 t = d" + std::to_string(n) + at(n), d(n, 0) * x.t[n], d(n, n));
    for (std::size_t i = 1; i <= n; ++i)
      expect_eq(r, "d" + std::to_string(i) + " t = t d" + std::to_string(i - 1) + at(n), d(n, i) * x.t[n],
                x.t[n - 1] * d(n, i - 1));
  }
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    expect_eq(r, "s0 t = t^2 s" + std::to_string(n) + at(n), s(n, 0) * x.t[n],
              x.t[n + 1] * x.t[n + 1] * s(n, n));
    for (std::size_t i = 1; i <= n; ++i)
      expect_eq(r, "s" + std::to_string(i) + " t = t s" + std::to_string(i - 1) + at(n), s(n, i) * x.t[n],
                x.t[n + 1] * s(n, i - 1));
  }
  for (std::size_t n = 0; n <= N; ++n) expect_eq(r, "t^(n+1) = id" + at(n), power(x.t[n], n + 1), id(n));
  return r;
}

Report verify_cocyclic(const CocyclicObject& x) {
  Report r;
  r.title = "cocyclic identities";
  std::size_t N = x.top;
  bool ok = x.dims.size() == N + 1 && x.cofaces.size() == N + 1 && x.codegens.size() == N + 1 && x.t.size() == N + 1;
  std::string bad;
  for (std::size_t n = 0; ok && n <= N; ++n) {
    if (!shape(x.t[n], x.dims[n], x.dims[n])) bad = "tau" + at(n);
    if (n < N) {
      if (x.cofaces[n].size() != n + 2) bad = "coface count" + at(n);
      for (std::size_t i = 0; bad.empty() && i <= n + 1; ++i)
        if (!shape(x.cofaces[n][i], x.dims[n + 1], x.dims[n])) bad = "delta" + std::to_string(i) + at(n);
    }
    if (n >= 1) {
      if (x.codegens[n].size() != n) bad = "codegeneracy count" + at(n);
      for (std::size_t j = 0; bad.empty() && j < n; ++j)
        if (!shape(x.codegens[n][j], x.dims[n - 1], x.dims[n])) bad = "sigma" + std::to_string(j) + at(n);
    }
    if (!bad.empty()) ok = false;
  }
  r.add("shapes", ok, bad.empty() ? "operator lists do not match top degree" : bad);
  if (!ok) return r;

  // delta(n, i) : n -> n+1; sigma(n, j) : n -> n-1
  auto dl = [&](std::size_t n, std::size_t i) -> const Matrix& { return x.cofaces[n][i]; };
  auto sg = [&](std::size_t n, std::size_t j) -> const Matrix& { return x.codegens[n][j]; };
  auto id = [&](std::size_t n) { return Matrix::identity(x.dims[n]); };
  auto nm = [](const char* a, std::size_t i, const char* b, std::size_t j) {
    return std::string(a) + std::to_string(i) + " " + b + std::to_string(j);
  };

  // relations labelled by the source degree n
  for (std::size_t n = 0; n + 2 <= N; ++n)
    for (std::size_t j = 1; j <= n + 2; ++j)
      for (std::size_t i = 0; i < j; ++i)
        expect_eq(r, nm("delta", j, "delta", i) + " = " + nm("delta", i, "delta", j - 1) + at(n),
                  dl(n + 1, j) * dl(n, i), dl(n + 1, i) * dl(n, j - 1));

  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 0; j + 1 < n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        expect_eq(r, nm("sigma", j, "sigma", i) + " = " + nm("sigma", i, "sigma", j + 1) + at(n),
                  sg(n - 1, j) * sg(n, i), sg(n - 1, i) * sg(n, j + 1));

  // sigma_j delta_i starting in degree n: delta_i : n -> n+1, sigma_j : n+1 -> n
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= n + 1; ++i) {
        Matrix lhs = sg(n + 1, j) * dl(n, i);
        std::string name = nm("sigma", j, "delta", i);
        if (i < j)
          expect_eq(r, name + " = " + nm("delta", i, "sigma", j - 1) + at(n), lhs, dl(n - 1, i) * sg(n, j - 1));
        else if (i == j || i == j + 1)
          expect_eq(r, name + " = id" + at(n), lhs, id(n));
        else
          expect_eq(r, name + " = " + nm("delta", i - 1, "sigma", j) + at(n), lhs, dl(n - 1, i - 1) * sg(n, j));
      }
    }
  }

  // tau_n delta_i with delta_i : n-1 -> n
  for (std::size_t n = 1; n <= N; ++n) {
    expect_eq(r, "tau delta0 = delta" + std::to_string(n) + at(n - 1), x.t[n] * dl(n - 1, 0), dl(n - 1, n));
    for (std::size_t i = 1; i <= n; ++i)
      expect_eq(r, "tau delta" + std::to_string(i) + " = delta" + std::to_string(i - 1) + " tau" + at(n - 1),
                x.t[n] * dl(n - 1, i), dl(n - 1, i - 1) * x.t[n - 1]);
  }
  // tau_n sigma_i with sigma_i : n+1 -> n
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    expect_eq(r, "tau sigma0 = sigma" + std::to_string(n) + " tau^2" + at(n + 1), x.t[n] * sg(n + 1, 0),
              sg(n + 1, n) * x.t[n + 1] * x.t[n + 1]);
    for (std::size_t i = 1; i <= n; ++i)
      expect_eq(r, "tau sigma" + std::to_string(i) + " = sigma" + std::to_string(i - 1) + " tau" + at(n + 1),
                x.t[n] * sg(n + 1, i), sg(n + 1, i - 1) * x.t[n + 1]);
  }
  for (std::size_t n = 0; n <= N; ++n) expect_eq(r, "tau^(n+1) = id" + at(n), power(x.t[n], n + 1), id(n));
  return r;
}

CocyclicObject dual(const CyclicObject& x) {
  CocyclicObject c;
  c.top = x.top;
  c.dims = x.dims;
  c.cofaces.resize(x.top + 1);
  c.codegens.resize(x.top + 1);
  for (std::size_t n = 0; n <= x.top; ++n) {
    c.t.push_back(x.t[n].transpose());
    if (n + 1 <= x.top)
      for (const auto& f : x.faces[n + 1]) c.cofaces[n].push_back(f.transpose());
    if (n >= 1)
      for (const auto& s : x.degens[n - 1]) c.codegens[n].push_back(s.transpose());
  }
  return c;
}

CyclicObject dual(const CocyclicObject& x) {
  CyclicObject c;
  c.top = x.top;
  c.dims = x.dims;
  c.faces.resize(x.top + 1);
  c.degens.resize(x.top + 1);
  for (std::size_t n = 0; n <= x.top; ++n) {
    c.t.push_back(x.t[n].transpose());
    if (n >= 1)
      for (const auto& f : x.cofaces[n - 1]) c.faces[n].push_back(f.transpose());
    if (n + 1 <= x.top)
      for (const auto& s : x.codegens[n + 1]) c.degens[n].push_back(s.transpose());
  }
  return c;
}

/* homology */

namespace {

void require(bool ok, const Report& r, std::size_t need, std::size_t top) {
  if (top < need)
    throw IdentityFailure("object known up to degree " + std::to_string(top) + ", degree " + std::to_string(need) +
                          " required");
  if (!ok) {
    for (const auto& it : r.items)
      if (!it.pass) throw IdentityFailure(it.name + ": " + it.witness);
  }
}

Matrix lambda_of(const Matrix& t, std::size_t n) { return (n % 2) ? t.scaled(-1) : t; }

Matrix norm_of(const Matrix& lam, std::size_t n) {
  Matrix acc = Matrix::identity(lam.cols()), p = acc;
  for (std::size_t k = 1; k <= n; ++k) {
    p = lam * p;
    acc = acc + p;
  }
  return acc;
}

}  // namespace

HomologyReport lambda_hc(const CyclicObject& x, std::size_t N) {
  Report v = verify_cyclic(x);
  require(v.ok(), v, N + 1, x.top);
  std::size_t M = N + 1;
  std::vector<std::vector<SparseVec>> U(M + 1);
  std::vector<std::size_t> rankU(M + 1), rankB(M + 2, 0);
  for (std::size_t n = 0; n <= M; ++n) {
    U[n] = columns(Matrix::identity(x.dims[n]) - lambda_of(x.t[n], n));
    rankU[n] = span_rank(U[n], x.dims[n]);
  }
  for (std::size_t n = 1; n <= M; ++n) {
    Matrix b(x.dims[n - 1], x.dims[n]);
    for (std::size_t i = 0; i <= n; ++i) b = b + x.faces[n][i].scaled(sign(i));
    std::vector<SparseVec> vecs = columns(b);
    vecs.insert(vecs.end(), U[n - 1].begin(), U[n - 1].end());
    rankB[n] = span_rank(vecs, x.dims[n - 1]) - rankU[n - 1];
  }
  HomologyReport h{"lambda", {}};
  for (std::size_t n = 0; n <= N; ++n) h.dims.push_back(x.dims[n] - rankU[n] - rankB[n] - rankB[n + 1]);
  return h;
}

namespace {

// Boundary Tot_n -> Tot_{n-1} of the truncated cyclic bicomplex; Tot_n is
// ordered by column p = 0..n with C_{n-p} in column p.
Matrix bicomplex_boundary(const CyclicObject& x, std::size_t n) {
  auto off = [&](std::size_t deg) {
    std::vector<std::size_t> o(deg + 2, 0);
    for (std::size_t p = 0; p <= deg; ++p) o[p + 1] = o[p] + x.dims[deg - p];
    return o;
  };
  auto src = off(n), dst = off(n - 1);
  Matrix D(dst.back(), src.back());
  for (std::size_t p = 0; p <= n; ++p) {
    std::size_t q = n - p;
    if (q >= 1) {
      Matrix v(x.dims[q - 1], x.dims[q]);
      std::size_t last = (p % 2) ? q - 1 : q;
      for (std::size_t i = 0; i <= last; ++i) v = v + x.faces[q][i].scaled(sign(i));
      if (p % 2) v = v.scaled(-1);
      place(D, dst[p], src[p], v);
    }
    if (p >= 1) {
      Matrix lam = lambda_of(x.t[q], q);
      Matrix h = (p % 2) ? Matrix::identity(x.dims[q]) - lam : norm_of(lam, q);
      place(D, dst[p - 1], src[p], h);
    }
  }
  return D;
}

Matrix bicomplex_coboundary(const CocyclicObject& x, std::size_t n) {
  auto off = [&](std::size_t deg) {
    std::vector<std::size_t> o(deg + 2, 0);
    for (std::size_t p = 0; p <= deg; ++p) o[p + 1] = o[p] + x.dims[deg - p];
    return o;
  };
  auto src = off(n), dst = off(n + 1);
  Matrix D(dst.back(), src.back());
  for (std::size_t p = 0; p <= n; ++p) {
    std::size_t q = n - p;
    Matrix v(x.dims[q + 1], x.dims[q]);
    std::size_t last = (p % 2) ? q : q + 1;
    for (std::size_t i = 0; i <= last; ++i) v = v + x.cofaces[q][i].scaled(sign(i));
    if (p % 2) v = v.scaled(-1);
    place(D, dst[p], src[p], v);
    Matrix lam = lambda_of(x.t[q], q);
    Matrix h = (p % 2) ? norm_of(lam, q) : Matrix::identity(x.dims[q]) - lam;
    place(D, dst[p + 1], src[p], h);
  }
  return D;
}

}  // namespace

HomologyReport bicomplex_hc(const CyclicObject& x, std::size_t N) {
  Report v = verify_cyclic(x);
  require(v.ok(), v, N + 1, x.top);
  std::vector<std::size_t> rk(N + 2, 0), tot(N + 2, 0);
  for (std::size_t n = 0; n <= N + 1; ++n)
    for (std::size_t p = 0; p <= n; ++p) tot[n] += x.dims[n - p];
  for (std::size_t n = 1; n <= N + 1; ++n) rk[n] = rank(bicomplex_boundary(x, n));
  HomologyReport h{"bicomplex", {}};
  for (std::size_t n = 0; n <= N; ++n) h.dims.push_back(tot[n] - rk[n] - rk[n + 1]);
  return h;
}

HomologyReport lambda_hcc(const CocyclicObject& x, std::size_t N) {
  Report v = verify_cocyclic(x);
  require(v.ok(), v, N + 1, x.top);
  std::vector<Matrix> K;
  for (std::size_t n = 0; n <= N; ++n)
    K.push_back(kernel(Matrix::identity(x.dims[n]) - lambda_of(x.t[n], n)).basis());
  std::vector<std::size_t> rk(N + 1, 0);
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix b(x.dims[n + 1], x.dims[n]);
    for (std::size_t i = 0; i <= n + 1; ++i) b = b + x.cofaces[n][i].scaled(sign(i));
    rk[n] = rank(b * K[n]);
  }
  HomologyReport h{"lambda", {}};
  for (std::size_t n = 0; n <= N; ++n) h.dims.push_back(K[n].cols() - rk[n] - (n ? rk[n - 1] : 0));
  return h;
}

HomologyReport bicomplex_hcc(const CocyclicObject& x, std::size_t N) {
  Report v = verify_cocyclic(x);
  require(v.ok(), v, N + 1, x.top);
  std::vector<std::size_t> rk(N + 1, 0), tot(N + 1, 0);
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t p = 0; p <= n; ++p) tot[n] += x.dims[n - p];
    rk[n] = rank(bicomplex_coboundary(x, n));
  }
  HomologyReport h{"bicomplex", {}};
  for (std::size_t n = 0; n <= N; ++n) h.dims.push_back(tot[n] - rk[n] - (n ? rk[n - 1] : 0));
  return h;
}

std::string HomologyReport::json() const {
  std::ostringstream os;
  os << "{\"method\":\"" << method << "\",\"degrees\":[";
  for (std::size_t n = 0; n < dims.size(); ++n) os << (n ? "," : "") << "{\"n\":" << n << ",\"dim\":" << dims[n] << '}';
  os << "]}";
  return os.str();
}

std::string homology_table(const std::vector<HomologyReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n";
  for (const auto& r : reports) os << std::setw(12) << r.method;
  os << '\n';
  std::size_t rows = 0;
  for (const auto& r : reports) rows = std::max(rows, r.dims.size());
  for (std::size_t n = 0; n < rows; ++n) {
    os << std::setw(4) << n;
    for (const auto& r : reports) os << std::setw(12) << (n < r.dims.size() ? std::to_string(r.dims[n]) : "-");
    os << '\n';
  }
  return os.str();
}

/* isomorphisms */

namespace {

template <class F>
void iso_common(Report& r, const std::vector<std::size_t>& xd, const std::vector<std::size_t>& yd,
                const std::vector<Matrix>& maps, std::size_t top, F&& commute) {
  if (maps.size() != top + 1 || xd.size() != yd.size()) {
    r.fail("shapes", "expected " + std::to_string(top + 1) + " maps");
    return;
  }
  bool shapes = true;
  for (std::size_t n = 0; n <= top; ++n) shapes = shapes && shape(maps[n], yd[n], xd[n]);
  r.add("shapes", shapes, "map dimensions do not match the objects");
  if (!shapes) return;
  for (std::size_t n = 0; n <= top; ++n) {
    bool bij = xd[n] == yd[n] && rank(maps[n]) == xd[n];
    r.add("bijective" + at(n), bij,
          "dims " + std::to_string(xd[n]) + " -> " + std::to_string(yd[n]) + ", rank " + std::to_string(rank(maps[n])));
  }
  commute();
}

}  // namespace

Report iso_check(const CyclicObject& x, const CyclicObject& y, const std::vector<Matrix>& f) {
  Report r;
  r.title = "cyclic isomorphism";
  if (x.top != y.top) {
    r.fail("degrees", "top degrees differ");
    return r;
  }
  iso_common(r, x.dims, y.dims, f, x.top, [&] {
    for (std::size_t n = 0; n <= x.top; ++n) {
      expect_eq(r, "f t = t f" + at(n), f[n] * x.t[n], y.t[n] * f[n]);
      if (n >= 1)
        for (std::size_t i = 0; i <= n; ++i)
          expect_eq(r, "f d" + std::to_string(i) + " = d" + std::to_string(i) + " f" + at(n), f[n - 1] * x.faces[n][i],
                    y.faces[n][i] * f[n]);
      if (n < x.top)
        for (std::size_t j = 0; j <= n; ++j)
          expect_eq(r, "f s" + std::to_string(j) + " = s" + std::to_string(j) + " f" + at(n), f[n + 1] * x.degens[n][j],
                    y.degens[n][j] * f[n]);
    }
  });
  return r;
}

Report iso_check(const CocyclicObject& x, const CocyclicObject& y, const std::vector<Matrix>& f) {
  Report r;
  r.title = "cocyclic isomorphism";
  if (x.top != y.top) {
    r.fail("degrees", "top degrees differ");
    return r;
  }
  iso_common(r, x.dims, y.dims, f, x.top, [&] {
    for (std::size_t n = 0; n <= x.top; ++n) {
      expect_eq(r, "f tau = tau f" + at(n), f[n] * x.t[n], y.t[n] * f[n]);
      if (n < x.top)
        for (std::size_t i = 0; i <= n + 1; ++i)
          expect_eq(r, "f delta" + std::to_string(i) + " = delta" + std::to_string(i) + " f" + at(n),
                    f[n + 1] * x.cofaces[n][i], y.cofaces[n][i] * f[n]);
      if (n >= 1)
        for (std::size_t j = 0; j < n; ++j)
          expect_eq(r, "f sigma" + std::to_string(j) + " = sigma" + std::to_string(j) + " f" + at(n),
                    f[n - 1] * x.codegens[n][j], y.codegens[n][j] * f[n]);
    }
  });
  return r;
}

/* realization */

Matrix realize(const Realized& dom, const Realized& cod, const std::function<Tensor(const Tensor&)>& f,
               const std::string& what) {
  std::vector<SparseVec> cols(dom.space.dim());
  parallel_for(dom.space.dim(), [&](std::size_t j) {
    Tensor img = f(Tensor::from_flat(dom.legs, dom.space.vec(j)));
    if (img.dims() != cod.legs) throw DimensionMismatch(what + ": image has the wrong legs");
    auto c = cod.space.coords(img.to_flat());
    if (!c) throw NotInvariant(j, what + ": image of basis vector " + std::to_string(j) + " leaves the target space");
    cols[j] = std::move(*c);
  });
  return Matrix::from_columns(cod.space.dim(), std::move(cols));
}

CocyclicObject realize_cocyclic(const AmbientCocyclic& a) {
  CocyclicObject x;
  std::size_t N = a.spaces.size() - 1;
  x.top = N;
  x.cofaces.resize(N + 1);
  x.codegens.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    x.dims.push_back(a.spaces[n].space.dim());
    std::string deg = at(n);
    x.t.push_back(realize(a.spaces[n], a.spaces[n], [&](const Tensor& v) { return a.tau(n, v); }, "tau" + deg));
    if (n < N)
      for (std::size_t i = 0; i <= n + 1; ++i)
        x.cofaces[n].push_back(realize(a.spaces[n], a.spaces[n + 1], [&](const Tensor& v) { return a.coface(n, i, v); },
                                       "delta" + std::to_string(i) + deg));
    for (std::size_t j = 0; j < n; ++j)
      x.codegens[n].push_back(realize(a.spaces[n], a.spaces[n - 1], [&](const Tensor& v) { return a.codegen(n, j, v); },
                                      "sigma" + std::to_string(j) + deg));
  }
  return x;
}

CyclicObject realize_cyclic(const AmbientCyclic& a) {
  CyclicObject x;
  std::size_t N = a.spaces.size() - 1;
  x.top = N;
  x.faces.resize(N + 1);
  x.degens.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    x.dims.push_back(a.spaces[n].space.dim());
    std::string deg = at(n);
    x.t.push_back(realize(a.spaces[n], a.spaces[n], [&](const Tensor& v) { return a.tau(n, v); }, "t" + deg));
    if (n >= 1)
      for (std::size_t i = 0; i <= n; ++i)
        x.faces[n].push_back(realize(a.spaces[n], a.spaces[n - 1], [&](const Tensor& v) { return a.face(n, i, v); },
                                     "d" + std::to_string(i) + deg));
    if (n < N)
      for (std::size_t j = 0; j <= n; ++j)
        x.degens[n].push_back(realize(a.spaces[n], a.spaces[n + 1], [&](const Tensor& v) { return a.degen(n, j, v); },
                                      "s" + std::to_string(j) + deg));
  }
  return x;
}

}  // namespace hocx
