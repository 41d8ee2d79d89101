#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hocx/builders.hpp"
#include "hocx/groupoid.hpp"

#include <numeric>
#include <random>

using namespace hocx;

namespace {

using Dims4 = std::vector<std::size_t>;

void require_ok(const Report& r) {
  INFO(r.str());
  CHECK(r.ok());
}

// connected components by union-find over the morphisms
std::size_t components(const FiniteGroupoid& g) {
  std::vector<std::size_t> parent(g.n_obj());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t f = 0; f < g.n_mor(); ++f) parent[find(g.src[f])] = find(g.tgt[f]);
  std::size_t n = 0;
  for (std::size_t a = 0; a < g.n_obj(); ++a) n += find(a) == a;
  return n;
}

CyclicObject zero_object(std::size_t top) {
  CyclicObject x;
  x.top = top;
  x.dims.assign(top + 1, 0);
  x.faces.resize(top + 1);
  x.degens.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    x.t.push_back(Matrix(0, 0));
    if (n >= 1) x.faces[n].assign(n + 1, Matrix(0, 0));
    if (n < top) x.degens[n].assign(n + 1, Matrix(0, 0));
  }
  return x;
}

}  // namespace

TEST_CASE("cyclic homology of the ground field") {
  // HC_n(Q) is Q in even degrees and 0 in odd ones
  CyclicObject x = nerve_cyclic_module(trivial_groupoid(), {0}, 5);
  require_ok(verify_cyclic(x));
  CHECK(lambda_hc(x, 3).dims == Dims4{1, 0, 1, 0});
  CHECK(bicomplex_hc(x, 3).dims == Dims4{1, 0, 1, 0});
  CocyclicObject d = dual(x);
  CHECK(lambda_hcc(d, 3).dims == Dims4{1, 0, 1, 0});
  CHECK(bicomplex_hcc(d, 3).dims == Dims4{1, 0, 1, 0});
}

TEST_CASE("Z/2: each central element contributes one copy of HC(Q)") {
  FiniteGroupoid z2 = group_groupoid(cyclic_group(2));
  Dims4 sum(4, 0);
  for (std::size_t theta : {0, 1}) {
    CAPTURE(theta);
    CyclicObject x = nerve_cyclic_module(z2, {theta}, 4);
    HomologyReport a = lambda_hc(x, 3), b = bicomplex_hc(x, 3);
    CHECK(a.dims == b.dims);
    CHECK(a.dims == Dims4{1, 0, 1, 0});
    for (std::size_t n = 0; n < 4; ++n) sum[n] += a.dims[n];
  }
  // HC_n(Q[Z/2])
  CHECK(sum == Dims4{2, 0, 2, 0});
}

TEST_CASE("zero object has zero homology") {
  CyclicObject x = zero_object(4);
  require_ok(verify_cyclic(x));
  CHECK(lambda_hc(x, 3).dims == Dims4{0, 0, 0, 0});
  CHECK(bicomplex_hc(x, 3).dims == Dims4{0, 0, 0, 0});
  CHECK(lambda_hcc(dual(x), 3).dims == Dims4{0, 0, 0, 0});
}

TEST_CASE("verify_cyclic names the broken identity") {
  CyclicObject x = nerve_cyclic_module(pair_groupoid(2), identity_theta(pair_groupoid(2)), 3);
  require_ok(verify_cyclic(x));
  x.faces[2][1] = Matrix(x.dims[1], x.dims[2]);
  Report r = verify_cyclic(x);
  CHECK_FALSE(r.ok());
  CHECK(r.failed() < r.items.size());
  bool mentions = false;
  for (const auto& it : r.items)
    if (!it.pass) mentions |= it.name.find("d1") != std::string::npos;
  CHECK(mentions);
  CHECK_THROWS_AS(lambda_hc(x, 2), IdentityFailure);
  CHECK_THROWS_AS(bicomplex_hc(x, 2), IdentityFailure);
}

TEST_CASE("iso_check") {
  FiniteGroupoid p = pair_groupoid(2);
  CyclicObject x = nerve_cyclic_module(p, identity_theta(p), 2);
  std::vector<Matrix> ids;
  for (std::size_t d : x.dims) ids.push_back(Matrix::identity(d));
  require_ok(iso_check(x, x, ids));
  // flip one sign in degree 1
  ids[1].set(0, 0, Rational(-1));
  Report r = iso_check(x, x, ids);
  CHECK_FALSE(r.ok());
}

TEST_CASE("property: engines agree and HC_0 counts components") {
  std::mt19937 rng(5);
  for (int k = 0; k < 10; ++k) {
    CyclicGroupoid c = random_cyclic_groupoid(rng, 4, 8);
    CAPTURE(c.label);
    CyclicObject x = nerve_cyclic_module(c.g, c.theta, 3);
    HomologyReport a = lambda_hc(x, 2), b = bicomplex_hc(x, 2);
    CHECK(a.dims == b.dims);
    // transposition preserves ranks
    CHECK(lambda_hcc(dual(x), 2).dims == a.dims);
    CHECK(bicomplex_hcc(dual(x), 2).dims == a.dims);
    CyclicObject id = nerve_cyclic_module(c.g, identity_theta(c.g), 1);
    CHECK(lambda_hc(id, 0).dims[0] == components(c.g));
  }
}

TEST_CASE("report serialization") {
  CyclicObject x = nerve_cyclic_module(trivial_groupoid(), {0}, 3);
  HomologyReport a = lambda_hc(x, 2);
  CHECK(a.method == "lambda");
  CHECK(a.json().find("\"method\"") != std::string::npos);
  std::string table = homology_table({a, bicomplex_hc(x, 2)});
  CHECK(table.find("lambda") != std::string::npos);
  CHECK(table.find("bicomplex") != std::string::npos);
}
