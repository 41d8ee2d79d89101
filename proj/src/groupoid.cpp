#include "hocx/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hocx {

namespace {

Tensor lift(const Tensor& x, const Dims& out, const std::function<Idx(const Idx&)>& f) {
  Tensor r(out);
  for (const auto& [i, c] : x.terms()) r.add(f(i), c);
  return r;
}

Idx to_idx(const std::vector<std::size_t>& v) { return Idx(v.begin(), v.end()); }

std::string tuple_str(const FiniteGroupoid& g, const Idx& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + g.morphisms[t[i]];
  return s + "]";
}

Dims nerve_legs(const FiniteGroupoid& g, std::size_t n) { return n == 0 ? Dims{g.n_obj()} : repeat(g.n_mor(), n); }

void require_cyclic(const FiniteGroupoid& g, const Theta& theta) {
  Report r = check_cyclic(g, theta);
  if (!r.ok()) throw NotCyclic(r);
}

}  // namespace

std::size_t FiniteGroupoid::mul(std::size_t g, std::size_t h) const {
  if (!composable(g, h) || comp[g][h] == npos)
    throw std::logic_error("groupoid " + name + ": " + morphisms[g] + " " + morphisms[h] + " not composable");
  return comp[g][h];
}

std::size_t FiniteGroupoid::product(const std::vector<std::size_t>& gs) const {
  std::size_t p = gs.back();
  for (std::size_t i = gs.size() - 1; i-- > 0;) p = mul(gs[i], p);
  return p;
}

FiniteGroupoid groupoid_from_table(std::string name, std::vector<std::string> objects,
                                   std::vector<std::string> morphisms, std::vector<std::size_t> src,
                                   std::vector<std::size_t> tgt,
                                   const std::vector<std::array<std::size_t, 3>>& comp) {
  FiniteGroupoid g;
  g.name = std::move(name);
  g.objects = std::move(objects);
  g.morphisms = std::move(morphisms);
  g.src = std::move(src);
  g.tgt = std::move(tgt);
  std::size_t no = g.n_obj(), nm = g.n_mor();
  if (g.src.size() != nm || g.tgt.size() != nm) throw GroupoidError("source/target lists do not match morphisms");
  for (std::size_t f = 0; f < nm; ++f)
    if (g.src[f] >= no || g.tgt[f] >= no) throw GroupoidError("morphism " + g.morphisms[f] + ": unknown object");
  g.comp.assign(nm, std::vector<std::size_t>(nm, npos));
  for (const auto& [a, b, c] : comp) {
    if (a >= nm || b >= nm || c >= nm) throw GroupoidError("composition table: unknown morphism");
    if (g.comp[a][b] != npos && g.comp[a][b] != c)
      throw GroupoidError("composition table: two values for " + g.morphisms[a] + " " + g.morphisms[b]);
    g.comp[a][b] = c;
  }

  g.ident.assign(no, npos);
  for (std::size_t a = 0; a < no; ++a)
    for (std::size_t e = 0; e < nm && g.ident[a] == npos; ++e) {
      if (g.src[e] != a || g.tgt[e] != a) continue;
      bool ok = true;
      for (std::size_t f = 0; f < nm && ok; ++f) {
        if (g.tgt[f] == a && g.comp[e][f] != f) ok = false;
        if (g.src[f] == a && g.comp[f][e] != f) ok = false;
      }
      if (ok) g.ident[a] = e;
    }

  g.inv.assign(nm, npos);
  for (std::size_t f = 0; f < nm; ++f) {
    std::size_t it = g.ident[g.tgt[f]], is = g.ident[g.src[f]];
    if (it == npos || is == npos) continue;
    for (std::size_t h = 0; h < nm; ++h)
      if (g.src[h] == g.tgt[f] && g.tgt[h] == g.src[f] && g.comp[f][h] == it && g.comp[h][f] == is) {
        g.inv[f] = h;
        break;
      }
  }
  return g;
}

Report check_groupoid(const FiniteGroupoid& g) {
  Report r;
  r.title = "groupoid " + g.name;
  std::size_t nm = g.n_mor();
  std::string w;
  for (std::size_t a = 0; a < nm && w.empty(); ++a)
    for (std::size_t b = 0; b < nm && w.empty(); ++b)
      if ((g.comp[a][b] != npos) != g.composable(a, b))
        w = g.morphisms[a] + " " + g.morphisms[b] + (g.composable(a, b) ? " missing" : " defined but not composable");
  r.add("composition defined exactly on composable pairs", w.empty(), w);
  w.clear();
  for (std::size_t a = 0; a < nm && w.empty(); ++a)
    for (std::size_t b = 0; b < nm && w.empty(); ++b) {
      std::size_t c = g.comp[a][b];
      if (c != npos && (g.src[c] != g.src[b] || g.tgt[c] != g.tgt[a])) w = g.morphisms[a] + " " + g.morphisms[b];
    }
  r.add("composite has source s(h) and target t(g)", w.empty(), w);
  w.clear();
  for (std::size_t a = 0; a < nm && w.empty(); ++a)
    for (std::size_t b = 0; b < nm && w.empty(); ++b)
      for (std::size_t c = 0; c < nm && w.empty(); ++c) {
        std::size_t ab = g.comp[a][b], bc = g.comp[b][c];
        if (ab == npos || bc == npos) continue;
        if (g.comp[ab][c] != g.comp[a][bc]) w = tuple_str(g, {uint32_t(a), uint32_t(b), uint32_t(c)});
      }
  r.add("associative", w.empty(), w);
  w.clear();
  for (std::size_t a = 0; a < g.n_obj() && w.empty(); ++a)
    if (g.ident[a] == npos) w = g.objects[a];
  r.add("identities", w.empty(), w);
  w.clear();
  for (std::size_t f = 0; f < nm && w.empty(); ++f)
    if (g.inv[f] == npos) w = g.morphisms[f];
  r.add("inverses", w.empty(), w);
  return r;
}

FiniteGroupoid trivial_groupoid() { return group_groupoid(trivial_group()); }

FiniteGroupoid group_groupoid(const FiniteGroup& h) {
  std::size_t n = h.order();
  std::vector<std::string> mor(n);
  for (std::size_t i = 0; i < n; ++i) mor[i] = "g" + std::to_string(i);
  std::vector<std::array<std::size_t, 3>> comp;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comp.push_back({a, b, h.mul[a][b]});
  return groupoid_from_table(h.name, {"*"}, mor, std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0),
                             comp);
}

FiniteGroupoid pair_groupoid(std::size_t k) {
  std::vector<std::string> obj(k), mor(k * k);
  std::vector<std::size_t> src(k * k), tgt(k * k);
  for (std::size_t i = 0; i < k; ++i) obj[i] = std::to_string(i);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      mor[i * k + j] = "(" + obj[i] + "<-" + obj[j] + ")";
      src[i * k + j] = j;
      tgt[i * k + j] = i;
    }
  std::vector<std::array<std::size_t, 3>> comp;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) comp.push_back({i * k + j, j * k + l, i * k + l});
  return groupoid_from_table("pair(" + std::to_string(k) + ")", obj, mor, src, tgt, comp);
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  std::size_t ao = a.n_obj(), bo = b.n_obj(), am = a.n_mor(), bm = b.n_mor();
  std::vector<std::string> obj(ao * bo), mor(am * bm);
  std::vector<std::size_t> src(am * bm), tgt(am * bm);
  for (std::size_t x = 0; x < ao; ++x)
    for (std::size_t y = 0; y < bo; ++y) obj[x * bo + y] = a.objects[x] + "." + b.objects[y];
  for (std::size_t f = 0; f < am; ++f)
    for (std::size_t h = 0; h < bm; ++h) {
      mor[f * bm + h] = a.morphisms[f] + "." + b.morphisms[h];
      src[f * bm + h] = a.src[f] * bo + b.src[h];
      tgt[f * bm + h] = a.tgt[f] * bo + b.tgt[h];
    }
  std::vector<std::array<std::size_t, 3>> comp;
  for (std::size_t f = 0; f < am; ++f)
    for (std::size_t f2 = 0; f2 < am; ++f2) {
      if (a.comp[f][f2] == npos) continue;
      for (std::size_t h = 0; h < bm; ++h)
        for (std::size_t h2 = 0; h2 < bm; ++h2)
          if (b.comp[h][h2] != npos) comp.push_back({f * bm + h, f2 * bm + h2, a.comp[f][f2] * bm + b.comp[h][h2]});
    }
  return groupoid_from_table(a.name + "x" + b.name, obj, mor, src, tgt, comp);
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  std::size_t ao = a.n_obj(), am = a.n_mor();
  std::vector<std::string> obj, mor;
  std::vector<std::size_t> src(a.src), tgt(a.tgt);
  for (const auto& o : a.objects) obj.push_back("a" + o);
  for (const auto& o : b.objects) obj.push_back("b" + o);
  for (const auto& m : a.morphisms) mor.push_back("a" + m);
  for (const auto& m : b.morphisms) mor.push_back("b" + m);
  for (std::size_t f = 0; f < b.n_mor(); ++f) {
    src.push_back(b.src[f] + ao);
    tgt.push_back(b.tgt[f] + ao);
  }
  std::vector<std::array<std::size_t, 3>> comp;
  for (std::size_t f = 0; f < am; ++f)
    for (std::size_t h = 0; h < am; ++h)
      if (a.comp[f][h] != npos) comp.push_back({f, h, a.comp[f][h]});
  for (std::size_t f = 0; f < b.n_mor(); ++f)
    for (std::size_t h = 0; h < b.n_mor(); ++h)
      if (b.comp[f][h] != npos) comp.push_back({f + am, h + am, b.comp[f][h] + am});
  return groupoid_from_table(a.name + "+" + b.name, obj, mor, src, tgt, comp);
}

Theta identity_theta(const FiniteGroupoid& g) { return g.ident; }

Theta product_theta(const FiniteGroupoid& a, const Theta& ta, const FiniteGroupoid& b, const Theta& tb) {
  Theta t(a.n_obj() * b.n_obj());
  for (std::size_t x = 0; x < a.n_obj(); ++x)
    for (std::size_t y = 0; y < b.n_obj(); ++y) t[x * b.n_obj() + y] = ta[x] * b.n_mor() + tb[y];
  return t;
}

Theta union_theta(const FiniteGroupoid& a, const Theta& ta, const Theta& tb) {
  Theta t(ta);
  for (std::size_t m : tb) t.push_back(m + a.n_mor());
  return t;
}

Report check_cyclic(const FiniteGroupoid& g, const Theta& theta) {
  Report r;
  r.title = "cyclic structure on " + g.name;
  std::string w;
  if (theta.size() != g.n_obj()) w = "theta has " + std::to_string(theta.size()) + " entries";
  for (std::size_t a = 0; a < theta.size() && w.empty(); ++a)
    if (theta[a] >= g.n_mor() || g.src[theta[a]] != a || g.tgt[theta[a]] != a) w = g.objects[a];
  r.add("theta_A in Mor(A, A)", w.empty(), w);
  if (!w.empty()) return r;
  std::vector<std::string> bad;
  for (std::size_t f = 0; f < g.n_mor(); ++f) {
    std::size_t a = g.src[f], b = g.tgt[f];
    if (g.comp[f][theta[a]] == npos || g.comp[f][theta[a]] != g.comp[theta[b]][f]) bad.push_back(g.morphisms[f]);
  }
  std::string all;
  for (const auto& b : bad) all += (all.empty() ? "" : ", ") + b;
  r.add("f theta_A = theta_B f", bad.empty(), all);
  return r;
}

CyclicGroupoid random_cyclic_groupoid(std::mt19937& rng, std::size_t max_obj, std::size_t max_mor) {
  static const std::vector<FiniteGroup> groups{trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                               klein_group(),   symmetric_group3(), cyclic_group(5), cyclic_group(6)};
  std::size_t obj = 0, mor = 0;
  bool use_id = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  CyclicGroupoid out;
  bool first = true;
  for (;;) {
    std::vector<std::pair<std::size_t, std::size_t>> options;  // (k, group index)
    for (std::size_t k = 1; obj + k <= max_obj; ++k)
      for (std::size_t h = 0; h < groups.size(); ++h)
        if (mor + k * k * groups[h].order() <= max_mor) options.emplace_back(k, h);
    if (options.empty()) break;
    auto [k, h] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    const FiniteGroup& grp = groups[h];
    FiniteGroupoid pk = pair_groupoid(k), gg = group_groupoid(grp);
    std::size_t z = 0;
    if (!use_id) {
      std::vector<std::size_t> c = grp.center();
      z = c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
    }
    FiniteGroupoid comp = product_groupoid(pk, gg);
    Theta tc = product_theta(pk, identity_theta(pk), gg, Theta{z});
    std::string lbl = "pair(" + std::to_string(k) + ")x" + grp.name + (use_id ? "" : "[z=g" + std::to_string(z) + "]");
    if (first) {
      out = {comp, tc, lbl};
      first = false;
    } else {
      out.theta = union_theta(out.g, out.theta, tc);
      out.g = disjoint_union(out.g, comp);
      out.label += " + " + lbl;
    }
    obj += k;
    mor += k * k * grp.order();
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;
  }
  out.g.name = out.label;
  return out;
}

std::vector<std::vector<std::size_t>> nerve_tuples(const FiniteGroupoid& g, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    for (std::size_t a = 0; a < g.n_obj(); ++a) out.push_back({a});
    return out;
  }
  std::vector<std::size_t> cur;
  std::function<void()> rec = [&]() {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t f = 0; f < g.n_mor(); ++f)
      if (cur.empty() || g.src[cur.back()] == g.tgt[f]) {
        cur.push_back(f);
        rec();
        cur.pop_back();
      }
  };
  rec();
  return out;
}

Realized nerve_space(const FiniteGroupoid& g, std::size_t n) {
  Dims legs = nerve_legs(g, n);
  std::vector<SparseVec> vecs;
  for (const auto& t : nerve_tuples(g, n)) vecs.push_back(Tensor::basis(legs, to_idx(t)).to_flat());
  return {legs, Subspace::span(flat_size(legs), vecs)};
}

CyclicObject nerve_cyclic_module(const FiniteGroupoid& g, const Theta& theta, std::size_t top) {
  require_cyclic(g, theta);
  AmbientCyclic a;
  for (std::size_t n = 0; n <= top; ++n) a.spaces.push_back(nerve_space(g, n));
  a.face = [&g](std::size_t n, std::size_t i, const Tensor& x) {
    return lift(x, nerve_legs(g, n - 1), [&](const Idx& t) -> Idx {
      if (n == 1) return {uint32_t(i == 0 ? g.src[t[0]] : g.tgt[t[0]])};
      Idx r;
      if (i == 0) return Idx(t.begin() + 1, t.end());
      if (i == n) return Idx(t.begin(), t.end() - 1);
      r.assign(t.begin(), t.begin() + (i - 1));
      r.push_back(uint32_t(g.mul(t[i - 1], t[i])));
      r.insert(r.end(), t.begin() + i + 1, t.end());
      return r;
    });
  };
  a.degen = [&g](std::size_t n, std::size_t j, const Tensor& x) {
    return lift(x, nerve_legs(g, n + 1), [&](const Idx& t) -> Idx {
      if (n == 0) return {uint32_t(g.ident[t[0]])};
      Idx r(t);
      if (j == 0)
        r.insert(r.begin(), uint32_t(g.ident[g.tgt[t[0]]]));
      else
        r.insert(r.begin() + j, uint32_t(g.ident[g.src[t[j - 1]]]));
      return r;
    });
  };
  a.tau = [&g, &theta](std::size_t n, const Tensor& x) {
    if (n == 0) return x;
    return lift(x, nerve_legs(g, n), [&](const Idx& t) -> Idx {
      std::vector<std::size_t> gs(t.begin(), t.end());
      std::size_t head = g.mul(theta[g.src[t.back()]], g.inv[g.product(gs)]);
      Idx r{uint32_t(head)};
      r.insert(r.end(), t.begin(), t.end() - 1);
      return r;
    });
  };
  return realize_cyclic(a);
}

RightXHopf groupoid_xhopf(const FiniteGroupoid& g) {
  std::size_t nm = g.n_mor(), no = g.n_obj();
  RightBicoalgebroid b;
  b.name = "groupoid " + g.name;
  b.B = Coalgebra::grouplike(nm);
  b.C = Coalgebra::grouplike(no);
  b.alpha = Op::from_fn("s", {nm}, {no}, [&](const Idx& i) { return basis_vec(no, g.src[i[0]]); });
  b.beta = Op::from_fn("t", {nm}, {no}, [&](const Idx& i) { return basis_vec(no, g.tgt[i[0]]); });
  b.eta = Op::from_fn("Id", {no}, {nm}, [&](const Idx& i) { return basis_vec(nm, g.ident[i[0]]); });
  Op mu = Op::from_fn("mu", {nm, nm}, {nm}, [&](const Idx& i) {
    return g.composable(i[0], i[1]) ? basis_vec(nm, g.mul(i[0], i[1])) : Tensor({nm});
  });
  b.mu = restricted(mu, product_space(b).space);
  return make_right_xhopf(b);
}

SaydRL theta_sayd(const RightXHopf& b, const FiniteGroupoid& g, const Theta& theta) {
  std::size_t nm = g.n_mor(), no = g.n_obj();
  SaydRL m;
  m.name = "theta C over " + g.name;
  m.over = b;
  m.dim = no;
  m.right_c = Op::from_fn("rho_C", {no}, {no, no}, [&](const Idx& i) { return Tensor::basis({no, no}, {i[0], i[0]}); });
  Op act = Op::from_fn("act", {no, nm}, {no}, [&](const Idx& i) { return basis_vec(no, g.src[i[1]]); });
  m.action = restricted(act, action_domain(b, no, m.right_c).space);
  m.coaction = Op::from_fn("theta", {no}, {nm, no},
                           [&](const Idx& i) { return Tensor::basis({nm, no}, {uint32_t(theta[i[0]]), i[0]}); });
  return m;
}

namespace {

// x in B^{k} (x) rest -> B^{k} (x) (b0(2) ... b(k-1)(2)) (x) rest
Tensor product_coaction(const RightBicoalgebroid& b, const Tensor& x, std::size_t k) {
  const Coalgebra& B = b.B;
  Tensor t = x;
  for (std::size_t i = 0; i < k; ++i) t = B.delta().apply(t, 2 * i);
  // (b0', b0'', b1', b1'', ...) -> (b0', b1', ..., b0'', b1'', ..., rest)
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < k; ++i) perm.push_back(2 * i);
  for (std::size_t i = 0; i < k; ++i) perm.push_back(2 * i + 1);
  for (std::size_t i = 2 * k; i < t.legs(); ++i) perm.push_back(i);
  t = permute(t, perm);
  for (std::size_t i = 1; i < k; ++i) t = b.mu.apply_ext(t, k);
  return t;
}

std::vector<std::vector<std::size_t>> coefficient_tuples(const FiniteGroupoid& g, const Theta& theta, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (auto t : nerve_tuples(g, n + 1)) {
    std::size_t c = g.tgt[t[0]];
    if (g.src[t.back()] == c && g.product(t) == theta[c]) {
      t.push_back(c);
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

Realized coefficient_space(const RightXHopf& bx, const SaydRL& m, const FiniteGroupoid& g, const Theta& theta,
                           std::size_t n) {
  const RightBicoalgebroid& b = bx.base;
  std::size_t bd = b.B.dim();
  Dims blegs = repeat(bd, n + 1);
  std::vector<Junction> js(n, Junction{coaction_right(b), coaction_left(b)});
  Subspace chain = n == 0 ? Subspace::full(bd) : iterated_cotensor(blegs, js);
  Dims legs = concat(blegs, {m.dim});
  Subspace dom = tensor_subspace(chain, Subspace::full(m.dim));
  Subspace eq = equalizer(legs, dom, [&](const Tensor& x) { return product_coaction(b, x, n + 1); },
                          [&](const Tensor& x) { return m.coaction.apply(x, n + 1); });
  std::vector<SparseVec> vecs;
  for (const auto& t : coefficient_tuples(g, theta, n)) vecs.push_back(Tensor::basis(legs, to_idx(t)).to_flat());
  Subspace expect = Subspace::span(flat_size(legs), vecs);
  if (!(eq == expect))
    throw DimensionMismatch("coefficient space degree " + std::to_string(n) + ": realized dim " +
                            std::to_string(eq.dim()) + ", tuple count " + std::to_string(expect.dim()));
  return {legs, eq};
}

CyclicObject coefficient_cyclic_module(const RightXHopf& bx, const SaydRL& m, const FiniteGroupoid& g,
                                       const Theta& theta, std::size_t top) {
  require_cyclic(g, theta);
  const RightBicoalgebroid& b = bx.base;
  const Coalgebra& B = b.B;
  AmbientCyclic a;
  for (std::size_t n = 0; n <= top; ++n) a.spaces.push_back(coefficient_space(bx, m, g, theta, n));
  // [g0, ..., gn, c] -> [gn, g0, ..., g(n-1), c . gn^-1], with gn^-1 from nu^-1(gn (x) Id_t(gn))
  auto rotate = [&](std::size_t n, const Tensor& x) {
    Tensor t = B.delta().apply(B.delta().apply(x, n), n);  // .. a b d c
    t = b.eta.apply(b.beta.apply(t, n + 2), n + 2);
    t = bx.nu_inv.apply(t, n + 1);  // .. a b' b^-1 c
    t = B.eps().apply(t, n + 1);    // .. a g^-1 c
    t = m.action.apply(move_leg(t, n + 2, n + 1), n + 1);
    return move_leg(t, n, 0);
  };
  a.face = [&, rotate](std::size_t n, std::size_t i, const Tensor& x) {
    if (i < n) return b.mu.apply_ext(x, i);
    return b.mu.apply_ext(rotate(n, x), 0);
  };
  a.degen = [&](std::size_t, std::size_t j, const Tensor& x) {
    Tensor t = B.delta().apply(x, j);
    return b.eta.apply(b.alpha.apply(t, j + 1), j + 1);
  };
  a.tau = rotate;
  return realize_cyclic(a);
}

ComparisonIso comparison_iso(const FiniteGroupoid& g, const Theta& theta, std::size_t top) {
  require_cyclic(g, theta);
  RightXHopf b = groupoid_xhopf(g);
  SaydRL m = theta_sayd(b, g, theta);
  ComparisonIso out;
  out.coefficients = coefficient_cyclic_module(b, m, g, theta, top);
  out.nerve = nerve_cyclic_module(g, theta, top);
  Report& r = out.report;
  r.title = "comparison isomorphism for " + g.name;
  for (std::size_t n = 0; n <= top; ++n) {
    Realized cs = coefficient_space(b, m, g, theta, n), ns = nerve_space(g, n);
    out.forward.push_back(realize(cs, ns, [&](const Tensor& x) {
      return lift(x, ns.legs, [&](const Idx& t) -> Idx {
        if (n == 0) return {t[1]};
        return Idx(t.begin() + 1, t.end() - 1);
      });
    }, "I"));
    out.backward.push_back(realize(ns, cs, [&](const Tensor& x) {
      return lift(x, cs.legs, [&](const Idx& t) -> Idx {
        if (n == 0) return {uint32_t(theta[t[0]]), t[0]};
        std::vector<std::size_t> gs(t.begin(), t.end());
        std::size_t c = g.src[t.back()];
        Idx r{uint32_t(g.mul(theta[c], g.inv[g.product(gs)]))};
        r.insert(r.end(), t.begin(), t.end());
        r.push_back(uint32_t(c));
        return r;
      });
    }, "I^-1"));
  }
  r.merge(iso_check(out.coefficients, out.nerve, out.forward));
  for (std::size_t n = 0; n <= top; ++n) {
    std::string d = " in degree " + std::to_string(n);
    std::size_t dn = out.forward[n].cols();
    r.add("I^-1 I = id" + d, out.backward[n] * out.forward[n] == Matrix::identity(dn));
    r.add("I I^-1 = id" + d, out.forward[n] * out.backward[n] == Matrix::identity(out.forward[n].rows()));
  }
  return out;
}

WeakHopf groupoid_algebra(const FiniteGroupoid& g) {
  std::size_t nm = g.n_mor();
  WeakHopf w;
  w.name = "Q[" + g.name + "]";
  w.coalg = Coalgebra::grouplike(nm);
  w.mul = Op::from_fn("mul", {nm, nm}, {nm}, [&](const Idx& i) {
    return g.composable(i[0], i[1]) ? basis_vec(nm, g.mul(i[0], i[1])) : Tensor({nm});
  });
  w.unit = Tensor({nm});
  for (std::size_t a = 0; a < g.n_obj(); ++a) w.unit.add({uint32_t(g.ident[a])}, Rational(1));
  w.antipode = Op::from_fn("S", {nm}, {nm}, [&](const Idx& i) { return basis_vec(nm, g.inv[i[0]]); });
  return w;
}

}  // namespace hocx
