#ifndef HOCX_XHOPF_HPP
#define HOCX_XHOPF_HPP

#include "hocx/group.hpp"
#include "hocx/identity.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hocx {

// Ops: alpha, beta {K} -> {C}; mu {K, K} -> {K} restricted to K box_C K;
// eta {C} -> {K}.
struct LeftBicoalgebroid {
  std::string name;
  Coalgebra K, C;
  Op alpha, beta, mu, eta;
};

struct RightBicoalgebroid {
  std::string name;
  Coalgebra B, C;
  Op alpha, beta, mu, eta;
};

// Left: h -> alpha(h1) (x) h2 and h -> h2 (x) beta(h1).
Op coaction_left(const LeftBicoalgebroid& k);
Op coaction_right(const LeftBicoalgebroid& k);
// Right: b -> beta(b2) (x) b1 and b -> b1 (x) alpha(b2).
Op coaction_left(const RightBicoalgebroid& b);
Op coaction_right(const RightBicoalgebroid& b);

// K box_C K with the coactions above.
Realized product_space(const LeftBicoalgebroid& k);
Realized product_space(const RightBicoalgebroid& b);
// K box_{C_cop} K, both coactions through beta: k -> k1 (x) beta(k2) on the
// first factor, k -> beta(k1) (x) k2 on the second.
Realized galois_codomain(const LeftBicoalgebroid& k);
Realized galois_codomain(const RightBicoalgebroid& b);

Report check_left_bicoalgebroid(const LeftBicoalgebroid& k);
Report check_right_bicoalgebroid(const RightBicoalgebroid& b);

// k (x) k' -> k k'1 (x) k'2, resp. b (x) b' -> b1 (x) b2 b', as a matrix
// between the bases of product_space and galois_codomain.
Matrix galois_nu_left(const LeftBicoalgebroid& k);
Matrix galois_nu_right(const RightBicoalgebroid& b);

struct NotXHopf : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Matrix invert_nu(const Matrix& nu, const Subspace& dom, const Subspace& cod);

// A bicoalgebroid together with its realized Galois map and inverse.
// nu is an op on dom, nu_inv an op on cod, both in ambient coordinates.
struct LeftXHopf {
  LeftBicoalgebroid base;
  Realized dom, cod;
  Matrix nu_m, nu_inv_m;
  Op nu, nu_inv;
};

struct RightXHopf {
  RightBicoalgebroid base;
  Realized dom, cod;
  Matrix nu_m, nu_inv_m;
  Op nu, nu_inv;
};

LeftXHopf make_left_xhopf(const LeftBicoalgebroid& k);
RightXHopf make_right_xhopf(const RightBicoalgebroid& b);
// Replace the inverse Galois map by a given matrix on the codomain basis.
LeftXHopf with_nu_inverse(LeftXHopf k, const Matrix& inv);
RightXHopf with_nu_inverse(RightXHopf b, const Matrix& inv);

// Lemma identities: source/target against unit and product (4 items), the
// five nu / nu^-1 identities, and the comodule-map property of nu^-1.
Report lemma_suite_left(const LeftXHopf& k);
Report lemma_suite_right(const RightXHopf& b);

// C (x) C_cop; basis index c * dim C + c'.
LeftBicoalgebroid coenveloping_left_data(const Coalgebra& c);
RightBicoalgebroid coenveloping_right_data(const Coalgebra& c);
LeftXHopf coenveloping_left(const Coalgebra& c);
RightXHopf coenveloping_right(const Coalgebra& c);

struct HopfAlgebra {
  std::string name;
  Coalgebra coalg;
  Op mul;    // {d, d} -> {d}
  Tensor unit;
  std::optional<Op> antipode;
  std::size_t dim() const { return coalg.dim(); }
};

// mul entries (i, j, k, c): e_i e_j contains c e_k.
HopfAlgebra make_hopf(std::string name, const Coalgebra& coalg,
                      const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& mul,
                      std::size_t unit_index, std::optional<Matrix> antipode);

// Bialgebra axioms, then both antipode identities (missing antipode fails).
Report check_hopf(const HopfAlgebra& h);

HopfAlgebra group_algebra(const FiniteGroup& g);
// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Delta x = x (x) 1 + g (x) x.
HopfAlgebra sweedler_h4();
// Monoid algebra of {1, x} with x^2 = x: a bialgebra with no antipode.
HopfAlgebra idempotent_monoid_bialgebra();

LeftBicoalgebroid hopf_left_data(const HopfAlgebra& h);
RightBicoalgebroid hopf_right_data(const HopfAlgebra& h);
LeftXHopf hopf_to_left_xhopf(const HopfAlgebra& h);
RightXHopf hopf_to_right_xhopf(const HopfAlgebra& h);

// Closed-form inverses hS(h'1) (x) h'2 and b1 (x) S(b2)b', used as oracles.
Op hopf_left_nu_inverse(const HopfAlgebra& h);
Op hopf_right_nu_inverse(const HopfAlgebra& h);

struct WeakHopf {
  std::string name;
  Coalgebra coalg;
  Op mul;
  Tensor unit;
  Op antipode;
  std::size_t dim() const { return coalg.dim(); }
};

struct SNotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WeakAxiomFailure : std::runtime_error {
  Report report;
  explicit WeakAxiomFailure(Report r) : std::runtime_error("weak Hopf axioms fail:\n" + r.str()), report(std::move(r)) {}
};

Report check_weak_hopf(const WeakHopf& w);
WeakHopf weak_from_hopf(const HopfAlgebra& h);
// C = W / ker xi with xi(b) = eps(1_(1) b) 1_(2); alpha = pi, beta = pi S^-1,
// eta = xi through the section.
LeftXHopf weak_hopf_to_xhopf(const WeakHopf& w);

// Right group-like conditions for delta : C -> K against a source map alpha.
Report check_group_like(const Coalgebra& k, const Coalgebra& c, const Op& alpha, const Op& delta);
Report check_group_like(const LeftXHopf& k, const Op& delta);
Report check_group_like(const RightXHopf& b, const Op& delta);
// sigma : K -> C with sigma eta = id and sigma(gh) = eps(sigma(g)) sigma(h).
Report check_character(const Coalgebra& k, const Coalgebra& c, const Realized& product, const Op& mu,
                       const Op& eta, const Op& sigma);
Report check_character(const LeftXHopf& k, const Op& sigma);
Report check_character(const RightXHopf& b, const Op& sigma);

// delta(c) = c2 (x) theta(c1) and sigma(a (x) b) = eps(a) b on C^e.
Op coenveloping_group_like(const Coalgebra& c, const Op& theta);
Op coenveloping_character(const Coalgebra& c);

}  // namespace hocx

#endif
