#ifndef HOCX_GALOIS_HPP
#define HOCX_GALOIS_HPP

#include "hocx/builders.hpp"

namespace hocx {

struct NotGalois : std::runtime_error {
  std::size_t rank, dom_dim, cod_dim;
  NotGalois(std::size_t r, std::size_t d, std::size_t c, const std::string& what)
      : std::runtime_error(what), rank(r), dom_dim(d), cod_dim(c) {}
};
struct BarCanNotBijective : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAMorphism : std::runtime_error {
  Report report;
  explicit NotAMorphism(Report r) : std::runtime_error("not a morphism:\n" + r.str()), report(std::move(r)) {}
};

// I = span{t <| b - eps(b) t} over a basis of T box_C B, and S = T / I.
struct Coinvariants {
  Subspace ideal;
  CoidealQuotient quotient;
};
Coinvariants coinvariants(const ModuleCoalgebra& t);

// T with its B-action and K-coaction over S = T_B.
struct EquivariantCoextension {
  std::string name;
  ModuleCoalgebra t;
  Coinvariants s;
  ComoduleCoalgebra k;  // k.T is t.T
  // t -> t1 (x) pi(t2) and t -> pi(t1) (x) t2
  Op right_s, left_s;
  Realized can_dom, can_cod;  // T box_C B, T box_S T
  Matrix can_m;
  bool galois = false;
  std::size_t can_rank = 0;
  Matrix can_inv_m;
  Op can, can_inv;  // ops on can_dom / can_cod in ambient coordinates
};

// Realizes can and tries to invert it; galois records the verdict.
EquivariantCoextension make_coextension(std::string name, const ModuleCoalgebra& t, const LeftXHopf& k,
                                        const Op& coaction);
// K = S^e acting through t -> (pi(t1) (x) pi(t3)) (x) t2.
EquivariantCoextension coextension_over_se(std::string name, const ModuleCoalgebra& t);
// T = B acting on itself by multiplication.
EquivariantCoextension self_coextension(const RightXHopf& b);

// can as a matrix between the bases of T box_C B and T box_S T; throws
// NotGalois from invert_can.
Matrix canonical_map(const EquivariantCoextension& x);
Matrix invert_can(const EquivariantCoextension& x);

// Bijectivity, K-equivariance, pi(t <| b) = eps(b) pi(t), then the twelve
// identities i..xii for can^-1.
Report can_lemma_suite(const EquivariantCoextension& x);

struct KappaMap {
  Realized ts;   // T^S
  Realized tst;  // (T box_S T)^S
  Matrix bar_can, bar_can_inv;
  Matrix m;      // tst basis -> B ambient
  Op op;         // on tst
  Op ext;        // (eps (x) id) can^-1 on all of T box_S T
  Report report; // kappa i..iii, anti-coalgebra, T^S stable under the action
};
KappaMap kappa(const EquivariantCoextension& x);

// M box_K T with (m (x) t) <| b = m (x) t <| b and the reduced coaction.
// Ops are in coordinates of `space`.
struct SaydImage {
  Realized space;
  SaydRL module;
  Report report;  // check_sayd_rl plus agreement of the two coaction formulas
};
SaydImage sayd_functor(const EquivariantCoextension& x, const SaydLR& m);

// phi (x) id on M box_K T, as a matrix between the bases of the two images.
// Throws NotAMorphism unless phi is K-linear and K-colinear.
Matrix functor_on_morphisms(const EquivariantCoextension& x, const SaydLR& m, const SaydLR& n, const Matrix& phi);
// K-linearity and colinearity of phi : M -> N (matrix on ambient bases).
Report check_sayd_morphism_lr(const SaydLR& m, const SaydLR& n, const Matrix& phi);
Report check_sayd_morphism_rl(const SaydRL& m, const SaydRL& n, const Matrix& phi);

struct OmegaIso {
  CocyclicObject source;  // transferred object on B^n box M~
  CocyclicObject target;  // M box_K T^{n+1}
  std::vector<Matrix> omega, omega_inv;
  Report report;
};
OmegaIso omega_iso(const EquivariantCoextension& x, const SaydLR& m, std::size_t top);

// Module coalgebra C over hopf_to_right_xhopf(h) with action {C, H} -> {C}.
ModuleCoalgebra hopf_module_coalgebra(std::string name, const HopfAlgebra& h, const Coalgebra& c, const Op& action);

struct HopfGaloisCoextension {
  HopfAlgebra h;
  EquivariantCoextension x;  // the coextension over D^e
  Matrix beta;               // C (x) H -> C box_D C
  KappaMap kappa;
  SaydLR d_module;           // D over D^e
  SaydImage m_tilde;         // D box_{D^e} C
  Realized cd;               // C^D
  Matrix xi, xi_inv;         // M~ -> C^D and back
  CocyclicObject cocyclic;   // C^n(C, C^D)
  CocyclicObject dual;       // C^n(H, M~)
  OmegaIso omega;
  Report report;
};
// Throws NotGalois when beta is not bijective.
HopfGaloisCoextension hopf_coextension(const HopfAlgebra& h, const ModuleCoalgebra& c, std::size_t top = 2);
// C = H with the multiplication action.
HopfGaloisCoextension hopf_self_coextension(const HopfAlgebra& h, std::size_t top = 2);

}  // namespace hocx

#endif
