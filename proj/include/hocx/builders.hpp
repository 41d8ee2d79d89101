#ifndef HOCX_BUILDERS_HPP
#define HOCX_BUILDERS_HPP

#include "hocx/sayd.hpp"

namespace hocx {

// Every builder realizes its spaces inside ambient tensor products, realizes
// the operators there (NotInvariant names an operator that leaves its space)
// and throws IdentityFailure unless the result verifies.
//
// Cofaces d_0..d_n act on the tensor legs and the last one is tau d_0;
// codegeneracy j applies the counit to leg j + 1 (or multiplies legs j, j+1).

// M box_K T^{box_S (n+1)}, legs (M, T, ..., T).
std::vector<Realized> comodule_coalgebra_spaces(const ComoduleCoalgebra& t, const SaydLR& m, std::size_t top);
CocyclicObject build_comodule_coalgebra_cocyclic(const ComoduleCoalgebra& t, const SaydLR& m, std::size_t top);

// Right H-comodule coalgebra over a Hopf algebra. coaction : C -> C (x) H.
struct HopfComoduleCoalgebra {
  std::string name;
  HopfAlgebra h;
  Coalgebra c;
  Op coaction;
};
Report check_hopf_comodule_coalgebra(const HopfComoduleCoalgebra& c);
// H with h -> h(2) (x) S(h(1)) h(3).
HopfComoduleCoalgebra coadjoint_comodule_coalgebra(const HopfAlgebra& h);
// Left version on H itself: h -> h(1) S(h(3)) (x) h(2), over hopf_to_left_xhopf.
ComoduleCoalgebra adjoint_comodule_coalgebra(const HopfAlgebra& h);
// C over C^e (left) with c -> (c(1) (x) c(3)) (x) c(2).
ComoduleCoalgebra base_comodule_coalgebra(const Coalgebra& c);

// C^{(x)(n+1)} box_H M, legs (C, ..., C, M); M over hopf_to_right_xhopf(H).
CocyclicObject build_hopf_comodule_coalgebra(const HopfComoduleCoalgebra& c, const SaydRL& m, std::size_t top);

// A^{box_C (n+1)} box_B M, legs (A, ..., A, M).
CocyclicObject build_comodule_ring_cocyclic(const ComoduleRing& a, const SaydRL& m, std::size_t top);

// phi_n : C~(B, M) -> B^{box_C n} box_{C_cop} M, b0 .. bn m -> b0 .. b(n-1) eps(bn) m.
struct TransferPhi {
  CocyclicObject source;       // build_comodule_ring_cocyclic(self_comodule_ring(B), M)
  CocyclicObject transported;  // phi o op o phi^-1
  CocyclicObject closed_form;  // the operators written directly on the target
  std::vector<Realized> targets;
  std::vector<Matrix> phi, phi_inv;  // phi_inv from its closed form
  Report report;
};
Realized transfer_target(const RightXHopf& b, const SaydRL& m, std::size_t n);
TransferPhi transfer_phi(const RightXHopf& b, const SaydRL& m, std::size_t top);

// H^{(x) n} (x) M with 1_H insertions, S(h(2)...)m<-1>, products and counits.
CocyclicObject build_hopf_dual_cocyclic(const HopfAlgebra& h, const SaydRL& m, std::size_t top);
// M (x) H^{(x) n}; M a left-right SAYD over hopf_to_left_xhopf(H).
CyclicObject build_hopf_cyclic_module(const HopfAlgebra& h, const SaydLR& m, std::size_t top);

// One-dimensional SAYD modules with counit action and unit coaction.
SaydRL hopf_trivial_sayd_rl(const RightXHopf& h);
SaydLR hopf_trivial_sayd_lr(const LeftXHopf& h);
// H itself with h |> m = h(1) m S(h(2)) and coaction Delta.
SaydLR hopf_adjoint_sayd(const HopfAlgebra& h, const LeftXHopf& k);

}  // namespace hocx

#endif
