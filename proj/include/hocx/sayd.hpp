#ifndef HOCX_SAYD_HPP
#define HOCX_SAYD_HPP

#include "hocx/xhopf.hpp"

namespace hocx {

// Left K-module and right K-comodule over a left x-Hopf coalgebra.
// left_c : M -> C (x) M; action {K, M} -> {M} on K box_C M; coaction M -> M (x) K.
struct SaydLR {
  std::string name;
  LeftXHopf over;
  std::size_t dim = 0;
  Op left_c, action, coaction;
};

// Right B-module and left B-comodule over a right x-Hopf coalgebra.
// right_c : M -> M (x) C; action {M, B} -> {M} on M box_C B; coaction M -> B (x) M.
struct SaydRL {
  std::string name;
  RightXHopf over;
  std::size_t dim = 0;
  Op right_c, action, coaction;
};

// K box_C M (K right coaction against left_c), resp. M box_C B.
Realized action_domain(const LeftXHopf& k, std::size_t dim, const Op& left_c);
Realized action_domain(const RightXHopf& b, std::size_t dim, const Op& right_c);

// m -> eta(m<-1>)1 |> m<0> (x) alpha(eta(m<-1>)2)
Op canonical_right_coaction(const SaydLR& m);
// m -> alpha(eta(m<1>)1) (x) m<0> <| eta(m<1>)2
Op canonical_left_coaction(const SaydRL& m);

Report check_sayd_lr(const SaydLR& m);
Report check_sayd_rl(const SaydRL& m);

// C as a module-comodule over K from a right group-like delta and character
// sigma; `conditions` holds the three iff-conditions.
struct InducedSayd {
  SaydLR module;
  Report conditions;
};
InducedSayd induced_sayd_on_base(const LeftXHopf& k, const Op& delta, const Op& sigma);

// Left K-comodule coalgebra. coaction : T -> K (x) T.
struct ComoduleCoalgebra {
  std::string name;
  LeftXHopf over;
  Coalgebra T;
  Op coaction;
};
// S-coactions on T derived from the K-coaction: alpha(t<-1>) (x) t<0> and
// t<0> (x) beta(t<-1>).
Op base_left_coaction(const ComoduleCoalgebra& t);
Op base_right_coaction(const ComoduleCoalgebra& t);
Report check_comodule_coalgebra(const ComoduleCoalgebra& t);

struct CRing {
  std::string name;
  Coalgebra C;
  std::size_t dim = 0;
  Op left_c, right_c;  // A -> C (x) A, A -> A (x) C
  Op m;                // {A, A} -> {A} on A box_C A
  Op unit;             // C -> A
};
Realized ring_product_space(const CRing& a);
Report check_cring(const CRing& a);

struct ComoduleRing {
  CRing ring;
  RightXHopf over;
  Op coaction;  // A -> A (x) B
};
Report check_comodule_ring(const ComoduleRing& a);
ComoduleRing self_comodule_ring(const RightXHopf& b);

// Right B-module coalgebra. action {T, B} -> {T} on T box_C B.
struct ModuleCoalgebra {
  std::string name;
  RightXHopf over;
  Coalgebra T;
  Op left_c, right_c;
  Op action;
};
Report check_module_coalgebra(const ModuleCoalgebra& t);
ModuleCoalgebra self_module_coalgebra(const RightXHopf& b);

}  // namespace hocx

#endif
