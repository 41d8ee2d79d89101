#ifndef HOCX_IDENTITY_HPP
#define HOCX_IDENTITY_HPP

#include "hocx/coalgebra.hpp"
#include "hocx/cyclic.hpp"

#include <functional>
#include <string>

namespace hocx {

using TensorFn = std::function<Tensor(const Tensor&)>;

Realized full_space(const Dims& legs);

// Evaluates both sides on every basis vector of dom and records one item.
// Exceptions raised while evaluating become a failed item.
void expect_identity(Report& r, const std::string& name, const Realized& dom, const TensorFn& lhs,
                     const TensorFn& rhs);

// Same, but the failure witness is the first basis vector where f(v) leaves cod.
void expect_lands(Report& r, const std::string& name, const Realized& dom, const Realized& cod, const TensorFn& f);

// Restriction of an ambient op to a domain subspace.
Op restricted(const Op& ambient, const Subspace& dom);

// Leg reordering shorthand: new leg k is old leg perm[k].
inline Tensor legs(const Tensor& t, const std::vector<std::size_t>& perm) { return permute(t, perm); }
// Move leg `from` to position `to`, keeping the order of the others.
Tensor move_leg(const Tensor& t, std::size_t from, std::size_t to);

// Legs [leg, leg + count) replaced by one leg holding coordinates in the
// basis of s; NotInvariant when a slice is not in s.
Tensor to_coords(const Tensor& t, std::size_t leg, std::size_t count, const Subspace& s);
// Inverse direction: leg `leg` (coordinates in r.space) expanded into r.legs.
Tensor from_coords(const Tensor& t, std::size_t leg, const Realized& r);

// x -> g applied at `leg` of f(x).
Op chain(std::string name, const Op& f, const Op& g, std::size_t leg);

Tensor basis_vec(std::size_t dim, std::size_t i);

// A coalgebra with one basis vector, Delta(e) = e (x) e.
Coalgebra ground_coalgebra();

// x -> x1 (x) f(x2) and x -> f(x1) (x) x2 as ops, for f given as an op.
Op right_coaction_via(const Coalgebra& k, const Op& f);
Op left_coaction_via(const Coalgebra& k, const Op& f);
// x -> x2 (x) f(x1) and x -> f(x2) (x) x1 (the twisted variants).
Op right_coaction_via_cop(const Coalgebra& k, const Op& f);
Op left_coaction_via_cop(const Coalgebra& k, const Op& f);

}  // namespace hocx

#endif
