#ifndef HOCX_GROUPOID_HPP
#define HOCX_GROUPOID_HPP

#include "hocx/sayd.hpp"

#include <array>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hocx {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// comp[g][h] = gh ("g after h"), defined iff src(g) = tgt(h); npos otherwise.
// ident and inv are derived from the table and hold npos when missing.
struct FiniteGroupoid {
  std::string name;
  std::vector<std::string> objects, morphisms;
  std::vector<std::size_t> src, tgt;
  std::vector<std::vector<std::size_t>> comp;
  std::vector<std::size_t> ident, inv;

  std::size_t n_obj() const { return objects.size(); }
  std::size_t n_mor() const { return morphisms.size(); }
  bool composable(std::size_t g, std::size_t h) const { return src[g] == tgt[h]; }
  // Throws std::logic_error when not composable.
  std::size_t mul(std::size_t g, std::size_t h) const;
  // g1 g2 ... gn of a composable tuple.
  std::size_t product(const std::vector<std::size_t>& gs) const;
};

struct GroupoidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Builds the table and derives identities and inverses. Index errors throw
// GroupoidError; axiom failures are left for check_groupoid.
FiniteGroupoid groupoid_from_table(std::string name, std::vector<std::string> objects,
                                   std::vector<std::string> morphisms, std::vector<std::size_t> src,
                                   std::vector<std::size_t> tgt,
                                   const std::vector<std::array<std::size_t, 3>>& comp);

Report check_groupoid(const FiniteGroupoid& g);

FiniteGroupoid trivial_groupoid();
FiniteGroupoid group_groupoid(const FiniteGroup& h);
// Objects 0..k-1, one morphism (i, j) : j -> i with index i k + j.
FiniteGroupoid pair_groupoid(std::size_t k);
// Morphism (a, b) has index a * |G2 morphisms| + b.
FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

// theta[A] : A -> A for every object A.
using Theta = std::vector<std::size_t>;
Theta identity_theta(const FiniteGroupoid& g);
Theta product_theta(const FiniteGroupoid& a, const Theta& ta, const FiniteGroupoid& b, const Theta& tb);
Theta union_theta(const FiniteGroupoid& a, const Theta& ta, const Theta& tb);

// theta_A is a loop at A and f theta_A = theta_B f for every f : A -> B.
Report check_cyclic(const FiniteGroupoid& g, const Theta& theta);

struct NotCyclic : std::runtime_error {
  Report report;
  explicit NotCyclic(Report r) : std::runtime_error("not a cyclic groupoid:\n" + r.str()), report(std::move(r)) {}
};

struct CyclicGroupoid {
  FiniteGroupoid g;
  Theta theta;
  std::string label;
};

// Disjoint union of components pair(k) x H with k^2 |H| summing to at most
// max_mor morphisms and at most max_obj objects; theta is identity or a random
// central element per component.
CyclicGroupoid random_cyclic_groupoid(std::mt19937& rng, std::size_t max_obj = 5, std::size_t max_mor = 12);

// Composable tuples (g1, ..., gn), s(g_i) = t(g_{i+1}), in lexicographic order.
// Degree 0 gives the objects as one-element tuples.
std::vector<std::vector<std::size_t>> nerve_tuples(const FiniteGroupoid& g, std::size_t n);

// Degree n lives in {mor}^n (degree 0 in {obj}) spanned by composable tuples.
Realized nerve_space(const FiniteGroupoid& g, std::size_t n);
CyclicObject nerve_cyclic_module(const FiniteGroupoid& g, const Theta& theta, std::size_t top);

// B = span of morphisms, C = span of objects, both grouplike; alpha = s,
// beta = t, mu = composition, eta(A) = Id_A.
RightXHopf groupoid_xhopf(const FiniteGroupoid& g);

// C with c . g = eps(c) s(g) on C box_C B (so c = t(g)) and A -> theta_A (x) A.
SaydRL theta_sayd(const RightXHopf& b, const FiniteGroupoid& g, const Theta& theta);

// C_n(B, C) inside B^{n+1} (x) C: composable tuples [g0, ..., gn, c] with
// g0 ... gn = theta_c. Throws DimensionMismatch if the equalizer realization
// disagrees with the tuple enumeration.
Realized coefficient_space(const RightXHopf& b, const SaydRL& m, const FiniteGroupoid& g, const Theta& theta,
                           std::size_t n);
CyclicObject coefficient_cyclic_module(const RightXHopf& b, const SaydRL& m, const FiniteGroupoid& g,
                                       const Theta& theta, std::size_t top);

struct ComparisonIso {
  CyclicObject coefficients, nerve;
  std::vector<Matrix> forward, backward;  // I and I^-1 per degree
  Report report;                          // iso_check plus both round trips
};
ComparisonIso comparison_iso(const FiniteGroupoid& g, const Theta& theta, std::size_t top);

// Span of morphisms with gh (0 when not composable), unit sum of identities,
// S(g) = g^-1.
WeakHopf groupoid_algebra(const FiniteGroupoid& g);

}  // namespace hocx

#endif
