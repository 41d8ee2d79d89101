#ifndef HOCX_COALGEBRA_HPP
#define HOCX_COALGEBRA_HPP

#include "hocx/report.hpp"
#include "hocx/tensor.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hocx {

// Delta(e_i) contains coeff * e_j (x) e_k.
struct DeltaTerm {
  std::size_t i, j, k;
  Rational coeff;
};

class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(std::size_t dim, const std::vector<DeltaTerm>& delta, std::vector<Rational> eps);
  Coalgebra(Op delta, Op eps);

  // Delta(e_i) = e_i (x) e_i, eps = 1.
  static Coalgebra grouplike(std::size_t n);
  // Basis g, h, x with g, h grouplike, Delta(x) = g(x)x + x(x)h, eps(x) = 0.
  static Coalgebra path();

  std::size_t dim() const { return dim_; }
  const Op& delta() const { return delta_; }
  const Op& eps() const { return eps_; }
  Rational epsilon(std::size_t i) const { return eps_.matrix().at(0, i); }
  std::vector<DeltaTerm> delta_terms() const;
  std::vector<Rational> eps_values() const;

  bool operator==(const Coalgebra& o) const {
    return dim_ == o.dim_ && delta_.matrix() == o.delta_.matrix() && eps_.matrix() == o.eps_.matrix();
  }

 private:
  std::size_t dim_ = 0;
  Op delta_, eps_;
};

Report check_coalgebra(const Coalgebra& c);
Coalgebra co_opposite(const Coalgebra& c);
// C (x) D with Delta(c(x)d) = c1 (x) d1 (x) c2 (x) d2.
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);

struct CoalgebraMap {
  Coalgebra src, tgt;
  Op map;  // {src.dim} -> {tgt.dim}
};

Report check_coalgebra_map(const CoalgebraMap& f);

struct RightComodule {
  std::size_t dim = 0;
  Coalgebra over;
  Op rho;  // {dim} -> {dim, C}
};

struct LeftComodule {
  std::size_t dim = 0;
  Coalgebra over;
  Op rho;  // {dim} -> {C, dim}
};

struct Bicomodule {
  LeftComodule left;
  RightComodule right;
};

Report check_right_comodule(const RightComodule& m);
Report check_left_comodule(const LeftComodule& m);
Report check_bicomodule(const Bicomodule& m);

RightComodule regular_right(const Coalgebra& c);
LeftComodule regular_left(const Coalgebra& c);
// Comodule structures induced through a coalgebra map f: K -> C:
// k -> k1 (x) f(k2) and k -> f(k1) (x) k2.
RightComodule right_along(const Coalgebra& k, const CoalgebraMap& f);
LeftComodule left_along(const Coalgebra& k, const CoalgebraMap& f);

// X box_C Y inside X (x) Y, factor order (X, Y).
Subspace cotensor(const RightComodule& x, const LeftComodule& y);

// One junction of an iterated cotensor: the right coaction of factor i and
// the left coaction of factor i+1 over a common coalgebra.
struct Junction {
  Op right;  // {d_i} -> {d_i, c}
  Op left;   // {d_{i+1}} -> {c, d_{i+1}}
};

// Intersection of all junction conditions inside the full tensor product.
Subspace iterated_cotensor(const Dims& dims, const std::vector<Junction>& junctions);
// Same subspace computed by nesting pairwise cotensors from the left or right.
Subspace nested_cotensor(const Dims& dims, const std::vector<Junction>& junctions, bool from_left);

struct CoidealQuotient {
  Coalgebra quotient;
  CoalgebraMap pi;
  Op section;  // D -> C, picks the non-pivot basis vectors
};

struct NotCoideal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws NotCoideal when eps(I) != 0 or Delta(I) is not inside I(x)C + C(x)I.
CoidealQuotient quotient_coideal(const Coalgebra& c, const Subspace& ideal);

}  // namespace hocx

#endif
