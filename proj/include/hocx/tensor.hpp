#ifndef HOCX_TENSOR_HPP
#define HOCX_TENSOR_HPP

#include "hocx/linalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hocx {

using Idx = std::vector<std::uint32_t>;
using Dims = std::vector<std::size_t>;

// An element of V_0 (x) ... (x) V_{k-1}, each V_i with a fixed basis.
// Legs are the tensor factors; a zero-leg tensor is a scalar.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Dims dims) : dims_(std::move(dims)) {}

  static Tensor basis(Dims dims, Idx idx);
  static Tensor scalar(const Rational& x);
  // Interpret a flat row-major coordinate vector over dims.
  static Tensor from_flat(Dims dims, const SparseVec& v);

  const Dims& dims() const { return dims_; }
  std::size_t legs() const { return dims_.size(); }
  const std::map<Idx, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Idx& idx, const Rational& c);
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor scaled(const Rational& a) const;
  bool operator==(const Tensor& o) const { return dims_ == o.dims_ && terms_ == o.terms_; }

  SparseVec to_flat() const;
  // Scalar value of a zero-leg tensor.
  Rational value() const;
  std::string str() const;

 private:
  Dims dims_;
  std::map<Idx, Rational> terms_;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);

// New leg k is old leg perm[k].
Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm);

// A linear map from the tensor product of the `in` spaces to that of the
// `out` spaces. When `dom` is set the map is only defined on that subspace
// and the matrix columns are indexed by dom's basis; applying it to a vector
// outside the subspace throws NotInvariant.
class Op {
 public:
  Op() = default;
  Op(std::string name, Dims in, Dims out, Matrix m);
  Op(std::string name, Dims in, Dims out, Subspace dom, Matrix m);

  // Build by evaluating f on every basis tensor of `in` (or of dom).
  static Op from_fn(std::string name, Dims in, Dims out, const std::function<Tensor(const Idx&)>& f);
  static Op on_subspace(std::string name, Dims in, Dims out, Subspace dom,
                        const std::function<Tensor(const Tensor&)>& f);
  static Op identity(std::size_t n);

  const std::string& name() const { return name_; }
  const Dims& in() const { return in_; }
  const Dims& out() const { return out_; }
  const Matrix& matrix() const { return m_; }
  const std::optional<Subspace>& domain() const { return dom_; }

  // The map on ambient coordinates (requires no domain restriction).
  Matrix ambient_matrix() const;
  Tensor operator()(const Tensor& t) const { return apply(t, 0); }
  // Apply to legs [leg, leg + in().size()) of t.
  Tensor apply(const Tensor& t, std::size_t leg) const;

  // Takeuchi-style composites (b1 b'1 (x) b2 b'2) feed slices that are only
  // jointly in the domain. apply_ext uses the attached ambient extension, or
  // else reads coordinates at the domain pivots (extension by zero along the
  // non-pivot unit vectors).
  Op with_extension(const Op& ambient) const;
  bool has_extension() const { return ext_ != nullptr; }
  Tensor apply_ext(const Tensor& t, std::size_t leg) const;

 private:
  void cache();
  std::string name_;
  Dims in_, out_;
  std::optional<Subspace> dom_;
  Matrix m_;
  std::vector<std::vector<std::pair<Idx, Rational>>> cols_;
  std::size_t in_size_ = 1;
  std::shared_ptr<const Op> ext_;
};

// Zero-leg output op and zero-leg input op conveniences.
Op functional(std::string name, std::size_t n, const std::vector<Rational>& values);
Op element(std::string name, Dims out, const Tensor& t);

// {v in dom : f(v) = g(v)}, with f and g evaluated on basis tensors of dom.
Subspace equalizer(const Dims& dims, const Subspace& dom, const std::function<Tensor(const Tensor&)>& f,
                   const std::function<Tensor(const Tensor&)>& g);

// Basis tensors a_i (x) b_j of the product of two subspaces.
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

std::size_t flat_size(const Dims& d);
Dims concat(const Dims& a, const Dims& b);
Dims repeat(std::size_t d, std::size_t times);

}  // namespace hocx

#endif
