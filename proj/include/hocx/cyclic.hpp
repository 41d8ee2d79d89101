#ifndef HOCX_CYCLIC_HPP
#define HOCX_CYCLIC_HPP

#include "hocx/report.hpp"
#include "hocx/tensor.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hocx {

// Cyclic object truncated at degree `top`. Matrices act on coordinates of a
// fixed basis of each degree.
struct CyclicObject {
  std::size_t top = 0;
  std::vector<std::size_t> dims;            // dims[n], n = 0..top
  std::vector<std::vector<Matrix>> faces;   // faces[n][i] : n -> n-1, 0 <= i <= n, n >= 1
  std::vector<std::vector<Matrix>> degens;  // degens[n][j] : n -> n+1, 0 <= j <= n, n < top
  std::vector<Matrix> t;                    // t[n] : n -> n
};

struct CocyclicObject {
  std::size_t top = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> cofaces;   // cofaces[n][i] : n -> n+1, 0 <= i <= n+1, n < top
  std::vector<std::vector<Matrix>> codegens;  // codegens[n][j] : n -> n-1, 0 <= j <= n-1
  std::vector<Matrix> t;
};

// Shape checks plus every relation instance of the cyclic category.
Report verify_cyclic(const CyclicObject& x);
Report verify_cocyclic(const CocyclicObject& x);

// Degreewise transpose: the linear dual.
CocyclicObject dual(const CyclicObject& x);
CyclicObject dual(const CocyclicObject& x);

struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HomologyReport {
  std::string method;  // "lambda" or "bicomplex"
  std::vector<std::size_t> dims;  // dims[n], n = 0..N
  std::string json() const;
};

// Both engines need the object up to degree N+1 and throw IdentityFailure
// when it does not verify.
HomologyReport lambda_hc(const CyclicObject& x, std::size_t n_max);
HomologyReport bicomplex_hc(const CyclicObject& x, std::size_t n_max);
HomologyReport lambda_hcc(const CocyclicObject& x, std::size_t n_max);
HomologyReport bicomplex_hcc(const CocyclicObject& x, std::size_t n_max);

// Aligned table of one or more reports over the same degrees.
std::string homology_table(const std::vector<HomologyReport>& reports);

Report iso_check(const CyclicObject& x, const CyclicObject& y, const std::vector<Matrix>& maps);
Report iso_check(const CocyclicObject& x, const CocyclicObject& y, const std::vector<Matrix>& maps);

// Spaces realized inside ambient tensor products.
struct Realized {
  Dims legs;
  Subspace space;
};

// Matrix of f : dom -> cod in the two subspace bases. f sees ambient tensors;
// NotInvariant names the first basis vector whose image leaves cod.
Matrix realize(const Realized& dom, const Realized& cod, const std::function<Tensor(const Tensor&)>& f,
               const std::string& what);

// Sequence of spaces with operators given on ambient tensors, realized into a
// cocyclic object. coface(n, i, x) maps degree n to n+1, codegen(n, j, x)
// maps n to n-1, tau(n, x) maps n to n.
struct AmbientCocyclic {
  std::vector<Realized> spaces;
  std::function<Tensor(std::size_t, std::size_t, const Tensor&)> coface, codegen;
  std::function<Tensor(std::size_t, const Tensor&)> tau;
};
CocyclicObject realize_cocyclic(const AmbientCocyclic& a);

struct AmbientCyclic {
  std::vector<Realized> spaces;
  std::function<Tensor(std::size_t, std::size_t, const Tensor&)> face, degen;
  std::function<Tensor(std::size_t, const Tensor&)> tau;
};
CyclicObject realize_cyclic(const AmbientCyclic& a);

// Number of worker threads for independent per-item work (HOCX_THREADS, default
// hardware concurrency).
unsigned worker_threads();

}  // namespace hocx

#endif
