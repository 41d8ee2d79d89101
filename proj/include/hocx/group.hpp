#ifndef HOCX_GROUP_HPP
#define HOCX_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace hocx {

// Finite group by multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<std::size_t>> mul;

  std::size_t order() const { return mul.size(); }
  std::size_t inverse(std::size_t g) const;
  std::vector<std::size_t> center() const;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup klein_group();
// Elements 0..5 are the permutations of {0,1,2} in lexicographic order.
FiniteGroup symmetric_group3();

// Group axioms on the table (associativity, identity 0, inverses).
bool is_group(const FiniteGroup& g);

}  // namespace hocx

#endif
