#pragma once

#include "dessins/permutation.hpp"
#include "dessins/perm_group.hpp"

namespace test {

inline dessins::Permutation perm(std::size_t n, const char* text) {
  return dessins::parse_permutation(text, n);
}

// PSL(3,2) acting on the seven points of the Fano plane.
inline dessins::PermGroup psl32() {
  return dessins::PermGroup(7, {perm(7, "(1,5,2)(3,4,6)"), perm(7, "(0,4)(1,6)")});
}

// A5 on five points.
inline dessins::PermGroup a5() { return dessins::PermGroup::alternating(5); }

}  // namespace test
