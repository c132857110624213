#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dessins/cyclotomic.hpp"
#include "dessins/group_elements.hpp"

namespace dessins {

struct CharacterTable {
  std::uint64_t group_order = 0;
  std::uint32_t exponent = 1;
  std::vector<ConjClass> classes;
  std::vector<std::size_t> inverse_class;  // class of g^-1
  // rows[i][k] = chi_i on class k; rows sorted by degree, then values
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::uint64_t> degrees;
  std::uint64_t prime = 0;  // the Dixon prime used

  std::size_t size() const { return rows.size(); }
  std::uint64_t centralizer_order(std::size_t cls) const { return group_order / classes[cls].size; }
};

// Least prime p = 1 (mod exponent) with p > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

// Dixon-Schneider: class matrices reduced mod the Dixon prime, common
// eigenvectors found by splitting with the class matrices and then seeded
// random combinations, values lifted through the eigenvalue multiplicities.
// Degrees, sum of squares and column orthogonality are verified exactly
// before returning; a failure throws VerificationFailure.
CharacterTable dixon_table(const ClassStructure& cs, std::uint64_t seed = 1);

bool rows_orthonormal(const CharacterTable& t);
bool columns_orthogonal(const CharacterTable& t);

// Atlas-like text rendering of the table.
std::string format_table(const CharacterTable& t);

}  // namespace dessins
