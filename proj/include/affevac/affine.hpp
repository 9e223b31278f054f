#pragma once

#include <set>
#include <string>
#include <vector>

namespace affevac {

/// Extended affine permutation in window notation: n integers, one
/// representative of each residue class mod n. The periodic extension
/// w(i+n) = w(i) + n is implicit.
struct AffinePermutation {
  int n = 0;
  std::vector<long long> window;

  AffinePermutation() = default;
  AffinePermutation(int modulus, std::vector<long long> w);

  bool operator==(const AffinePermutation&) const = default;
};

/// Reverse-complement: [w_1..w_n] -> [n+1-w_n, ..., n+1-w_1]. An involution.
AffinePermutation rotate(const AffinePermutation& w);

/// Residues i with w_i > w_{i+1} under the periodic extension.
std::set<int> affine_descents(const AffinePermutation& w);

AffinePermutation parse_affine(const std::string& text);  // "[4,1,6,11,2,3]"
std::string format_affine(const AffinePermutation& w);

}  // namespace affevac
