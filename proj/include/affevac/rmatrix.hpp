#pragma once

#include <utility>
#include <vector>

#include "affevac/tabloid.hpp"

namespace affevac {

/// Combinatorial R-matrix on a pair of weakly increasing rows: a carries
/// right parentheses, b left ones; at equal values rights sort first.
/// Returns (a', b') with |a'| = |b| and |b'| = |a|.
std::pair<std::vector<int>, std::vector<int>> r_matrix(const std::vector<int>& a,
                                                       const std::vector<int>& b);

/// R_i swaps the lengths of rows i and i+1 of a tabloid (1-based from the
/// top) via the R-matrix, with the lower row playing the role of a.
Tabloid apply_r(const Tabloid& t, int i);
Tabloid apply_r_word(const Tabloid& t, const std::vector<int>& word);

/// Affine evacuation: reverse the rows, complement entries i -> n+1-i,
/// then restore the shape with R_{w0} along the staircase word.
Tabloid affine_evacuation(const Tabloid& t);

/// Same map computed through RSK: e(T) corresponds to (e_n(P), e_d*(Q)).
Tabloid affine_evacuation_via_rsk(const Tabloid& t);

/// pr^c composed with affine evacuation; c = 0 recovers the latter.
Tabloid evacuation_variant(const Tabloid& t, int c);

/// Closed form on rectangular shapes: reverse rows, j -> n+1-j.
Tabloid rectangle_evacuation(const Tabloid& t);

}  // namespace affevac
