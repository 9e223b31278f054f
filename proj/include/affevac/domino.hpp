#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "affevac/partition.hpp"

namespace affevac {

/// Tiling of a Young diagram by numbered dominoes (plus a single monomino
/// when the size is odd) whose partial unions are Young diagrams.
struct DominoTableau {
  Partition shape;
  /// pieces[k] lists the cells (row, col), 1-based, of piece k+1 in the
  /// numbering; a monomino occupies position 0 when |shape| is odd.
  std::vector<std::vector<std::pair<int, int>>> pieces;

  bool operator==(const DominoTableau&) const = default;
};

std::vector<DominoTableau> enumerate_domino_tableaux(const Partition& shape);
std::int64_t count_domino_tableaux(const Partition& shape);

}  // namespace affevac
