#pragma once

#include <set>
#include <string>
#include <vector>

#include "affevac/partition.hpp"

namespace affevac {

/// Canonical representative of x mod n, in 1..n.
int residue_mod(int x, int n);

/// Rows of residue classes mod n. Rows are kept sorted ascending, so two
/// tabloids compare equal exactly when their row contents agree.
struct Tabloid {
  int n = 0;
  std::vector<std::vector<int>> rows;

  Tabloid() = default;
  /// Sorts rows internally and validates that the rows partition 1..n.
  Tabloid(int modulus, std::vector<std::vector<int>> r);

  Composition shape() const;
  /// 1-based row index of a residue (rows numbered top = 1).
  int row_of(int residue) const;

  bool operator==(const Tabloid&) const = default;
  bool operator<(const Tabloid& o) const { return rows < o.rows; }
};

std::set<int> tabloid_descents(const Tabloid& t);

/// The unique tabloid of the given shape with descent set {k}.
Tabloid rrss(const Partition& shape, int k);

struct KnuthNeighbor {
  Tabloid tabloid;
  std::set<int> types;
  bool operator==(const KnuthNeighbor&) const = default;
};

std::vector<KnuthNeighbor> knuth_neighbors(const Tabloid& t);

/// Adds `steps` to every residue.
Tabloid promote(const Tabloid& t, int steps = 1);

std::vector<Tabloid> enumerate_tabloids(const Composition& shape);

/// Text form "2 3 5 7|1 4|6". Modulus inferred from the entry count
/// when `modulus` is 0.
Tabloid parse_tabloid(const std::string& text, int modulus = 0);
std::string format_tabloid(const Tabloid& t);

}  // namespace affevac
