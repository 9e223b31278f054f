#pragma once

#include <string>
#include <vector>

namespace affevac {

/// Weakly decreasing sequence of positive integers.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  /// 1-based part access; returns 0 past the end.
  int part(int i) const;
  bool empty() const { return parts.empty(); }

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// Strict composition: positive integers, no ordering constraint.
using Composition = std::vector<int>;

bool is_weakly_decreasing(const std::vector<int>& v);
Partition sort_to_partition(const Composition& mu);
Partition conjugate(const Partition& lam);

/// b(lambda) = sum (i-1) * lambda_i
long long b_statistic(const Partition& lam);

/// Hook lengths of all cells, row-major.
std::vector<int> hook_lengths(const Partition& lam);

/// Number of standard Young tableaux, by the hook-length formula.
long long hook_length_count(const Partition& lam);

std::vector<Partition> partitions_of(int n);
/// All partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// Partitions of n with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_of_in_box(int n, int rows, int cols);

/// 180-degree rotation of the complement of eta in the rows x cols box.
Partition box_complement(const Partition& eta, int rows, int cols);

long long factorial(int n);
/// n! / (mu_1! * mu_2! * ...) for a composition mu of n.
long long multinomial(const Composition& mu);

Partition parse_partition(const std::string& text);  // "4,2,1"
std::string format_partition(const Partition& lam);

}  // namespace affevac
