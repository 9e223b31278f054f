#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affevac/partition.hpp"
#include "affevac/tabloid.hpp"

namespace affevac {

/// Semistandard Young tableau: rows weakly increase, columns strictly increase.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r);

  Partition shape() const;
  int size() const;
  std::vector<int> content(int d) const;  // multiplicities of 1..d
  bool is_standard() const;
  /// Rows concatenated starting with the last row.
  std::vector<int> reading_word() const;

  bool operator==(const Tableau&) const = default;
  bool operator<(const Tableau&) const;
};

/// Biword with weakly increasing top row; equal tops carry weakly
/// increasing bottoms.
struct TwoRowArray {
  std::vector<int> top;
  std::vector<int> bottom;

  bool operator==(const TwoRowArray&) const = default;
};

Tableau schensted_insert(const Tableau& p, int x);
Tableau insertion_tableau(const std::vector<int>& word);

std::pair<Tableau, Tableau> rsk(const TwoRowArray& array);
TwoRowArray rsk_inverse(const Tableau& p, const Tableau& q);

TwoRowArray tabloid_to_biword(const Tabloid& t);
Tabloid biword_to_tabloid(const TwoRowArray& array, int n);

/// The standard tableau whose rows are the rows of T, if entries happen
/// to increase down columns; empty otherwise.
std::optional<Tableau> standardize_tabloid(const Tabloid& t);

/// Schuetzenberger evacuation: rotate 180 degrees, complement entries
/// i -> n+1-i, rectify by jeu de taquin.
Tableau finite_evacuation(const Tableau& t);

/// Lascoux-Schuetzenberger crystal reflection s_i on the reading word.
Tableau ls_action(int i, const Tableau& u);
/// Longest-element action via the staircase word s_1, s_2 s_1, ...
Tableau apply_w0(const Tableau& u, int d);

/// e_d: reverse-complement of the reading word in the alphabet [d],
/// reinserted.
Tableau evacuation_ssyt(const Tableau& u, int d);
/// e_d* = w_0 . e_d, a content-preserving involution.
Tableau e_d_star(const Tableau& u, int d);

/// Lascoux-Schuetzenberger charge; content must be a partition.
int charge(const Tableau& u);
int charge_word(const std::vector<int>& word);

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content);
std::vector<Tableau> enumerate_syt(const Partition& shape);

Tableau parse_tableau(const std::string& text);  // "1 2 3 5 7/4/6"
std::string format_tableau(const Tableau& t);

}  // namespace affevac
