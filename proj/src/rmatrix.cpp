#include "affevac/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "affevac/tableau.hpp"

namespace affevac {

std::pair<std::vector<int>, std::vector<int>> r_matrix(const std::vector<int>& a,
                                                       const std::vector<int>& b) {
  struct Symbol {
    int value;
    bool left;  // false: from a (right paren), true: from b (left paren)
  };
  std::vector<Symbol> symbols;
  for (int x : a) symbols.push_back({x, false});
  for (int x : b) symbols.push_back({x, true});
  // Rights precede lefts at equal values.
  std::stable_sort(symbols.begin(), symbols.end(), [](const Symbol& s, const Symbol& t) {
    if (s.value != t.value) return s.value < t.value;
    return s.left < t.left;
  });
  // Match left parens with later right parens; swap the unmatched counts.
  std::vector<char> matched(symbols.size(), 0);
  std::vector<size_t> stack;
  for (size_t k = 0; k < symbols.size(); ++k) {
    if (symbols[k].left) {
      stack.push_back(k);
    } else if (!stack.empty()) {
      matched[k] = matched[stack.back()] = 1;
      stack.pop_back();
    }
  }
  std::vector<size_t> unmatched;
  for (size_t k = 0; k < symbols.size(); ++k)
    if (!matched[k]) unmatched.push_back(k);
  size_t alpha = 0;
  while (alpha < unmatched.size() && !symbols[unmatched[alpha]].left) ++alpha;
  size_t beta = unmatched.size() - alpha;
  for (size_t k = 0; k < unmatched.size(); ++k)
    symbols[unmatched[k]].left = (k >= beta);
  std::vector<int> aOut, bOut;
  for (const Symbol& s : symbols) (s.left ? bOut : aOut).push_back(s.value);
  if (aOut.size() != b.size() || bOut.size() != a.size())
    throw std::logic_error("r_matrix: length bookkeeping failed");
  return {aOut, bOut};
}

Tabloid apply_r(const Tabloid& t, int i) {
  int d = static_cast<int>(t.rows.size());
  if (i < 1 || i >= d) throw std::invalid_argument("apply_r: row index out of range");
  auto [aOut, bOut] = r_matrix(t.rows[i], t.rows[i - 1]);
  auto rows = t.rows;
  rows[i - 1] = bOut;
  rows[i] = aOut;
  return Tabloid(t.n, std::move(rows));
}

Tabloid apply_r_word(const Tabloid& t, const std::vector<int>& word) {
  Tabloid out = t;
  for (int i : word) out = apply_r(out, i);
  return out;
}

static std::vector<int> staircase_word(int d) {
  std::vector<int> word;
  for (int k = 1; k < d; ++k)
    for (int i = k; i >= 1; --i) word.push_back(i);
  return word;
}

Tabloid affine_evacuation(const Tabloid& t) {
  std::vector<std::vector<int>> rows(t.rows.rbegin(), t.rows.rend());
  for (auto& row : rows)
    for (int& x : row) x = t.n + 1 - x;
  Tabloid flipped(t.n, std::move(rows));
  return apply_r_word(flipped, staircase_word(static_cast<int>(t.rows.size())));
}

Tabloid affine_evacuation_via_rsk(const Tabloid& t) {
  int d = static_cast<int>(t.rows.size());
  auto [p, q] = rsk(tabloid_to_biword(t));
  Tableau ep = evacuation_ssyt(p, t.n);
  Tableau eq = e_d_star(q, d);
  return biword_to_tabloid(rsk_inverse(ep, eq), t.n);
}

Tabloid evacuation_variant(const Tabloid& t, int c) {
  return promote(affine_evacuation(t), c);
}

Tabloid rectangle_evacuation(const Tabloid& t) {
  for (auto& row : t.rows)
    if (row.size() != t.rows[0].size())
      throw std::invalid_argument("rectangle_evacuation: shape is not a rectangle");
  std::vector<std::vector<int>> rows(t.rows.rbegin(), t.rows.rend());
  for (auto& row : rows)
    for (int& x : row) x = t.n + 1 - x;
  return Tabloid(t.n, std::move(rows));
}

}  // namespace affevac
