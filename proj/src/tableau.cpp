#include "affevac/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace affevac {

Tableau::Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw std::invalid_argument("empty interior tableau row");
    if (i && rows[i].size() > rows[i - 1].size())
      throw std::invalid_argument("tableau rows must weakly shorten");
    for (size_t j = 0; j + 1 < rows[i].size(); ++j)
      if (rows[i][j] > rows[i][j + 1])
        throw std::invalid_argument("tableau rows must weakly increase");
    if (i)
      for (size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i - 1][j] >= rows[i][j])
          throw std::invalid_argument("tableau columns must strictly increase");
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(parts);
}

int Tableau::size() const {
  int s = 0;
  for (auto& row : rows) s += static_cast<int>(row.size());
  return s;
}

std::vector<int> Tableau::content(int d) const {
  std::vector<int> c(d, 0);
  for (auto& row : rows)
    for (int x : row) {
      if (x < 1 || x > d) throw std::invalid_argument("entry outside alphabet");
      ++c[x - 1];
    }
  return c;
}

bool Tableau::is_standard() const {
  int n = size();
  std::vector<char> seen(n + 1, 0);
  for (auto& row : rows)
    for (int x : row) {
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = 1;
    }
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

bool Tableau::operator<(const Tableau& o) const { return rows < o.rows; }

Tableau schensted_insert(const Tableau& p, int x) {
  auto rows = p.rows;
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return Tableau(std::move(rows));
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
  return Tableau(std::move(rows));
}

Tableau insertion_tableau(const std::vector<int>& word) {
  Tableau p;
  for (int x : word) p = schensted_insert(p, x);
  return p;
}

std::pair<Tableau, Tableau> rsk(const TwoRowArray& array) {
  Tableau p, q;
  auto qRows = q.rows;
  for (size_t k = 0; k < array.bottom.size(); ++k) {
    Partition before = p.shape();
    p = schensted_insert(p, array.bottom[k]);
    Partition after = p.shape();
    size_t r = 0;
    while (r < before.parts.size() && before.parts[r] == after.parts[r]) ++r;
    if (r == qRows.size()) qRows.push_back({});
    qRows[r].push_back(array.top[k]);
  }
  return {p, Tableau(std::move(qRows))};
}

TwoRowArray rsk_inverse(const Tableau& p, const Tableau& q) {
  if (p.shape().parts != q.shape().parts)
    throw std::invalid_argument("rsk_inverse: shapes differ");
  auto pRows = p.rows;
  auto qRows = q.rows;
  std::vector<std::pair<int, int>> pairs;
  while (!pRows.empty()) {
    // Largest recording entry, rightmost column on ties: last inserted.
    int br = -1, bc = -1;
    for (size_t r = 0; r < qRows.size(); ++r) {
      int c = static_cast<int>(qRows[r].size()) - 1;
      if (br < 0 || qRows[r][c] > qRows[br][bc] ||
          (qRows[r][c] == qRows[br][bc] && c > bc)) {
        br = static_cast<int>(r);
        bc = c;
      }
    }
    int topVal = qRows[br][bc];
    qRows[br].pop_back();
    if (qRows[br].empty()) qRows.erase(qRows.begin() + br);
    int x = pRows[br].back();
    pRows[br].pop_back();
    if (pRows[br].empty()) pRows.erase(pRows.begin() + br);
    for (int r = br - 1; r >= 0; --r) {
      auto& row = pRows[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;  // rightmost entry strictly below x
      std::swap(*it, x);
    }
    pairs.push_back({topVal, x});
  }
  TwoRowArray array;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    array.top.push_back(it->first);
    array.bottom.push_back(it->second);
  }
  return array;
}

TwoRowArray tabloid_to_biword(const Tabloid& t) {
  TwoRowArray array;
  int d = static_cast<int>(t.rows.size());
  for (int r = d; r >= 1; --r)
    for (int x : t.rows[r - 1]) {
      array.top.push_back(d + 1 - r);
      array.bottom.push_back(x);
    }
  return array;
}

Tabloid biword_to_tabloid(const TwoRowArray& array, int n) {
  if (array.top.empty()) throw std::invalid_argument("empty biword");
  int d = *std::max_element(array.top.begin(), array.top.end());
  std::vector<std::vector<int>> rows(d);
  for (size_t k = 0; k < array.top.size(); ++k)
    rows[d - array.top[k]].push_back(array.bottom[k]);
  return Tabloid(n, std::move(rows));
}

std::optional<Tableau> standardize_tabloid(const Tabloid& t) {
  auto rows = t.rows;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i && rows[i].size() > rows[i - 1].size()) return std::nullopt;
    if (i)
      for (size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i - 1][j] >= rows[i][j]) return std::nullopt;
  }
  return Tableau(std::move(rows));
}

Tableau finite_evacuation(const Tableau& t) {
  if (t.rows.empty()) return t;
  int n = t.size();
  int m = static_cast<int>(t.rows.size());
  int width = static_cast<int>(t.rows[0].size());
  // 180-degree rotation with complemented entries, then jeu de taquin.
  std::vector<std::vector<int>> grid(m, std::vector<int>(width, -1));
  std::vector<int> shift(m);
  for (int i = 0; i < m; ++i) {
    const auto& src = t.rows[m - 1 - i];
    int len = static_cast<int>(src.size());
    shift[i] = width - len;
    for (int j = 0; j < len; ++j) grid[i][shift[i] + j] = n + 1 - src[len - 1 - j];
  }
  auto filled = [&](int r, int c) {
    return r < m && c < width && grid[r][c] != -1;
  };
  while (true) {
    int start = -1;
    for (int r = 0; r < m; ++r)
      if (shift[r] > 0 && (r + 1 == m || shift[r] > shift[r + 1])) start = r;
    if (start < 0) break;
    int r = start, c = --shift[start];
    while (true) {
      bool below = filled(r + 1, c), right = filled(r, c + 1);
      if (!below && !right) break;
      if (below && (!right || grid[r + 1][c] <= grid[r][c + 1])) {
        grid[r][c] = grid[r + 1][c];
        grid[r + 1][c] = -1;
        ++r;
      } else {
        grid[r][c] = grid[r][c + 1];
        grid[r][c + 1] = -1;
        ++c;
      }
    }
  }
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < m; ++r) {
    std::vector<int> row;
    for (int c = 0; c < width && grid[r][c] != -1; ++c) row.push_back(grid[r][c]);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

static Tableau from_word_with_shape(const std::vector<int>& word, const Tableau& like) {
  std::vector<std::vector<int>> rows(like.rows.size());
  size_t k = 0;
  for (size_t r = rows.size(); r-- > 0;)
    for (size_t j = 0; j < like.rows[r].size(); ++j) rows[r].push_back(word[k++]);
  return Tableau(std::move(rows));
}

Tableau ls_action(int i, const Tableau& u) {
  std::vector<int> word = u.reading_word();
  std::vector<size_t> stack, unmatched;
  for (size_t k = 0; k < word.size(); ++k) {
    if (word[k] == i + 1) {
      stack.push_back(k);
    } else if (word[k] == i) {
      if (!stack.empty())
        stack.pop_back();
      else
        unmatched.push_back(k);
    }
  }
  // Unmatched letters read i^alpha (i+1)^beta; rewrite as i^beta (i+1)^alpha.
  size_t beta = stack.size();
  unmatched.insert(unmatched.end(), stack.begin(), stack.end());
  for (size_t k = 0; k < unmatched.size(); ++k)
    word[unmatched[k]] = (k < beta) ? i : i + 1;
  return from_word_with_shape(word, u);
}

Tableau apply_w0(const Tableau& u, int d) {
  Tableau out = u;
  for (int k = 1; k < d; ++k)
    for (int i = k; i >= 1; --i) out = ls_action(i, out);
  return out;
}

Tableau evacuation_ssyt(const Tableau& u, int d) {
  std::vector<int> word = u.reading_word();
  std::reverse(word.begin(), word.end());
  for (int& x : word) x = d + 1 - x;
  return insertion_tableau(word);
}

Tableau e_d_star(const Tableau& u, int d) {
  return apply_w0(evacuation_ssyt(u, d), d);
}

int charge_word(const std::vector<int>& word) {
  int total = 0;
  std::vector<char> used(word.size(), 0);
  size_t remaining = word.size();
  while (remaining > 0) {
    int maxLetter = 0;
    for (size_t k = 0; k < word.size(); ++k)
      if (!used[k]) maxLetter = std::max(maxLetter, word[k]);
    // Rightmost available 1, then proceed leftward cyclically letter by letter.
    int pos = -1;
    for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k)
      if (!used[k] && word[k] == 1) {
        pos = k;
        break;
      }
    if (pos < 0) throw std::invalid_argument("charge: content is not a partition");
    std::vector<int> subwordPos{pos};
    used[pos] = 1;
    for (int v = 2; v <= maxLetter; ++v) {
      int found = -1;
      int sz = static_cast<int>(word.size());
      for (int step = 1; step <= sz; ++step) {
        int k = ((pos - step) % sz + sz) % sz;
        if (!used[k] && word[k] == v) {
          found = k;
          break;
        }
      }
      if (found < 0) throw std::invalid_argument("charge: content is not a partition");
      used[found] = 1;
      subwordPos.push_back(found);
      pos = found;
    }
    remaining -= maxLetter;
    int idx = 0;
    for (int v = 1; v < maxLetter; ++v) {
      if (subwordPos[v] > subwordPos[v - 1]) ++idx;
      total += idx;
    }
  }
  return total;
}

int charge(const Tableau& u) {
  std::vector<int> word = u.reading_word();
  int d = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
  std::vector<int> c = u.content(std::max(d, 1));
  if (!word.empty() && !is_weakly_decreasing(c))
    throw std::invalid_argument("charge requires partition content");
  return charge_word(word);
}

static void enumerate_cells(const Partition& shape, std::vector<int>& left,
                            std::vector<std::vector<int>>& rows, size_t r, size_t c,
                            std::vector<Tableau>& out) {
  if (r == shape.parts.size()) {
    out.push_back(Tableau(rows));
    return;
  }
  if (c == static_cast<size_t>(shape.parts[r])) {
    enumerate_cells(shape, left, rows, r + 1, 0, out);
    return;
  }
  int lo = (c > 0) ? rows[r][c - 1] : 1;
  int above = (r > 0) ? rows[r - 1][c] : 0;
  lo = std::max(lo, above + 1);
  for (int v = lo; v <= static_cast<int>(left.size()); ++v) {
    if (left[v - 1] == 0) continue;
    --left[v - 1];
    rows[r].push_back(v);
    enumerate_cells(shape, left, rows, r, c + 1, out);
    rows[r].pop_back();
    ++left[v - 1];
  }
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size()) return {};
  std::vector<int> left = content.parts;
  std::vector<std::vector<int>> rows(shape.parts.size());
  std::vector<Tableau> out;
  enumerate_cells(shape, left, rows, 0, 0, out);
  return out;
}

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  return enumerate_ssyt(shape, Partition(std::vector<int>(shape.size(), 1)));
}

Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string rowText;
  while (std::getline(ss, rowText, '/')) {
    std::vector<int> row;
    std::stringstream rs(rowText);
    int x;
    while (rs >> x) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

std::string format_tableau(const Tableau& t) {
  std::string s;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r) s += "/";
    for (size_t j = 0; j < t.rows[r].size(); ++j) {
      if (j) s += " ";
      s += std::to_string(t.rows[r][j]);
    }
  }
  return s;
}

}  // namespace affevac
