#include "affevac/tabloid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affevac {

int residue_mod(int x, int n) {
  int r = x % n;
  return r <= 0 ? r + n : r;
}

Tabloid::Tabloid(int modulus, std::vector<std::vector<int>> r)
    : n(modulus), rows(std::move(r)) {
  std::vector<char> seen(n + 1, 0);
  int count = 0;
  for (auto& row : rows) {
    if (row.empty()) throw std::invalid_argument("tabloid rows must be nonempty");
    for (int& x : row) {
      x = residue_mod(x, n);
      if (seen[x]) throw std::invalid_argument("duplicate residue in tabloid");
      seen[x] = 1;
      ++count;
    }
    std::sort(row.begin(), row.end());
  }
  if (count != n) throw std::invalid_argument("tabloid must contain every residue once");
}

Composition Tabloid::shape() const {
  Composition s;
  for (auto& row : rows) s.push_back(static_cast<int>(row.size()));
  return s;
}

int Tabloid::row_of(int residue) const {
  int r = residue_mod(residue, n);
  for (size_t i = 0; i < rows.size(); ++i)
    if (std::binary_search(rows[i].begin(), rows[i].end(), r))
      return static_cast<int>(i) + 1;
  throw std::logic_error("residue not found");
}

std::set<int> tabloid_descents(const Tabloid& t) {
  std::set<int> des;
  for (int i = 1; i <= t.n; ++i)
    if (t.row_of(i + 1) > t.row_of(i)) des.insert(i);
  return des;
}

Tabloid rrss(const Partition& shape, int k) {
  int n = shape.size();
  std::vector<std::vector<int>> rows;
  int next = k;
  for (int len : shape.parts) {
    std::vector<int> row;
    for (int j = 0; j < len; ++j) row.push_back(residue_mod(next--, n));
    rows.push_back(std::move(row));
  }
  return Tabloid(n, std::move(rows));
}

static bool incomparable(const std::set<int>& a, const std::set<int>& b) {
  bool aNotInB = false, bNotInA = false;
  for (int x : a)
    if (!b.count(x)) aNotInB = true;
  for (int x : b)
    if (!a.count(x)) bNotInA = true;
  return aNotInB && bNotInA;
}

std::vector<KnuthNeighbor> knuth_neighbors(const Tabloid& t) {
  std::vector<KnuthNeighbor> out;
  std::set<int> des = tabloid_descents(t);
  for (int i = 1; i <= t.n; ++i) {
    int j = residue_mod(i + 1, t.n);
    int ri = t.row_of(i), rj = t.row_of(j);
    if (ri == rj) continue;
    auto rows = t.rows;
    auto swap_entry = [&](int row, int from, int to) {
      auto& v = rows[row - 1];
      *std::find(v.begin(), v.end(), from) = to;
    };
    swap_entry(ri, i, j);
    swap_entry(rj, j, i);
    Tabloid tp(t.n, std::move(rows));
    std::set<int> desp = tabloid_descents(tp);
    if (!incomparable(des, desp)) continue;
    // Type k: the descent moves between k and k+1 across the two tabloids.
    std::set<int> types;
    for (int k = 1; k <= t.n; ++k) {
      int k1 = residue_mod(k + 1, t.n);
      bool kT = des.count(k), kTp = desp.count(k);
      bool k1T = des.count(k1), k1Tp = desp.count(k1);
      if ((kT && !kTp && k1Tp && !k1T) || (kTp && !kT && k1T && !k1Tp))
        types.insert(k);
    }
    bool dup = false;
    for (auto& nb : out)
      if (nb.tabloid == tp) dup = true;
    if (!dup) out.push_back(KnuthNeighbor{tp, types});
  }
  return out;
}

Tabloid promote(const Tabloid& t, int steps) {
  auto rows = t.rows;
  for (auto& row : rows)
    for (int& x : row) x = residue_mod(x + steps, t.n);
  return Tabloid(t.n, std::move(rows));
}

static void enumerate_rec(const Composition& shape, int next, int n,
                          std::vector<std::vector<int>>& rows,
                          std::vector<Tabloid>& out) {
  if (next > n) {
    out.push_back(Tabloid(n, rows));
    return;
  }
  for (size_t r = 0; r < shape.size(); ++r) {
    if (static_cast<int>(rows[r].size()) == shape[r]) continue;
    rows[r].push_back(next);
    enumerate_rec(shape, next + 1, n, rows, out);
    rows[r].pop_back();
  }
}

std::vector<Tabloid> enumerate_tabloids(const Composition& shape) {
  int n = 0;
  for (int s : shape) n += s;
  std::vector<std::vector<int>> rows(shape.size());
  std::vector<Tabloid> out;
  enumerate_rec(shape, 1, n, rows, out);
  return out;
}

Tabloid parse_tabloid(const std::string& text, int modulus) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string rowText;
  int count = 0;
  while (std::getline(ss, rowText, '|')) {
    std::vector<int> row;
    std::stringstream rs(rowText);
    int x;
    while (rs >> x) {
      row.push_back(x);
      ++count;
    }
    if (row.empty()) throw std::invalid_argument("empty tabloid row in \"" + text + "\"");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty tabloid text");
  return Tabloid(modulus > 0 ? modulus : count, std::move(rows));
}

std::string format_tabloid(const Tabloid& t) {
  std::string s;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r) s += "|";
    for (size_t j = 0; j < t.rows[r].size(); ++j) {
      if (j) s += " ";
      s += std::to_string(t.rows[r][j]);
    }
  }
  return s;
}

}  // namespace affevac
