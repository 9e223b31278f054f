#include "affevac/domino.hpp"

#include <map>

namespace affevac {

namespace {

struct Removal {
  Partition smaller;
  std::vector<std::pair<int, int>> cells;
};

// All dominoes whose removal from the border leaves a Young diagram.
std::vector<Removal> border_dominoes(const Partition& lam) {
  std::vector<Removal> out;
  const auto& p = lam.parts;
  int m = static_cast<int>(p.size());
  for (int r = 0; r < m; ++r) {
    int below = (r + 1 < m) ? p[r + 1] : 0;
    if (p[r] - 2 >= below) {
      auto q = p;
      q[r] -= 2;
      out.push_back({Partition(q), {{r + 1, p[r] - 1}, {r + 1, p[r]}}});
    }
    if (r + 1 < m && p[r] == p[r + 1]) {
      int next = (r + 2 < m) ? p[r + 2] : 0;
      if (p[r + 1] - 1 >= next) {
        auto q = p;
        q[r] -= 1;
        q[r + 1] -= 1;
        out.push_back({Partition(q), {{r + 1, p[r]}, {r + 2, p[r]}}});
      }
    }
  }
  return out;
}

void enumerate_rec(const Partition& lam, std::vector<DominoTableau>& out,
                   const Partition& full) {
  if (lam.size() == 0) {
    out.push_back({full, {}});
    return;
  }
  if (lam.parts == std::vector<int>{1}) {
    out.push_back({full, {{{1, 1}}}});
    return;
  }
  int label = lam.size() / 2;
  for (const Removal& rem : border_dominoes(lam)) {
    size_t before = out.size();
    enumerate_rec(rem.smaller, out, full);
    for (size_t k = before; k < out.size(); ++k) {
      auto& pieces = out[k].pieces;
      int slot = label - (full.size() % 2 == 0 ? 1 : 0);
      pieces.resize(std::max(pieces.size(), static_cast<size_t>(slot + 1)));
      pieces[slot] = rem.cells;
    }
  }
}

}  // namespace

std::vector<DominoTableau> enumerate_domino_tableaux(const Partition& shape) {
  std::vector<DominoTableau> out;
  enumerate_rec(shape, out, shape);
  return out;
}

std::int64_t count_domino_tableaux(const Partition& shape) {
  static std::map<std::vector<int>, std::int64_t> memo;
  auto it = memo.find(shape.parts);
  if (it != memo.end()) return it->second;
  std::int64_t total;
  if (shape.size() == 0 || shape.parts == std::vector<int>{1}) {
    total = 1;
  } else {
    total = 0;
    for (const Removal& rem : border_dominoes(shape))
      total += count_domino_tableaux(rem.smaller);
  }
  memo[shape.parts] = total;
  return total;
}

}  // namespace affevac
