#include "affevac/rigged.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace affevac {

namespace {

int column_length(const std::vector<int>& parts, int i) {
  int c = 0;
  for (int p : parts)
    if (p >= i) ++c;
  return c;
}

// Working state for the bijection: rows of each nu^(k) with riggings,
// in no particular order, plus the partial content.
struct WorkRow {
  int len;
  int rig;
};
using WorkState = std::vector<std::vector<WorkRow>>;

std::vector<int> lengths_of(const std::vector<WorkRow>& rows) {
  std::vector<int> v;
  for (const WorkRow& w : rows) v.push_back(w.len);
  return v;
}

int vacancy_work(const WorkState& state, const std::vector<int>& content, int k, int r) {
  auto alpha = [&](int level, int i) -> int {
    if (level == 0) return column_length(content, i);
    if (level > static_cast<int>(state.size())) return 0;
    return column_length(lengths_of(state[level - 1]), i);
  };
  int p = 0;
  for (int i = 1; i <= r; ++i)
    p += alpha(k - 1, i) + alpha(k + 1, i) - 2 * alpha(k, i);
  return p;
}

bool is_singular(const WorkState& state, const std::vector<int>& content, int k,
                 const WorkRow& row) {
  return row.rig == vacancy_work(state, content, k, row.len);
}

}  // namespace

int vacancy(const Configuration& config, int k, int r) {
  auto alpha = [&](int level, int i) -> int {
    if (level == 0) return column_length(config.mu.parts, i);
    if (level > static_cast<int>(config.nus.size())) return 0;
    return column_length(config.nus[level - 1].parts, i);
  };
  int p = 0;
  for (int i = 1; i <= r; ++i)
    p += alpha(k - 1, i) + alpha(k + 1, i) - 2 * alpha(k, i);
  return p;
}

void RiggedConfiguration::canonicalize() {
  for (size_t k = 0; k < config.nus.size(); ++k) {
    auto& parts = config.nus[k].parts;
    auto& rigs = riggings[k];
    std::vector<std::pair<int, int>> rows;
    for (size_t i = 0; i < parts.size(); ++i) rows.push_back({parts[i], rigs[i]});
    std::sort(rows.begin(), rows.end(), std::greater<>());
    for (size_t i = 0; i < rows.size(); ++i) {
      parts[i] = rows[i].first;
      rigs[i] = rows[i].second;
    }
  }
}

bool is_admissible(const Configuration& config, const Partition& lambda) {
  int m = static_cast<int>(lambda.parts.size());
  if (static_cast<int>(config.nus.size()) + 1 < m) return false;
  for (int k = 1; k <= static_cast<int>(config.nus.size()); ++k) {
    int expect = 0;
    for (int i = k; i < m; ++i) expect += lambda.parts[i];
    if (config.nus[k - 1].size() != expect) return false;
    for (int r = 1; r <= config.mu.size(); ++r)
      if (vacancy(config, k, r) < 0) return false;
  }
  return true;
}

RiggedConfiguration phi(const Tableau& t) {
  int m = static_cast<int>(t.rows.size());
  int d = 0;
  for (const auto& row : t.rows)
    for (int x : row) d = std::max(d, x);
  WorkState state(std::max(m - 1, 0));
  std::vector<int> content(d, 0);
  for (int letter = 1; letter <= d; ++letter) {
    // Cells holding this letter, left to right.
    std::vector<std::pair<int, int>> cells;  // (col, row), both 1-based
    for (int r = 1; r <= m; ++r)
      for (size_t c = 0; c < t.rows[r - 1].size(); ++c)
        if (t.rows[r - 1][c] == letter)
          cells.push_back({static_cast<int>(c) + 1, r});
    std::sort(cells.begin(), cells.end());
    for (auto [col, r] : cells) {
      (void)col;
      // Select singular strings against the pre-step configuration.
      std::vector<std::pair<int, int>> chosen;  // (level j, row index or -1)
      int bound = std::numeric_limits<int>::max();
      for (int j = r - 1; j >= 1; --j) {
        int best = -1;
        for (size_t i = 0; i < state[j - 1].size(); ++i) {
          const WorkRow& w = state[j - 1][i];
          if (w.len <= bound && is_singular(state, content, j, w) &&
              (best < 0 || w.len > state[j - 1][best].len))
            best = static_cast<int>(i);
        }
        chosen.push_back({j, best});
        bound = (best < 0) ? 0 : state[j - 1][best].len;
      }
      for (auto [j, idx] : chosen) {
        if (idx < 0)
          state[j - 1].push_back({1, 0});
        else
          state[j - 1][idx].len += 1;
      }
      ++content[letter - 1];
      for (auto [j, idx] : chosen) {
        WorkRow& w = (idx < 0) ? state[j - 1].back() : state[j - 1][idx];
        w.rig = vacancy_work(state, content, j, w.len);
      }
    }
  }
  RiggedConfiguration rc;
  rc.config.mu = Partition(content);
  for (auto& rows : state) {
    std::vector<int> parts, rigs;
    std::sort(rows.begin(), rows.end(),
              [](const WorkRow& a, const WorkRow& b) { return a.len > b.len; });
    for (const WorkRow& w : rows) {
      parts.push_back(w.len);
      rigs.push_back(w.rig);
    }
    rc.config.nus.push_back(Partition(parts));
    rc.riggings.push_back(rigs);
  }
  rc.canonicalize();
  return rc;
}

Tableau phi_inverse(const RiggedConfiguration& rc, const Partition& lambda) {
  const Configuration& config = rc.config;
  int m = static_cast<int>(lambda.parts.size());
  if (config.mu.size() != lambda.size())
    throw InvalidConfiguration("content and shape sizes differ");
  if (static_cast<int>(config.nus.size()) > std::max(m - 1, 0))
    throw InvalidConfiguration("too many partitions for the target shape");
  if (!is_admissible(config, lambda))
    throw InvalidConfiguration("configuration is not admissible");
  for (size_t k = 0; k < config.nus.size(); ++k)
    for (size_t i = 0; i < config.nus[k].parts.size(); ++i) {
      int rig = rc.riggings[k][i];
      int cap = vacancy(config, static_cast<int>(k) + 1, config.nus[k].parts[i]);
      if (rig < 0 || rig > cap) throw InvalidConfiguration("rigging out of range");
    }

  WorkState state(std::max(m - 1, 0));
  for (size_t k = 0; k < config.nus.size(); ++k)
    for (size_t i = 0; i < config.nus[k].parts.size(); ++i)
      state[k].push_back({config.nus[k].parts[i], rc.riggings[k][i]});
  std::vector<int> content = config.mu.parts;
  int d = static_cast<int>(content.size());

  std::vector<std::vector<int>> rowLetters(m);
  for (int letter = d; letter >= 1; --letter) {
    while (content[letter - 1] > 0) {
      std::vector<std::pair<int, int>> chosen;  // (level j, row index)
      int bound = 1, r = m;
      for (int j = 1; j <= m - 1; ++j) {
        int best = -1;
        for (size_t i = 0; i < state[j - 1].size(); ++i) {
          const WorkRow& w = state[j - 1][i];
          if (w.len >= bound && is_singular(state, content, j, w) &&
              (best < 0 || w.len < state[j - 1][best].len))
            best = static_cast<int>(i);
        }
        if (best < 0) {
          r = j;
          break;
        }
        chosen.push_back({j, best});
        bound = state[j - 1][best].len;
      }
      for (auto [j, idx] : chosen) state[j - 1][idx].len -= 1;
      --content[letter - 1];
      for (auto [j, idx] : chosen) {
        WorkRow& w = state[j - 1][idx];
        if (w.len > 0) w.rig = vacancy_work(state, content, j, w.len);
      }
      for (auto& rows : state)
        std::erase_if(rows, [](const WorkRow& w) { return w.len == 0; });
      rowLetters[r - 1].push_back(letter);
    }
  }

  std::vector<std::vector<int>> rows;
  for (auto& letters : rowLetters) {
    if (letters.empty()) break;
    std::sort(letters.begin(), letters.end());
    rows.push_back(letters);
  }
  try {
    Tableau t(rows);
    if (t.shape().parts != lambda.parts)
      throw InvalidConfiguration("recovered tableau has the wrong shape");
    return t;
  } catch (const std::invalid_argument& ex) {
    throw InvalidConfiguration(std::string("not in the image of the bijection: ") +
                               ex.what());
  }
}

RiggedConfiguration theta(const RiggedConfiguration& rc) {
  RiggedConfiguration out = rc;
  for (size_t k = 0; k < out.config.nus.size(); ++k)
    for (size_t i = 0; i < out.config.nus[k].parts.size(); ++i) {
      int len = out.config.nus[k].parts[i];
      out.riggings[k][i] =
          vacancy(out.config, static_cast<int>(k) + 1, len) - out.riggings[k][i];
    }
  out.canonicalize();
  return out;
}

int cc_config(const Configuration& config) {
  int total = 0;
  for (size_t k = 1; k <= config.nus.size(); ++k) {
    int maxPart = config.nus[k - 1].parts.empty() ? 0 : config.nus[k - 1].parts[0];
    for (int r = 1; r <= maxPart; ++r) {
      int a = column_length(config.nus[k - 1].parts, r);
      int b = (k < config.nus.size()) ? column_length(config.nus[k].parts, r) : 0;
      total += a * (a - b);
    }
  }
  return total;
}

int cc(const RiggedConfiguration& rc) {
  int total = cc_config(rc.config);
  for (const auto& rigs : rc.riggings) total = std::accumulate(rigs.begin(), rigs.end(), total);
  return total;
}

std::vector<Configuration> enumerate_admissible(const Partition& lambda,
                                                const Partition& mu) {
  int m = static_cast<int>(lambda.parts.size());
  std::vector<Configuration> out;
  std::vector<std::vector<Partition>> choices;
  for (int k = 1; k <= m - 1; ++k) {
    int size = 0;
    for (int i = k; i < m; ++i) size += lambda.parts[i];
    choices.push_back(partitions_of(size));
  }
  std::vector<Partition> current;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == choices.size()) {
      Configuration config{mu, current};
      if (is_admissible(config, lambda)) out.push_back(config);
      return;
    }
    for (const Partition& p : choices[k]) {
      current.push_back(p);
      self(self, k + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<RiggedConfiguration> enumerate_rigged(const Partition& lambda,
                                                  const Partition& mu) {
  std::vector<RiggedConfiguration> out;
  for (const Configuration& config : enumerate_admissible(lambda, mu)) {
    // Weakly decreasing rigging choices per equal-length block.
    std::vector<std::vector<int>> rigs(config.nus.size());
    auto rec = [&](auto&& self, size_t k, size_t i, int prevLen, int prevRig) -> void {
      if (k == config.nus.size()) {
        out.push_back({config, rigs});
        return;
      }
      if (i == config.nus[k].parts.size()) {
        self(self, k + 1, 0, -1, 0);
        return;
      }
      int len = config.nus[k].parts[i];
      int cap = vacancy(config, static_cast<int>(k) + 1, len);
      int hi = (len == prevLen) ? std::min(cap, prevRig) : cap;
      for (int s = hi; s >= 0; --s) {
        rigs[k].push_back(s);
        self(self, k, i + 1, len, s);
        rigs[k].pop_back();
      }
    };
    rec(rec, 0, 0, -1, 0);
  }
  return out;
}

std::string format_rigged(const RiggedConfiguration& rc) {
  std::string s;
  for (size_t k = 0; k < rc.config.nus.size(); ++k) {
    if (k) s += "\n";
    s += "nu(" + std::to_string(k + 1) + "):";
    if (rc.config.nus[k].parts.empty()) s += " -";
    for (size_t i = 0; i < rc.config.nus[k].parts.size(); ++i) {
      int len = rc.config.nus[k].parts[i];
      s += " " + std::to_string(len) + ":" + std::to_string(rc.riggings[k][i]) + "/" +
           std::to_string(vacancy(rc.config, static_cast<int>(k) + 1, len));
    }
  }
  return s;
}

}  // namespace affevac
