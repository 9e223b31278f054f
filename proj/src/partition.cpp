#include "affevac/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affevac {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  // Trailing zeros are tolerated on input and stripped.
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!is_weakly_decreasing(parts))
    throw std::invalid_argument("partition parts must be weakly decreasing");
  for (int x : parts)
    if (x < 0) throw std::invalid_argument("partition parts must be positive");
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts[i - 1];
}

bool is_weakly_decreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

Partition sort_to_partition(const Composition& mu) {
  std::vector<int> p = mu;
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

Partition conjugate(const Partition& lam) {
  std::vector<int> cols;
  if (!lam.parts.empty()) {
    cols.resize(lam.parts[0], 0);
    for (int p : lam.parts)
      for (int j = 0; j < p; ++j) cols[j]++;
  }
  return Partition(std::move(cols));
}

long long b_statistic(const Partition& lam) {
  long long b = 0;
  for (int i = 0; i < lam.length(); ++i) b += 1LL * i * lam.parts[i];
  return b;
}

std::vector<int> hook_lengths(const Partition& lam) {
  Partition conj = conjugate(lam);
  std::vector<int> hooks;
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j)
      hooks.push_back(lam.part(i) - j + conj.part(j) - i + 1);
  return hooks;
}

long long hook_length_count(const Partition& lam) {
  // Fine up to n ~ 20; the hook product divides n! exactly.
  long long den = 1;
  for (int h : hook_lengths(lam)) den *= h;
  return factorial(lam.size()) / den;
}

static void partitions_rec(int n, int maxPart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, maxPart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

static void box_rec(int rowsLeft, int maxPart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  out.push_back(Partition(cur));
  if (rowsLeft == 0) return;
  for (int p = maxPart; p >= 1; --p) {
    cur.push_back(p);
    box_rec(rowsLeft - 1, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  box_rec(rows, cols, cur, out);
  return out;
}

std::vector<Partition> partitions_of_in_box(int n, int rows, int cols) {
  std::vector<Partition> out;
  for (auto& p : partitions_in_box(rows, cols))
    if (p.size() == n) out.push_back(p);
  return out;
}

Partition box_complement(const Partition& eta, int rows, int cols) {
  std::vector<int> parts;
  for (int i = rows; i >= 1; --i) parts.push_back(cols - eta.part(i));
  return Partition(std::move(parts));
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long multinomial(const Composition& mu) {
  int n = std::accumulate(mu.begin(), mu.end(), 0);
  long long r = factorial(n);
  for (int m : mu) r /= factorial(m);
  return r;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& lam) {
  std::string s;
  for (int i = 0; i < lam.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(lam.parts[i]);
  }
  return s;
}

}  // namespace affevac
