#include "affevac/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "affevac/rigged.hpp"
#include "affevac/tableau.hpp"

namespace affevac {

namespace {

// Border strips removed via beta-numbers: first-column hook lengths.
long long mn_rec(std::vector<int> beta, std::vector<int> rho,
                 std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
  while (!beta.empty() && beta.back() == 0) {  // strip zero parts
    beta.pop_back();
    for (int& b : beta) --b;
  }
  if (rho.empty()) return beta.empty() ? 1 : 0;
  auto key = std::make_pair(beta, rho);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int t = rho.back();
  std::vector<int> rest(rho.begin(), rho.end() - 1);
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    total += (height % 2 ? -1 : 1) * mn_rec(std::move(next), rest, memo);
  }
  memo[key] = total;
  return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("character: sizes differ");
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  int m = static_cast<int>(lambda.parts.size());
  std::vector<int> beta;
  for (int i = 0; i < m; ++i) beta.push_back(lambda.parts[i] + (m - 1 - i));
  // rho is consumed from the back; sorted ascending there = largest first.
  std::vector<int> cycles = rho.parts;
  std::sort(cycles.begin(), cycles.end());
  return mn_rec(std::move(beta), std::move(cycles), memo);
}

QPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu) {
  QPolynomial total;
  for (const Tableau& t : enumerate_ssyt(lambda, mu))
    total += QPolynomial::monomial(1, charge(t));
  return total;
}

QPolynomial kostka_foulkes_cocharge(const Partition& lambda, const Partition& mu) {
  QPolynomial k = kostka_foulkes(lambda, mu);
  if (k.is_zero()) return k;
  return k.reverse(static_cast<int>(b_statistic(mu)));
}

QPolynomial kostka_foulkes_fermionic(const Partition& lambda, const Partition& mu) {
  QPolynomial total;
  for (const Configuration& config : enumerate_admissible(lambda, mu)) {
    QPolynomial term = QPolynomial::monomial(1, cc_config(config));
    for (size_t k = 0; k < config.nus.size(); ++k) {
      const auto& parts = config.nus[k].parts;
      for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int mult = static_cast<int>(j - i);
        int cap = vacancy(config, static_cast<int>(k) + 1, parts[i]);
        term = term * q_binomial(mult, cap);
        i = j;
      }
    }
    total += term;
  }
  return total;
}

QPolynomial greens_polynomial(const Partition& mu, const Partition& rho) {
  if (mu.size() != rho.size())
    throw std::invalid_argument("greens_polynomial: sizes differ");
  QPolynomial total;
  for (const Partition& lambda : partitions_of(mu.size())) {
    long long chi = character(lambda, rho);
    if (chi == 0) continue;
    total += QPolynomial::constant(chi) * kostka_foulkes_cocharge(lambda, mu);
  }
  return total;
}

Partition rho2(int n, bool primed) {
  if (n < 1) throw std::invalid_argument("rho2: n must be positive");
  std::vector<int> parts;
  if (primed) {
    if (n % 2 != 0) throw std::invalid_argument("rho2 primed requires even n");
    parts.assign(n / 2 - 1, 2);
    parts.push_back(1);
    parts.push_back(1);
  } else {
    parts.assign(n / 2, 2);
    if (n % 2) parts.push_back(1);
  }
  return Partition(parts);
}

long long centralizer_size(const Partition& rho) {
  long long z = 1;
  int run = 0;
  for (size_t i = 0; i < rho.parts.size(); ++i) {
    ++run;
    z *= rho.parts[i];
    if (i + 1 == rho.parts.size() || rho.parts[i + 1] != rho.parts[i]) {
      for (int f = 2; f <= run; ++f) z *= f;
      run = 0;
    }
  }
  return z;
}

}  // namespace affevac
