// Acceptance gate: one pass/fail line per criterion. Criterion 10 is a
// conjecture comparison and is reported without gating the exit code
// (its two pinned initial values are still enforced).

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>

#include "affevac/domino.hpp"
#include "affevac/partition.hpp"
#include "affevac/poly.hpp"
#include "affevac/rigged.hpp"
#include "affevac/rmatrix.hpp"
#include "affevac/tableau.hpp"
#include "affevac/verify.hpp"

using namespace affevac;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, bool gating = true) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL")
            << " - " << what << "\n";
  if (!pass && gating) ++failures;
}

bool worked_examples() {
  auto [ap, bp] = r_matrix({2, 3, 4, 5, 5, 5, 7}, {1, 1, 1, 2, 4, 5, 5, 6, 6});
  bool ok = ap == std::vector<int>{2, 3, 4, 5, 5, 5, 5, 5, 7} &&
            bp == std::vector<int>{1, 1, 1, 2, 4, 6, 6};

  auto [p, q] = rsk(TwoRowArray{{1, 2, 2, 3, 3, 3, 3}, {6, 1, 4, 2, 3, 5, 7}});
  ok = ok && p == parse_tableau("1 2 3 5 7/4/6") && q == parse_tableau("1 2 3 3 3/2/3");

  ok = ok && affine_evacuation(parse_tabloid("2 3 5 7|1 4|6")) ==
                 parse_tabloid("2 4 6 7|1 3|5");

  Tableau t = parse_tableau("1 1 1 3 4/2 2/3 4/5");
  ok = ok && charge(t) == 4;
  RiggedConfiguration rc = phi(t);
  RiggedConfiguration want;
  want.config.mu = parse_partition("3,2,2,2,1");
  want.config.nus = {parse_partition("2,2,1"), parse_partition("2,1"),
                     Partition({1})};
  want.riggings = {{1, 0, 1}, {0, 0}, {0}};
  ok = ok && rc == want;
  RiggedConfiguration th = theta(rc);
  ok = ok && th.riggings[0] == std::vector<int>{2, 1, 0} && cc(th) == 12;

  RiggedConfiguration figBefore, figAfter;
  figBefore.config.mu = parse_partition("3,2,2");
  figBefore.config.nus = {parse_partition("2,1"), Partition({1})};
  figBefore.riggings = {{0, 0}, {0}};
  figAfter.config.mu = parse_partition("3,2,2,1");
  figAfter.config.nus = {parse_partition("2,2"), parse_partition("2")};
  figAfter.riggings = {{1, 0}, {0}};
  ok = ok && phi(parse_tableau("1 1 1 3/2 2/3")) == figBefore &&
       phi(parse_tableau("1 1 1 3/2 2/3 4")) == figAfter;
  return ok;
}

bool evacuation_involution() {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Tabloid& u : enumerate_tabloids(lam.parts)) {
        Tabloid e = affine_evacuation(u);
        if (!(e.shape() == u.shape())) return false;
        if (!(affine_evacuation(e) == u)) return false;
        std::set<int> want;
        for (int k : tabloid_descents(u)) want.insert(residue_mod(n - k, n));
        if (tabloid_descents(e) != want) return false;
      }
  return true;
}

bool route_equivalence() {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Tabloid& u : enumerate_tabloids(lam.parts)) {
        Tabloid e = affine_evacuation(u);
        if (!(e == affine_evacuation_via_rsk(u))) return false;
        bool rect = std::all_of(lam.parts.begin(), lam.parts.end(),
                                [&](int p) { return p == lam.parts[0]; });
        if (rect && !(e == rectangle_evacuation(u))) return false;
      }
  return true;
}

bool counting_theorem() {
  if (count_self_evacuating(parse_partition("2,2")) != 4) return false;
  if (count_self_evacuating(parse_partition("1,1")) != 2) return false;
  for (int n = 2; n <= 8; ++n)
    for (const Partition& lam : partitions_of(n)) {
      std::int64_t t = count_self_evacuating(lam);
      if (t != static_cast<std::int64_t>(greens_polynomial(lam, rho2(n)).eval(-1)))
        return false;
      if (t != recurrence_rhs(lam)) return false;
    }
  return true;
}

bool kf_at_minus_one() {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        long long sign = b_statistic(lam) % 2 ? -1 : 1;
        if (count_ssyt_fixed(lam, mu) !=
            sign * static_cast<long long>(
                       kostka_foulkes_cocharge(lam, mu).eval(-1)))
          return false;
      }
    for (const Partition& mu : partitions_of(n)) {
      std::int64_t total = 0;
      for (const Partition& lam : partitions_of(n))
        total += count_self_evacuating_syt(lam) * count_ssyt_fixed(lam, mu);
      if (total != count_self_evacuating(mu)) return false;
    }
  }
  return true;
}

bool kss_properties() {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        int d = mu.length();
        for (const Tableau& t : enumerate_ssyt(lam, mu)) {
          RiggedConfiguration rc = phi(t);
          if (!(phi_inverse(rc, lam) == t)) return false;
          if (!(theta(rc) == phi(e_d_star(t, d)))) return false;
          if (cc(theta(rc)) != b_statistic(mu) - charge(t)) return false;
        }
        for (const RiggedConfiguration& rc : enumerate_rigged(lam, mu))
          if (!(phi(phi_inverse(rc, lam)) == rc)) return false;
      }
  return true;
}

bool fermionic_and_parity() {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : partitions_of(n))
        if (!(kostka_foulkes_fermionic(lam, mu) ==
              kostka_foulkes_cocharge(lam, mu)))
          return false;
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; a + b <= 12; ++b) {
      long long selfComp = 0;
      for (const Partition& eta : partitions_in_box(a, b))
        if (box_complement(eta, a, b) == eta) ++selfComp;
      if (q_binomial(a, b).eval(-1) != selfComp) return false;
    }
  for (int n = 1; n <= 7; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : partitions_of(n))
        for (const Configuration& config : enumerate_admissible(lam, mu)) {
          bool allEven = true;
          for (size_t k = 1; k <= config.nus.size(); ++k) {
            const auto& parts = config.nus[k - 1].parts;
            for (size_t i = 0; i < parts.size();) {
              size_t j = i;
              while (j < parts.size() && parts[j] == parts[i]) ++j;
              int mult = static_cast<int>(j - i);
              if (mult * vacancy(config, static_cast<int>(k), parts[i]) % 2)
                allEven = false;
              i = j;
            }
          }
          if (allEven && (cc_config(config) - b_statistic(lam)) % 2 != 0)
            return false;
        }
  return true;
}

bool stembridge_chain() {
  if (count_self_evacuating_syt(parse_partition("4,2")) != 3) return false;
  if (count_self_evacuating_syt(parse_partition("3,3,1")) != 3) return false;
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lam : partitions_of(n)) {
      std::int64_t u = count_self_evacuating_syt(lam);
      long long sign = b_statistic(lam) % 2 ? -1 : 1;
      if (u != hook_q_analogue(lam).eval(-1)) return false;
      if (u != count_domino_tableaux(lam)) return false;
      if (u != sign * character(lam, rho2(n))) return false;
    }
  return true;
}

bool rmatrix_algebra() {
  for (int n = 2; n <= 6; ++n)
    for (const Partition& lam : partitions_of(n)) {
      int d = lam.length();
      if (d < 2) continue;
      for (const Tabloid& u : enumerate_tabloids(lam.parts))
        for (int i = 1; i < d; ++i) {
          Tabloid r = apply_r(u, i);
          if (!(apply_r(r, i) == u)) return false;
          if (tabloid_descents(r) != tabloid_descents(u)) return false;
          if (!(promote(r, 1) == apply_r(promote(u, 1), i))) return false;
          if (!(insertion_tableau(tabloid_to_biword(r).bottom) ==
                insertion_tableau(tabloid_to_biword(u).bottom)))
            return false;
          if (i + 1 < d &&
              !(apply_r_word(u, {i, i + 1, i}) == apply_r_word(u, {i + 1, i, i + 1})))
            return false;
        }
    }
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 500; ++trial) {
    int n = std::uniform_int_distribution<int>(7, 9)(rng);
    auto shapes = partitions_of(n);
    const Partition& lam =
        shapes[std::uniform_int_distribution<size_t>(0, shapes.size() - 1)(rng)];
    if (lam.length() < 2) continue;
    std::vector<int> values(n);
    for (int i = 0; i < n; ++i) values[i] = i + 1;
    std::shuffle(values.begin(), values.end(), rng);
    std::vector<std::vector<int>> rows;
    int at = 0;
    for (int s : lam.parts) {
      rows.push_back({values.begin() + at, values.begin() + at + s});
      at += s;
    }
    Tabloid u(n, rows);
    int i = std::uniform_int_distribution<int>(1, lam.length() - 1)(rng);
    Tabloid r = apply_r(u, i);
    if (!(apply_r(r, i) == u)) return false;
    if (tabloid_descents(r) != tabloid_descents(u)) return false;
    if (!(promote(r, 1) == apply_r(promote(u, 1), i))) return false;
    if (!(insertion_tableau(tabloid_to_biword(r).bottom) ==
          insertion_tableau(tabloid_to_biword(u).bottom)))
      return false;
  }
  return true;
}

int conjecture_report() {
  std::cout << "  t'(lambda) vs Q^lambda_{rho2'(n)}(-1), even n <= 8:\n";
  int mismatches = 0;
  for (int n = 2; n <= 8; n += 2)
    for (const Partition& lam : partitions_of(n)) {
      std::int64_t tp = count_variant_fixed(lam, 1);
      std::int64_t gp = static_cast<std::int64_t>(
          greens_polynomial(lam, rho2(n, true)).eval(-1));
      if (tp != gp) ++mismatches;
      std::cout << "    <" << format_partition(lam) << "> t'=" << tp
                << " greens'=" << gp << (tp == gp ? "" : "  MISMATCH") << "\n";
    }
  return mismatches;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  report(1, worked_examples(), "worked-example regression");
  report(2, evacuation_involution(),
         "evacuation involution, shape, descent complement (n <= 7)");
  report(3, route_equivalence(), "R-matrix = RSK = rectangle routes (n <= 7)");
  report(4, counting_theorem(), "t = Green's at -1 = recurrence (n <= 8)");
  report(5, kf_at_minus_one(), "KF at -1 and t = sum u*v (n <= 6)");
  report(6, kss_properties(), "theta/phi compatibility and cc identity (n <= 6)");
  report(7, fermionic_and_parity(),
         "fermionic formula, q-binomial at -1, parity lemma");
  report(8, stembridge_chain(), "Stembridge chain (n <= 8)");
  report(9, rmatrix_algebra(), "R-matrix algebra, exhaustive + randomized");

  bool pinned = count_variant_fixed(Partition({2}), 1) == 1 &&
                count_variant_fixed(parse_partition("1,1"), 1) == 0;
  int mismatches = conjecture_report();
  report(10, pinned && mismatches == 0,
         "conjecture table (reporting only; pinned initial values gated)",
         /*gating=*/false);
  if (!pinned) ++failures;

  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << dt.count() << " ms)\n";
  return failures == 0 ? 0 : 1;
}
