#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "affevac/partition.hpp"
#include "affevac/poly.hpp"
#include "affevac/qpoly.hpp"
#include "affevac/tableau.hpp"

using namespace affevac;

TEST_CASE("characters") {
  CHECK(character(parse_partition("2,2"), parse_partition("2,2")) == 2);
  CHECK(character(parse_partition("2,1"), parse_partition("1,1,1")) == 2);
  CHECK(character(parse_partition("1,1,1"), parse_partition("3")) == 1);
  for (int n = 1; n <= 8; ++n) {
    Partition ones(std::vector<int>(n, 1));
    for (const Partition& lam : partitions_of(n)) {
      CHECK(character(lam, ones) == hook_length_count(lam));
      for (const Partition& rho : partitions_of(n))
        CHECK(character(Partition({n}), rho) == 1);
    }
  }
}

TEST_CASE("character orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    auto shapes = partitions_of(n);
    for (const Partition& lam : shapes)
      for (const Partition& mu : shapes) {
        long long dot = 0;
        for (const Partition& rho : shapes)
          dot += factorial(n) / centralizer_size(rho) * character(lam, rho) *
                 character(mu, rho);
        CHECK(dot == (lam == mu ? factorial(n) : 0));
      }
  }
}

TEST_CASE("centralizer sizes") {
  CHECK(centralizer_size(parse_partition("2,2")) == 8);
  CHECK(centralizer_size(parse_partition("3,1")) == 3);
  CHECK(centralizer_size(Partition(std::vector<int>(4, 1))) == 24);
  for (int n = 1; n <= 7; ++n) {
    long long total = 0;
    for (const Partition& rho : partitions_of(n))
      total += factorial(n) / centralizer_size(rho);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("kostka-foulkes polynomials") {
  CHECK(kostka_foulkes(Partition({2}), parse_partition("1,1")) ==
        QPolynomial::monomial(1, 1));
  CHECK(kostka_foulkes(parse_partition("1,1"), parse_partition("1,1")) ==
        QPolynomial::constant(1));
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lam : partitions_of(n)) {
      CHECK(kostka_foulkes(lam, lam) == QPolynomial::constant(1));
      for (const Partition& mu : partitions_of(n)) {
        QPolynomial k = kostka_foulkes(lam, mu);
        CHECK(k.eval(1) ==
              static_cast<long long>(enumerate_ssyt(lam, mu).size()));
        CHECK(k.degree() <= b_statistic(mu));
        for (const BigInt& c : k.coeffs()) CHECK(c >= 0);
      }
    }
}

TEST_CASE("fermionic formula matches the charge route") {
  CHECK(kostka_foulkes_fermionic(Partition({2}), parse_partition("1,1")) ==
        QPolynomial::constant(1));
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lam : partitions_of(n)) {
      CHECK(kostka_foulkes_fermionic(lam, lam) ==
            QPolynomial::monomial(1, static_cast<int>(b_statistic(lam))));
      for (const Partition& mu : partitions_of(n))
        CHECK(kostka_foulkes_fermionic(lam, mu) ==
              kostka_foulkes_cocharge(lam, mu));
    }
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(2, 2).coeffs() == std::vector<BigInt>{1, 1, 2, 1, 1});
  CHECK(q_binomial(2, 2).eval(-1) == 2);
  CHECK(q_binomial(0, 5) == QPolynomial::constant(1));
  for (int a = 1; a <= 11; a += 2)
    for (int b = 1; a + b <= 12; b += 2)
      CHECK(q_binomial(a, b).eval(-1) == 0);
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; a + b <= 12; ++b) {
      long long selfComp = 0;
      for (const Partition& eta : partitions_in_box(a, b))
        if (box_complement(eta, a, b) == eta) ++selfComp;
      CHECK(q_binomial(a, b).eval(-1) == selfComp);
      CHECK(q_binomial(a, b) == q_binomial(b, a));
    }
}

TEST_CASE("greens polynomials") {
  for (int n = 2; n <= 7; ++n) {
    Partition ones(std::vector<int>(n, 1));
    for (const Partition& mu : partitions_of(n)) {
      CHECK(greens_polynomial(mu, ones).eval(1) == multinomial(mu.parts));
      for (const Partition& rho : partitions_of(n))
        CHECK(greens_polynomial(Partition({n}), rho) == QPolynomial::constant(1));
    }
  }
  CHECK(greens_polynomial(parse_partition("1,1"), Partition({2})).eval(-1) == 2);
}

TEST_CASE("rho2 cycle types") {
  CHECK(rho2(4) == parse_partition("2,2"));
  CHECK(rho2(5) == parse_partition("2,2,1"));
  CHECK(rho2(4, true) == parse_partition("2,1,1"));
  CHECK(rho2(6, true) == parse_partition("2,2,1,1"));
  CHECK(rho2(1) == Partition({1}));
  CHECK_THROWS_AS(rho2(5, true), std::invalid_argument);
}
