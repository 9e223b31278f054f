#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "affevac/partition.hpp"

namespace affevac {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient polynomial in q, dense, lowest degree first.
/// Canonical form trims trailing zero coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  static QPolynomial constant(long long c);
  static QPolynomial monomial(long long c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;

  /// q^deg * p(1/q); requires degree() <= deg.
  QPolynomial reverse(int deg) const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o);
  /// Exact division; throws if the remainder is nonzero.
  QPolynomial divide_exact(const QPolynomial& o) const;

  bool operator==(const QPolynomial&) const = default;

  std::string dense_string() const;   // "1 0 2 1" lowest degree first
  std::string sparse_string() const;  // "1 + 2q^2 + q^3"

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

QPolynomial q_integer(int k);    // [k]_q
QPolynomial q_factorial(int k);  // [k]!_q
/// Gaussian binomial qbin(a+b, a).
QPolynomial q_binomial(int a, int b);
/// f^lambda(q) = [n]!_q / prod [h_c]_q.
QPolynomial hook_q_analogue(const Partition& lam);

}  // namespace affevac
