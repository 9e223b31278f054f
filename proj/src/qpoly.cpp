#include "affevac/qpoly.hpp"

#include <stdexcept>

namespace affevac {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::constant(long long c) {
  return QPolynomial({BigInt(c)});
}

QPolynomial QPolynomial::monomial(long long c, int degree) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

BigInt QPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

BigInt QPolynomial::eval(const BigInt& x) const {
  BigInt r = 0;
  for (int k = degree(); k >= 0; --k) r = r * x + coeffs_[k];
  return r;
}

QPolynomial QPolynomial::reverse(int deg) const {
  if (degree() > deg) throw std::invalid_argument("reverse: degree too small");
  std::vector<BigInt> v(deg + 1, 0);
  for (int k = 0; k <= degree(); ++k) v[deg - k] = coeffs_[k];
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return QPolynomial();
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  *this = *this + o;
  return *this;
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return QPolynomial();
  if (degree() < o.degree()) throw std::invalid_argument("inexact polynomial division");
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(degree() - o.degree() + 1, 0);
  const BigInt& lead = o.coeffs_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    BigInt c = rem[k + o.degree()];
    if (c % lead != 0) throw std::invalid_argument("inexact polynomial division");
    quot[k] = c / lead;
    for (int j = 0; j <= o.degree(); ++j) rem[k + j] -= quot[k] * o.coeffs_[j];
  }
  for (const BigInt& c : rem)
    if (c != 0) throw std::invalid_argument("inexact polynomial division");
  return QPolynomial(std::move(quot));
}

std::string QPolynomial::dense_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    if (k) s += " ";
    s += coeffs_[k].str();
  }
  return s;
}

std::string QPolynomial::sparse_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    BigInt c = coeffs_[k];
    if (c == 0) continue;
    if (!s.empty()) {
      s += (c > 0) ? " + " : " - ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    std::string mag = c.str();
    if (k == 0) {
      s += mag;
    } else {
      if (mag != "1") s += mag;
      s += (k == 1) ? "q" : "q^" + std::to_string(k);
    }
  }
  return s;
}

QPolynomial q_integer(int k) {
  std::vector<BigInt> v(k, 1);
  return QPolynomial(std::move(v));
}

QPolynomial q_factorial(int k) {
  QPolynomial p = QPolynomial::constant(1);
  for (int i = 2; i <= k; ++i) p = p * q_integer(i);
  return p;
}

QPolynomial q_binomial(int a, int b) {
  // qbin(a+b, a) = [a+b]! / ([a]! [b]!), an exact polynomial division.
  if (a < 0 || b < 0) throw std::invalid_argument("q_binomial: negative arguments");
  return q_factorial(a + b).divide_exact(q_factorial(a) * q_factorial(b));
}

QPolynomial hook_q_analogue(const Partition& lam) {
  QPolynomial p = q_factorial(lam.size());
  for (int h : hook_lengths(lam)) p = p.divide_exact(q_integer(h));
  return p;
}

}  // namespace affevac
