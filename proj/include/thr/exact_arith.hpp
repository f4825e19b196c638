#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace thr {

using BigInt = mpz_class;
using BigRational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

class DuplicateAbscissa : public Error {
 public:
  using Error::Error;
};

/// S(a, b): partitions of an a-set into b nonempty blocks, with S(0, 0) = 1.
BigInt stirling2(unsigned a, unsigned b);

/// Row S(a, 0..a) of the Stirling triangle.
std::vector<BigInt> stirling2_row(unsigned a);

BigInt factorial(unsigned n);

/// C(a, b); zero whenever b < 0, b > a or a < 0.
BigInt binomial(long a, long b);
BigInt binomial(const BigInt& a, long b);

/// x (x - 1) ... (x - j + 1), empty product for j = 0.
BigInt falling(const BigInt& x, unsigned j);

/// x (x - 2) ... (x - 2j + 2), empty product for j = 0.
BigInt double_falling(const BigInt& x, unsigned j);

/// Dense polynomial in one variable t with integer coefficients.
///
/// Coefficients are stored in ascending order and the top stored
/// coefficient is nonzero, so the zero polynomial has no coefficients and
/// degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigInt& c);
  /// t - root
  static IntPolynomial linear(const BigInt& root);
  static IntPolynomial variable() { return linear(0); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i; zero beyond the degree.
  BigInt coefficient(std::size_t i) const;
  BigInt leading() const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Horner evaluation.
BigInt poly_eval(const IntPolynomial& p, const BigInt& t);

/// Falling factorial (p)_j of a polynomial argument.
IntPolynomial falling(const IntPolynomial& p, unsigned j);
IntPolynomial double_falling(const IntPolynomial& p, unsigned j);

std::string to_string(const BigInt& x);

struct SamplePoint {
  BigInt t;
  BigInt value;
};

/// Unique polynomial of degree < points.size() through all points.
///
/// Newton divided differences over exact rationals. Throws
/// DuplicateAbscissa on repeated t and IntegralityViolation when the
/// interpolant has a non-integral coefficient.
IntPolynomial interpolate(std::span<const SamplePoint> points);

}  // namespace thr
