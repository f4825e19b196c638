#include "thr/exact_arith.hpp"

#include <algorithm>
#include <utility>

namespace thr {

std::vector<BigInt> stirling2_row(unsigned a) {
  std::vector<BigInt> row{1};  // S(0, 0)
  for (unsigned i = 1; i <= a; ++i) {
    std::vector<BigInt> next(i + 1, 0);
    for (unsigned b = 1; b <= i; ++b) {
      next[b] = (b < i ? BigInt(b * row[b]) : BigInt(0)) + row[b - 1];
    }
    row = std::move(next);
  }
  return row;
}

BigInt stirling2(unsigned a, unsigned b) {
  if (b > a) return 0;
  return stirling2_row(a)[b];
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

BigInt binomial(const BigInt& a, long b) {
  if (b < 0 || a < 0 || a < b) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

BigInt falling(const BigInt& x, unsigned j) {
  BigInt out = 1;
  for (unsigned i = 0; i < j; ++i) out *= x - i;
  return out;
}

BigInt double_falling(const BigInt& x, unsigned j) {
  BigInt out = 1;
  for (unsigned i = 0; i < j; ++i) out *= x - 2 * i;
  return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::linear(const BigInt& root) {
  return IntPolynomial(std::vector<BigInt>{-root, 1});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

BigInt poly_eval(const IntPolynomial& p, const BigInt& t) {
  BigInt acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial falling(const IntPolynomial& p, unsigned j) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (unsigned i = 0; i < j; ++i) out *= p - IntPolynomial::constant(i);
  return out;
}

IntPolynomial double_falling(const IntPolynomial& p, unsigned j) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (unsigned i = 0; i < j; ++i) out *= p - IntPolynomial::constant(2 * i);
  return out;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

IntPolynomial interpolate(std::span<const SamplePoint> points) {
  if (points.empty()) throw std::invalid_argument("interpolate: no sample points");
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (points[i].t == points[j].t)
        throw DuplicateAbscissa("interpolate: repeated abscissa t = " + to_string(points[i].t));

  // Divided differences in place: dd[i] ends as f[t_0, ..., t_i].
  std::vector<BigRational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = BigRational(points[i].value);
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(points[i].t - points[i - level].t);
      dd[i].canonicalize();
    }
  }

  // Expand the Newton form, innermost factor first.
  std::vector<BigRational> acc{dd[m - 1]};
  for (std::size_t step = m - 1; step-- > 0;) {
    const BigRational shift(points[step].t);
    std::vector<BigRational> next(acc.size() + 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * shift;
    }
    next[0] += dd[step];
    acc = std::move(next);
  }

  std::vector<BigInt> out;
  out.reserve(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    acc[i].canonicalize();
    if (acc[i].get_den() != 1)
      throw IntegralityViolation("interpolate: coefficient of t^" + std::to_string(i) + " is " +
                                 acc[i].get_str());
    out.push_back(acc[i].get_num());
  }
  return IntPolynomial(std::move(out));
}

}  // namespace thr
