#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "k3reg/numerics/types.hpp"

namespace k3reg::numerics {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial with exact integer coefficients, lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(long long c) { return IntPolynomial({c}); }
  /// x - root
  static IntPolynomial linear_root(long long root) { return IntPolynomial({-root, 1}); }
  static IntPolynomial monomial(int degree, long long c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(int e) const;
  IntPolynomial derivative() const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  BigRational evaluate(const BigRational& x) const;
  double evaluate(double x) const;
  Complex evaluate(Complex x) const;

  /// Coefficients of p(x + h) as a polynomial in h (double arithmetic).
  std::vector<double> taylor_shift(double x) const;

  /// Real roots, refined by Newton steps.
  std::vector<double> real_roots() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Ratio of two integer polynomials.
struct RationalFunction {
  IntPolynomial num;
  IntPolynomial den = IntPolynomial::constant(1);

  double evaluate(double x) const;
  /// Taylor coefficients of num(x+h)/den(x+h) in h up to h^order.
  std::vector<double> series(double x, int order) const;
};

/// Linear ODE sum_k c_k(x) f^(k)(x) = 0 with rational-function coefficients.
struct RationalODE {
  std::string name;
  std::string variable = "x";
  /// coeffs[k] multiplies f^(k); coeffs.size() == order + 1.
  std::vector<RationalFunction> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Leading coefficient not identically zero.
  bool valid() const;
  std::vector<double> coefficients_at(double x) const;
  /// Sorted real singular points: denominator roots and zeros of the
  /// leading coefficient.
  std::vector<double> poles() const;
  /// Distance from x to the nearest real pole (infinity if none).
  double pole_distance(double x) const;
};

/// Real and complex roots of a real polynomial given lowest degree first.
std::vector<Complex> polynomial_roots(const std::vector<double>& coeffs);

}  // namespace k3reg::numerics
