#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/float128.hpp>

namespace k3reg {

using Complex = std::complex<double>;

/// Software quad precision used by the extended-precision mode.
using Quad = boost::multiprecision::float128;

enum class Precision { Double, Extended };

/// A point of the Riemann sphere. The point at infinity carries an explicit
/// flag; its finite part is zero and must not be read.
struct SpherePoint {
  Complex value{};
  bool infinite = false;

  static SpherePoint finite(Complex z) { return {z, false}; }
  static SpherePoint at_infinity() { return {Complex{}, true}; }

  bool is_finite() const { return !infinite; }
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a registered pole or branch point.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameter choice for which a formula has a vanishing denominator.
class DegenerateParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace k3reg
