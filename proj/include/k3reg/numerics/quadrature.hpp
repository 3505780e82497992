#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "k3reg/numerics/types.hpp"

namespace k3reg::numerics {

enum class SingularityKind { InverseModulus, Logarithmic, SqrtEndpoint };

struct RegistryEntry {
  SpherePoint location;
  SingularityKind kind;
};

/// Annotated singular points. In 1D only the real part of finite entries is
/// used; in 2D entries become vertices of the initial mesh.
class SingularityRegistry {
 public:
  SingularityRegistry() = default;

  void add(Complex z, SingularityKind kind) {
    entries_.push_back({SpherePoint::finite(z), kind});
  }
  void add(double x, SingularityKind kind) { add(Complex(x, 0.0), kind); }
  void add_infinity(SingularityKind kind) {
    entries_.push_back({SpherePoint::at_infinity(), kind});
  }
  void append(const SingularityRegistry& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  const std::vector<RegistryEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Sorted distinct real locations strictly inside (a, b).
  std::vector<double> interior_points(double a, double b) const;

 private:
  std::vector<RegistryEntry> entries_;
};

template <class T, class Real = double>
struct QuadratureResult {
  T value{};
  Real err_abs{};
  std::size_t evals = 0;
  bool converged = false;
};

namespace detail {

// One integrator per thread; construction precomputes the abscissae.
template <class Real>
boost::math::quadrature::tanh_sinh<Real>& tanh_sinh_instance() {
  thread_local boost::math::quadrature::tanh_sinh<Real> instance(15);
  return instance;
}

template <class Real, class F>
QuadratureResult<Real, Real> tanh_sinh_piece(const F& f, Real a, Real b, Real rel_tol,
                                             std::size_t& evals, Real& l1_out) {
  using std::abs;
  QuadratureResult<Real, Real> out;
  Real err = 0;
  Real l1 = 0;
  auto& ts = tanh_sinh_instance<Real>();
  const bool finite = (boost::math::isfinite)(a) && (boost::math::isfinite)(b);
  try {
    if constexpr (std::is_invocable_v<F, Real, Real>) {
      if (finite) {
        auto counted = [&](Real x, Real xc) {
          ++evals;
          return f(x, xc);
        };
        out.value = ts.integrate(counted, a, b, rel_tol, &err, &l1);
      } else {
        // Infinite pieces: the complement is measured from the finite end.
        const bool left_finite = (boost::math::isfinite)(a);
        auto counted = [&](Real x) {
          ++evals;
          return f(x, left_finite ? a - x : b - x);
        };
        out.value = ts.integrate(counted, a, b, rel_tol, &err, &l1);
      }
    } else {
      auto counted = [&](Real x) {
        ++evals;
        return f(x);
      };
      out.value = ts.integrate(counted, a, b, rel_tol, &err, &l1);
    }
  } catch (const boost::math::evaluation_error&) {
    out.value = 0;
    out.err_abs = std::numeric_limits<Real>::infinity();
    out.converged = false;
    return out;
  }
  out.err_abs = err;
  out.converged = (boost::math::isfinite)(out.value) && err <= rel_tol * l1;
  l1_out += l1;
  return out;
}

}  // namespace detail

/// One-dimensional integral of f over [a, b] (endpoints may be infinite).
/// The interval is split at every registered interior point; each piece is
/// integrated with a double-exponential rule that tolerates algebraic and
/// logarithmic endpoint singularities. If f accepts (x, xc) it receives the
/// signed distance xc to the nearer endpoint of the piece (a - x on the left
/// half, b - x on the right), which avoids cancellation next to a root.
template <class Real, class F>
QuadratureResult<Real, Real> integrate_1d(const F& f, Real a, Real b,
                                          const SingularityRegistry& registry, Real rel_tol,
                                          Real abs_tol = 0) {
  using std::abs;
  QuadratureResult<Real, Real> total;
  if (a == b) {
    total.converged = true;
    return total;
  }
  if (b < a) {
    auto r = integrate_1d<Real>(f, b, a, registry, rel_tol, abs_tol);
    r.value = -r.value;
    return r;
  }
  std::vector<Real> cuts{a};
  for (double p : registry.interior_points(static_cast<double>(a), static_cast<double>(b))) {
    cuts.push_back(Real(p));
  }
  cuts.push_back(b);

  Real l1 = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto piece = detail::tanh_sinh_piece<Real>(f, cuts[i], cuts[i + 1], rel_tol, total.evals, l1);
    total.value += piece.value;
    total.err_abs += piece.err_abs;
  }
  // Cancelling integrands are judged against the L1 norm, as the rule itself does.
  Real target = rel_tol * l1;
  if (abs_tol > target) {
    target = abs_tol;
  }
  total.converged = (boost::math::isfinite)(total.value) && total.err_abs <= target;
  return total;
}

}  // namespace k3reg::numerics
