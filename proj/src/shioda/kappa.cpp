#include "k3reg/shioda/kappa.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "k3reg/numerics/continued_fraction.hpp"
#include "k3reg/numerics/elliptic.hpp"
#include "k3reg/numerics/quadrature.hpp"

namespace k3reg::shioda {

namespace {

const ThetaSlice kStandard{};

template <class Real>
QRoots<Real> roots_checked(Real theta, Real theta_minus_one) {
  if (!(theta_minus_one > 0)) {
    throw DomainError("kappa: inner integrals need theta > 1");
  }
  return q_roots<Real>(theta, kStandard, theta_minus_one);
}

}  // namespace

template <class Real>
Real inner_numerator(Real theta, Real theta_minus_one) {
  using std::sqrt;
  const auto r = roots_checked(theta, theta_minus_one);
  // roots 0 > r+ > r-: imaginary half-period, r+ - r- = 2d
  return boost::math::constants::pi<Real>() / numerics::agm(sqrt(-r.r_minus), sqrt(2 * r.d));
}

template <class Real>
Real inner_denominator(Real theta, Real theta_minus_one) {
  using std::sqrt;
  const auto r = roots_checked(theta, theta_minus_one);
  return boost::math::constants::pi<Real>() /
         numerics::agm(sqrt(-r.r_minus), sqrt(-r.r_plus));
}

template double inner_numerator<double>(double, double);
template double inner_denominator<double>(double, double);
template Quad inner_numerator<Quad>(Quad, Quad);
template Quad inner_denominator<Quad>(Quad, Quad);

double inner_numerator_quadrature(double theta, double rel_tol) {
  const auto r = roots_checked(theta, theta - 1.0);
  const double rm = r.r_minus, rp = r.r_plus;
  auto f = [&](double w, double wc) {
    const double to_zero = wc > 0 ? wc : -w;
    const double from_rp = wc < 0 ? -wc : w - rp;
    return 1.0 / std::sqrt(to_zero * (w - rm) * from_rp);
  };
  return numerics::integrate_1d<double>(f, rp, 0.0, {}, rel_tol).value;
}

namespace {

double denominator_piece(double lo, double hi, double rm, double rp, double rel_tol) {
  auto f = [&](double w, double wc) {
    const double from_rm = (wc < 0 && lo == rm) ? -wc : w - rm;
    const double to_rp = (wc > 0 && hi == rp) ? wc : rp - w;
    return 1.0 / std::sqrt(-w * from_rm * to_rp);
  };
  return numerics::integrate_1d<double>(f, lo, hi, {}, rel_tol).value;
}

}  // namespace

double inner_denominator_quadrature(double theta, double rel_tol) {
  const auto r = roots_checked(theta, theta - 1.0);
  return denominator_piece(r.r_minus, r.r_plus, r.r_minus, r.r_plus, rel_tol);
}

double inner_denominator_folded(double theta, double rel_tol) {
  const auto r = roots_checked(theta, theta - 1.0);
  return 2.0 * denominator_piece(-1.0, r.r_plus, r.r_minus, r.r_plus, rel_tol);
}

namespace {

template <class Real>
struct Outer {
  Real num = 0;
  Real den = 0;
  Real num_err = 0;
  Real den_err = 0;
  std::size_t evals = 0;
  bool converged = true;

  void add(const numerics::QuadratureResult<Real, Real>& n,
           const numerics::QuadratureResult<Real, Real>& d) {
    num += n.value;
    den += d.value;
    num_err += n.err_abs;
    den_err += d.err_abs;
    evals += n.evals + d.evals;
    converged = converged && n.converged && d.converged;
  }
};

// Integral over theta in [lo, hi] of both inner integrals. Near theta = 1 the
// distance to the left end is taken from the quadrature complement.
template <class Real>
void theta_piece(Outer<Real>& acc, Real lo, Real hi, Real tol) {
  auto tm1 = [lo](Real th, Real xc) { return (lo == 1 && xc < 0) ? Real(-xc) : Real(th - 1); };
  auto fn = [&](Real th, Real xc) { return inner_numerator<Real>(th, tm1(th, xc)); };
  auto fd = [&](Real th, Real xc) { return inner_denominator<Real>(th, tm1(th, xc)); };
  acc.add(numerics::integrate_1d<Real>(fn, lo, hi, {}, tol),
          numerics::integrate_1d<Real>(fd, lo, hi, {}, tol));
}

// agm(a, b) for 0 < b << a, given log b; the correction is O((b/a)^2).
template <class Real>
Real agm_small(Real a, Real b, Real log_b) {
  using std::log;
  using std::sqrt;
  if (b > a * sqrt(std::numeric_limits<Real>::epsilon()) / 4) {
    return numerics::agm(a, b);
  }
  return boost::math::constants::pi<Real>() * a / (2 * (log(4 * a) - log_b));
}

// Integrands in s = 1/theta including the Jacobian. With
//   P + d = theta^3 A(s),  2d = theta^3 B(s),  -r+ = s^3 / A(s)
// the powers of theta cancel:
//   numerator   pi s^{-1/2} / agm(sqrt A, sqrt B)
//   denominator pi s^{-1/2} / agm(sqrt A, s^3 / sqrt A)
template <class Real>
struct ScaledRoots {
  Real sqrt_A;
  Real sqrt_B;
};

template <class Real>
ScaledRoots<Real> scaled(Real s, Real one_minus_s) {
  using std::sqrt;
  const Real s2 = s * s;
  const Real root = sqrt(one_minus_s * (1 + s));
  return {sqrt(4 - 3 * s2 + root * (4 - s2)), sqrt(2 * root * (4 - s2))};
}

template <class Real>
Real numerator_s(Real s, Real one_minus_s) {
  using std::sqrt;
  const auto r = scaled(s, one_minus_s);
  return boost::math::constants::pi<Real>() / (sqrt(s) * numerics::agm(r.sqrt_A, r.sqrt_B));
}

template <class Real>
Real denominator_s(Real s, Real one_minus_s) {
  using std::log;
  using std::sqrt;
  const auto r = scaled(s, one_minus_s);
  const Real b = s * s * s / r.sqrt_A;
  const Real log_b = 3 * log(s) - log(r.sqrt_A);
  return boost::math::constants::pi<Real>() / (sqrt(s) * agm_small(r.sqrt_A, b, log_b));
}

// s in [lo, hi]; near s = 1 the quadrature complement gives 1 - s.
template <class Real>
void s_piece(Outer<Real>& acc, Real lo, Real hi, Real tol) {
  auto oms = [hi](Real s, Real xc) { return (hi == 1 && xc > 0) ? Real(xc) : Real(1 - s); };
  auto fn = [&](Real s, Real xc) { return numerator_s<Real>(s, oms(s, xc)); };
  auto fd = [&](Real s, Real xc) { return denominator_s<Real>(s, oms(s, xc)); };
  acc.add(numerics::integrate_1d<Real>(fn, lo, hi, {}, tol),
          numerics::integrate_1d<Real>(fd, lo, hi, {}, tol));
}

template <class Real>
Outer<Real> substitution(Real tol) {
  Outer<Real> acc;
  s_piece<Real>(acc, Real(0), Real(1) / 10, tol);
  s_piece<Real>(acc, Real(1) / 10, Real(1) / 2, tol);
  s_piece<Real>(acc, Real(1) / 2, Real(1), tol);
  return acc;
}

template <class Real>
Outer<Real> extrapolation(Real tol, const std::vector<double>& Ts) {
  using std::log;
  using std::pow;
  using std::sqrt;
  if (Ts.size() < 5) {
    throw DomainError("kappa: extrapolation needs five truncation points");
  }
  Outer<Real> head;
  theta_piece<Real>(head, Real(1), Real(2), tol);
  theta_piece<Real>(head, Real(2), Real(10), tol);
  // Tail beyond T: T^{-1/2} (c0 + c1 log T) + T^{-5/2} (c2 + c3 log T) + ...
  const int n = static_cast<int>(Ts.size());
  using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  Mat A(n, 5);
  Vec bn(n), bd(n);
  Outer<Real> run = head;
  Real prev = 10;
  for (int i = 0; i < n; ++i) {
    const Real T = Ts[static_cast<std::size_t>(i)];
    theta_piece<Real>(run, prev, T, tol);
    prev = T;
    const Real lt = log(T);
    const Real h = 1 / sqrt(T);
    const Real h5 = pow(h, 5);
    A(i, 0) = 1;
    A(i, 1) = h;
    A(i, 2) = h * lt;
    A(i, 3) = h5;
    A(i, 4) = h5 * lt;
    bn(i) = run.num;
    bd(i) = run.den;
  }
  const auto qr = A.colPivHouseholderQr();
  const Vec xn = qr.solve(bn);
  const Vec xd = qr.solve(bd);
  Outer<Real> out = run;
  out.num = xn(0);
  out.den = xd(0);
  // The spread between the last two truncations bounds what the fit had to add.
  out.num_err = run.num_err;
  out.den_err = run.den_err;
  return out;
}

template <class Real>
KappaResult finish(const Outer<Real>& o, const KappaOptions& opts) {
  using std::abs;
  KappaResult r;
  r.precision = opts.precision;
  r.strategy = opts.strategy;
  r.numerator_q = static_cast<Quad>(o.num);
  r.denominator_q = static_cast<Quad>(o.den);
  r.kappa_q = r.numerator_q / r.denominator_q;
  r.numerator = static_cast<double>(o.num);
  r.denominator = static_cast<double>(o.den);
  r.kappa = static_cast<double>(r.kappa_q);
  r.numerator_err = static_cast<double>(o.num_err);
  r.denominator_err = static_cast<double>(o.den_err);
  r.kappa_err = r.kappa * (r.numerator_err / abs(r.numerator) + r.denominator_err / abs(r.denominator));
  r.evals = o.evals;
  r.converged = o.converged && r.kappa > 0 && std::isfinite(r.kappa);
  const Quad eps = std::numeric_limits<Real>::epsilon();
  Quad delta = r.kappa_err;
  if (delta < 16 * eps * r.kappa_q) delta = 16 * eps * r.kappa_q;
  r.cf_terms = numerics::continued_fraction<Quad>(r.kappa_q, 60, delta).terms;
  return r;
}

}  // namespace

KappaResult kappa(const KappaOptions& opts) {
  if (!(opts.rel_tol > 0)) {
    throw DomainError("kappa: rel_tol must be positive");
  }
  if (opts.precision == Precision::Double) {
    const double tol = opts.rel_tol;
    return finish(opts.strategy == TailStrategy::Substitution ? substitution<double>(tol)
                                                              : extrapolation<double>(tol, opts.truncations),
                  opts);
  }
  const Quad tol = opts.rel_tol;
  return finish(opts.strategy == TailStrategy::Substitution ? substitution<Quad>(tol)
                                                            : extrapolation<Quad>(tol, opts.truncations),
                opts);
}

CfReport cf_stability(double x_low, double delta_low, Quad x_high, Quad delta_high,
                      std::size_t terms) {
  CfReport rep;
  rep.terms_low = numerics::continued_fraction<double>(x_low, terms, delta_low).terms;
  rep.terms_high = numerics::continued_fraction<Quad>(x_high, terms, delta_high).terms;
  rep.stable_terms = numerics::common_prefix(rep.terms_low, rep.terms_high);
  rep.disclaimer =
      "A finite set of stable partial quotients says nothing about rationality or irrationality.";
  return rep;
}

CfReport kappa_cf_report(const KappaResult& low, const KappaResult& high, std::size_t terms) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double dl = std::max(low.kappa_err, 16 * eps * low.kappa);
  Quad dh = high.kappa_err;
  const Quad floor_h = Quad(16) * std::numeric_limits<Quad>::epsilon() * high.kappa_q;
  if (dh < floor_h) dh = floor_h;
  return cf_stability(low.kappa, dl, high.kappa_q, dh, terms);
}

}  // namespace k3reg::shioda
