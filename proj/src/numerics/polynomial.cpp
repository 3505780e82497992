#include "k3reg/numerics/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

namespace k3reg::numerics {

namespace {

double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long v : coeffs) {
    c_.emplace_back(v);
  }
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, long long c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) {
    c_.pop_back();
  }
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) {
    return 0;
  }
  return c_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) {
    return {};
  }
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] += c_[i] * o.c_[j];
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(int e) const {
  IntPolynomial r = constant(1);
  for (int i = 0; i < e; ++i) {
    r = r * *this;
  }
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) {
    return {};
  }
  std::vector<BigInt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = c_[i] * static_cast<long long>(i);
  }
  return IntPolynomial(std::move(v));
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + BigRational(*it);
  }
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + to_double(*it);
  }
  return acc;
}

Complex IntPolynomial::evaluate(Complex x) const {
  Complex acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + to_double(*it);
  }
  return acc;
}

std::vector<double> IntPolynomial::taylor_shift(double x) const {
  // Repeated synthetic division by (t - x).
  std::vector<double> a(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) a[i] = to_double(c_[i]);
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n - 1; ++k) {
    for (int i = n - 2; i >= k; --i) {
      a[static_cast<std::size_t>(i)] += x * a[static_cast<std::size_t>(i) + 1];
    }
  }
  return a;
}

std::vector<double> IntPolynomial::real_roots() const {
  std::vector<double> out;
  if (degree() < 1) {
    return out;
  }
  std::vector<double> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = to_double(c_[i]);
  const IntPolynomial dp = derivative();
  for (const Complex& z : polynomial_roots(d)) {
    if (std::abs(z.imag()) > 1e-7 * std::max(1.0, std::abs(z))) {
      continue;
    }
    double x = z.real();
    for (int it = 0; it < 4; ++it) {
      const double fx = evaluate(x);
      const double dfx = dp.evaluate(x);
      if (dfx == 0.0) break;
      x -= fx / dfx;
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }),
            out.end());
  return out;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    const BigInt a = v < 0 ? BigInt(-v) : v;
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << (a != 1 ? "*" : "") << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

double RationalFunction::evaluate(double x) const {
  const double d = den.evaluate(x);
  if (d == 0.0) {
    throw SingularPointError("rational coefficient evaluated at a pole");
  }
  return num.evaluate(x) / d;
}

std::vector<double> RationalFunction::series(double x, int order) const {
  std::vector<double> n = num.taylor_shift(x);
  std::vector<double> d = den.taylor_shift(x);
  n.resize(static_cast<std::size_t>(order) + 1, 0.0);
  d.resize(static_cast<std::size_t>(order) + 1, 0.0);
  if (d[0] == 0.0) {
    throw SingularPointError("rational coefficient expanded at a pole");
  }
  std::vector<double> q(static_cast<std::size_t>(order) + 1, 0.0);
  for (int m = 0; m <= order; ++m) {
    double acc = n[static_cast<std::size_t>(m)];
    for (int i = 1; i <= m; ++i) {
      acc -= d[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(m - i)];
    }
    q[static_cast<std::size_t>(m)] = acc / d[0];
  }
  return q;
}

bool RationalODE::valid() const {
  return !coeffs.empty() && !coeffs.back().num.is_zero() &&
         std::all_of(coeffs.begin(), coeffs.end(),
                     [](const RationalFunction& r) { return !r.den.is_zero(); });
}

std::vector<double> RationalODE::coefficients_at(double x) const {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    out.push_back(c.evaluate(x));
  }
  return out;
}

std::vector<double> RationalODE::poles() const {
  std::vector<double> out;
  for (const auto& c : coeffs) {
    const auto r = c.den.real_roots();
    out.insert(out.end(), r.begin(), r.end());
  }
  // Zeros of the leading coefficient are singular points as well.
  if (!coeffs.empty()) {
    const auto r = coeffs.back().num.real_roots();
    out.insert(out.end(), r.begin(), r.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
            out.end());
  return out;
}

double RationalODE::pole_distance(double x) const {
  double best = std::numeric_limits<double>::infinity();
  for (double p : poles()) {
    best = std::min(best, std::abs(x - p));
  }
  return best;
}

std::vector<Complex> polynomial_roots(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  std::vector<Complex> out;
  if (c.size() < 2) {
    return out;
  }
  // Roots at the origin are split off before the companion solve.
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0.0) ++zeros;
  for (std::size_t i = 0; i < zeros; ++i) out.emplace_back(0.0, 0.0);
  c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
  if (c.size() == 2) {
    out.emplace_back(-c[0] / c[1], 0.0);
    return out;
  }
  if (c.size() < 2) {
    return out;
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v[static_cast<Eigen::Index>(i)] = c[i];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(v);
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
    out.push_back(solver.roots()[i]);
  }
  return out;
}

}  // namespace k3reg::numerics
