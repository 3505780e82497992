#include "k3reg/numerics/continued_fraction.hpp"

#include <algorithm>

namespace k3reg::numerics {

std::pair<BigInt, BigInt> convergent(const std::vector<long long>& terms) {
  BigInt p_prev = 1, p = 0;
  BigInt q_prev = 0, q = 1;
  if (terms.empty()) {
    return {0, 1};
  }
  p = terms[0];
  q = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const BigInt a = terms[i];
    const BigInt p_next = a * p + p_prev;
    const BigInt q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return {p, q};
}

double convergent_value(const std::vector<long long>& terms) {
  const auto [p, q] = convergent(terms);
  return BigRational(p, q).convert_to<double>();
}

std::size_t common_prefix(const std::vector<long long>& a, const std::vector<long long>& b) {
  const auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

}  // namespace k3reg::numerics
