#pragma once

#include <utility>

#include "k3reg/numerics/polynomial.hpp"

namespace k3reg::picardfuchs {

using numerics::RationalODE;

/// 144 j^2 (j-1) f'' + 72 j (2j-1) f' - 5 f, variable j.
RationalODE decoupled_operator();

/// Third-order operator along the one-parameter family, variable t.
RationalODE cubic_ode();

/// Fourth-order operator on the sigma = 1 locus, variable s.
RationalODE quartic_ode();

/// The two second-order factors of the quartic operator, variable s.
std::pair<RationalODE, RationalODE> factor_odes();

struct PFSuite {
  RationalODE decoupled;
  RationalODE cubic_Yt;
  RationalODE quartic_sigma1;
  RationalODE factor1;
  RationalODE factor2;
};

PFSuite pf_suite();

}  // namespace k3reg::picardfuchs
