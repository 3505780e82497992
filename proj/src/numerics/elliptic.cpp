#include "k3reg/numerics/elliptic.hpp"

namespace k3reg::numerics {

double agm(double a, double b) { return agm<double>(a, b); }

double elliptic_K(double k) { return elliptic_K<double>(k); }

}  // namespace k3reg::numerics
