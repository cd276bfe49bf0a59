#include "xyq/observables.hpp"

#include <algorithm>
#include <cmath>

#include "xyq/eigen.hpp"
#include "xyq/errors.hpp"

namespace xyq {

double concurrence(const PureState4& state) {
  const double c =
      2.0 * std::abs(state.amp[0] * state.amp[3] - state.amp[1] * state.amp[2]);
  return std::min(c, 1.0);
}

double ground_concurrence(double lambda, double gamma) {
  const double r = std::hypot(lambda, gamma);
  if (r < 1e-15)
    throw OriginUndefined("ground_concurrence: closed form undefined at the origin");
  if (std::abs(r - 1.0) <= kDegeneracyTol || r < 1.0) return 1.0;
  return std::abs(gamma) / r;  // |sin(theta)|
}

double fidelity(const PureState4& psi, const PureState4& chi) {
  const double f = std::norm(inner_product(psi, chi));
  return std::min(f, 1.0);
}

double ground_fidelity_map(double lambda, double gamma) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  PureState4 reference;
  reference.amp = {0.0, inv_sqrt2, inv_sqrt2, 0.0};
  return fidelity(ground_state(lambda, gamma, 0.0).state, reference);
}

}  // namespace xyq
