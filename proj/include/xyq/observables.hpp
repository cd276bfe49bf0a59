#ifndef XYQ_OBSERVABLES_HPP
#define XYQ_OBSERVABLES_HPP

// Concurrence and fidelity of two-qubit pure states, plus the
// ground-state surfaces over the (lambda, gamma) plane.

#include "xyq/model.hpp"

namespace xyq {

// C = 2 |a d - b c|, clamped into [0, 1].
double concurrence(const PureState4& state);

// Closed-form ground-state concurrence: 1 inside the crossing circle
// (and on it, by the odd-sector convention), |sin(theta)| outside.
// Throws OriginUndefined at (0, 0); the state route still gives 1 there.
double ground_concurrence(double lambda, double gamma);

// F = |<psi|chi>|^2, clamped into [0, 1].
double fidelity(const PureState4& psi, const PureState4& chi);

// Overlap of the ground state with the reference (|01> + |10>)/sqrt(2):
// exactly 1 for r <= 1 and 0 for r > 1. Unlike the concurrence this jumps
// on the whole circle, including the gamma axis.
double ground_fidelity_map(double lambda, double gamma);

}  // namespace xyq

#endif
