#ifndef XYQ_GEOMETRIC_HPP
#define XYQ_GEOMETRIC_HPP

// Berry connection of the rotated ground-state family, discrete
// Wilson-loop phases along parameter paths, the monopole field of the
// degeneracy sphere, and the zero-phase glancing-intersection loop.

#include <span>
#include <vector>

#include "xyq/eigen.hpp"
#include "xyq/model.hpp"

namespace xyq {

// Discretized path through the spherical chart. For closed paths the
// segment from the last point back to the first is implied; every point
// must stay off the degeneracy sphere and all on one side of it.
struct ParamPath {
  std::vector<SphericalParams> points;
  bool closed = false;
};

// Unwrapped accumulated phase (not reduced mod 2*pi) with convergence
// diagnostics.
struct PhaseResult {
  double phase = 0.0;
  int segment_count = 0;
  double max_segment_phase = 0.0;
};

// phi-component of the ground-state connection: -tan(theta/2)/r outside
// the sphere (twice the single spin-1/2 value), zero inside. The
// theta -> 0 limit is 0; theta near pi is rejected (DiracString).
double berry_connection(double r, double theta);

// Closed-loop phase at fixed (r, theta): 0 inside, -2 pi (1 - cos theta)
// = -(solid angle) outside.
double loop_phase_analytic(double r, double theta);

// Sum of per-segment overlap phases, each reduced into (-pi, pi]; the
// total is the unwrapped loop phase. Throws InsufficientResolution when
// any segment phase reaches pi/2.
PhaseResult accumulate_overlap_phases(std::span<const PureState4> states, bool closed);

// Uniform closed circle at fixed (r, theta), n points over phi in [0, 2 pi).
ParamPath make_circle_path(double r, double theta, int n);

// Discrete Wilson loop over the path: ground states sampled in the smooth
// gauge of the connection above (the even-sector state rephased by
// e^{i phi}, i.e. amplitudes (cos(theta/2), 0, 0, sin(theta/2) e^{i2phi})),
// so the unwrapped total converges to loop_phase_analytic. Gauge-invariant
// for closed paths.
PhaseResult wilson_loop_phase(const ParamPath& path);

// Line integral of the analytic connection along the phi-arc at fixed
// (r > 1, theta), midpoint rule: -(1 - cos theta)(phi_end - phi_start).
// Open path, so the value is gauge-dependent by construction; it is
// quoted in the gauge of berry_connection.
PhaseResult open_path_phase(double r, double theta, double phi_start, double phi_end,
                            int segments);

// Radial monopole field: -2 / r^2 outside the sphere, 0 inside.
double monopole_field(double r);

// Surface integral of the monopole field over the radius-r sphere; the
// field is sampled at cell midpoints and weighted with exact spherical
// zone areas. Converges to -8 pi (total flux of charge q = -2).
double monopole_flux(double r, int n_theta, int n_phi);

// Ground state of the x-rotated Hamiltonian at gamma = 1, closed form:
// a = cos(theta/2), b = sin(theta/2), tan(theta) = 1/lambda. Genuinely
// 2 pi periodic in phi (no sign flip).
PureState4 renner_teller_ground_state(double lambda, double phi);

// Wilson loop of the x-rotated family over phi in [0, 2 pi] at fixed
// lambda > 0; the glancing intersection contributes no geometric phase.
PhaseResult renner_teller_loop_phase(double lambda, int segments);

}  // namespace xyq

#endif
