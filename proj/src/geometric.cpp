#include "xyq/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xyq/errors.hpp"

namespace xyq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDiracTol = 1e-9;
constexpr double kSegmentLimit = kPi / 2.0;

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

void require_off_sphere(double r, const char* who) {
  if (std::abs(r - 1.0) <= kDegeneracyTol)
    throw OnDegeneracySphere(std::string(who) + ": point on the degeneracy sphere r = 1");
}

// Ground state along Wilson paths, in the gauge whose connection is
// berry_connection: outside the sphere the analytic ground state is
// rephased by e^{i phi}, removing the e^{-i phi} winding on |00>; inside
// it is the constant odd-sector state.
PureState4 wilson_ground_state(const SphericalParams& p) {
  const ModelParams m = spherical_to_model(p);
  GroundStateResult g = ground_state(m.lambda, m.gamma, m.phi);
  if (g.sector == Sector::Even) {
    const cplx w = unit_phase(p.phi);
    for (auto& x : g.state.amp) x *= w;
  }
  return g.state;
}

void validate_closed_path(const ParamPath& path, const char* who) {
  if (!path.closed) throw std::invalid_argument(std::string(who) + ": path must be closed");
  if (path.points.size() < 3)
    throw std::invalid_argument(std::string(who) + ": closed path needs at least 3 points");
  for (std::size_t k = 0; k + 1 < path.points.size(); ++k) {
    const auto& a = path.points[k];
    const auto& b = path.points[k + 1];
    if (a.r == b.r && a.theta == b.theta && a.phi == b.phi)
      throw std::invalid_argument(std::string(who) + ": consecutive points coincide");
  }
  bool any_inside = false;
  bool any_outside = false;
  for (const auto& p : path.points) {
    require_off_sphere(p.r, who);
    if (p.r < 1.0)
      any_inside = true;
    else
      any_outside = true;
  }
  if (any_inside && any_outside)
    throw SphereCrossing(std::string(who) + ": path straddles the degeneracy sphere");
}

}  // namespace

double berry_connection(double r, double theta) {
  if (!(r > 0.0)) throw std::invalid_argument("berry_connection: r must be positive");
  require_off_sphere(r, "berry_connection");
  if (theta >= kPi - kDiracTol)
    throw DiracString("berry_connection: diverges on the theta = pi ray");
  if (!(theta >= 0.0)) throw std::invalid_argument("berry_connection: theta outside [0, pi)");
  if (r < 1.0) return 0.0;
  // -(2 / (r sin t)) sin^2(t/2) = -tan(t/2) / r, finite as theta -> 0.
  return -std::tan(theta / 2.0) / r;
}

double loop_phase_analytic(double r, double theta) {
  if (!(r > 0.0)) throw std::invalid_argument("loop_phase_analytic: r must be positive");
  require_off_sphere(r, "loop_phase_analytic");
  if (!(theta >= 0.0 && theta < kPi))
    throw std::invalid_argument("loop_phase_analytic: theta outside [0, pi)");
  if (r < 1.0) return 0.0;
  return -2.0 * kPi * (1.0 - std::cos(theta));
}

PhaseResult accumulate_overlap_phases(std::span<const PureState4> states, bool closed) {
  const std::size_t n = states.size();
  const std::size_t segments = closed ? n : n - 1;

  PhaseResult res;
  res.segment_count = static_cast<int>(segments);
  KahanSum acc;
  for (std::size_t k = 0; k < segments; ++k) {
    const PureState4& a = states[k];
    const PureState4& b = states[(k + 1) % n];
    const cplx ov = inner_product(a, b);
    if (std::abs(ov) < 1e-12)
      throw InsufficientResolution(
          "accumulate_overlap_phases: consecutive states nearly orthogonal");
    const double seg = std::arg(ov);  // in (-pi, pi]
    if (std::abs(seg) >= kSegmentLimit)
      throw InsufficientResolution(
          "accumulate_overlap_phases: segment phase reached pi/2; refine the path");
    res.max_segment_phase = std::max(res.max_segment_phase, std::abs(seg));
    acc.add(seg);
  }
  res.phase = -acc.sum;
  return res;
}

ParamPath make_circle_path(double r, double theta, int n) {
  ParamPath path;
  path.closed = true;
  path.points.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    path.points.push_back({r, theta, 2.0 * kPi * k / n});
  return path;
}

PhaseResult wilson_loop_phase(const ParamPath& path) {
  validate_closed_path(path, "wilson_loop_phase");
  std::vector<PureState4> states;
  states.reserve(path.points.size());
  for (const auto& p : path.points) states.push_back(wilson_ground_state(p));
  return accumulate_overlap_phases(states, true);
}

PhaseResult open_path_phase(double r, double theta, double phi_start, double phi_end,
                            int segments) {
  require_off_sphere(r, "open_path_phase");
  if (r < 1.0) throw InsideSphere("open_path_phase: stated only for r > 1");
  if (!(theta > 0.0 && theta < kPi))
    throw std::invalid_argument("open_path_phase: theta outside (0, pi)");
  if (segments < 100) throw std::invalid_argument("open_path_phase: need >= 100 segments");

  const double h = (phi_end - phi_start) / segments;
  const double a_phi = berry_connection(r, theta);
  const double arc = r * std::sin(theta);  // line element per unit phi

  PhaseResult res;
  res.segment_count = segments;
  KahanSum acc;
  for (int k = 0; k < segments; ++k) {
    const double seg = a_phi * arc * h;  // connection is phi-independent
    res.max_segment_phase = std::max(res.max_segment_phase, std::abs(seg));
    acc.add(seg);
  }
  res.phase = acc.sum;
  return res;
}

double monopole_field(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("monopole_field: r must be positive");
  require_off_sphere(r, "monopole_field");
  return r < 1.0 ? 0.0 : -2.0 / (r * r);
}

double monopole_flux(double r, int n_theta, int n_phi) {
  if (r <= 1.0 + kDegeneracyTol)
    throw InsideSphere("monopole_flux: radius must lie outside the degeneracy sphere");
  if (n_theta < 16 || n_phi < 16)
    throw std::invalid_argument("monopole_flux: grid must be at least 16 x 16");

  const double b = monopole_field(r);
  const double dphi = 2.0 * kPi / n_phi;
  KahanSum acc;
  for (int i = 0; i < n_theta; ++i) {
    const double t0 = kPi * i / n_theta;
    const double t1 = kPi * (i + 1) / n_theta;
    // Exact zone area of the band, r^2 (cos t0 - cos t1) dphi per cell.
    const double band = r * r * (std::cos(t0) - std::cos(t1)) * dphi;
    for (int j = 0; j < n_phi; ++j) acc.add(b * band);
  }
  return acc.sum;
}

PureState4 renner_teller_ground_state(double lambda, double phi) {
  if (!(lambda >= 0.0))
    throw std::invalid_argument("renner_teller_ground_state: lambda must be >= 0");
  const double theta = std::atan2(1.0, lambda);
  const double a = std::cos(theta / 2.0);
  const double b = std::sin(theta / 2.0);
  const double c2 = std::cos(phi / 2.0) * std::cos(phi / 2.0);
  const double s2 = std::sin(phi / 2.0) * std::sin(phi / 2.0);
  const cplx side{0.0, 0.5 * (a + b) * std::sin(phi)};

  PureState4 st;
  st.amp = {a * c2 - b * s2, side, side, b * c2 - a * s2};
  const double n = std::sqrt(st.norm_sq());
  for (auto& x : st.amp) x /= n;
  return st;
}

PhaseResult renner_teller_loop_phase(double lambda, int segments) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("renner_teller_loop_phase: lambda must be > 0");
  if (segments < 100)
    throw std::invalid_argument("renner_teller_loop_phase: need >= 100 segments");

  std::vector<PureState4> states;
  states.reserve(static_cast<std::size_t>(segments));
  for (int k = 0; k < segments; ++k)
    states.push_back(renner_teller_ground_state(lambda, 2.0 * kPi * k / segments));
  return accumulate_overlap_phases(states, true);
}

}  // namespace xyq
