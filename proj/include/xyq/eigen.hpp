#ifndef XYQ_EIGEN_HPP
#define XYQ_EIGEN_HPP

// Eigensystems of the two-qubit XY Hamiltonians.
//
// Two independent routes are provided on purpose: closed-form expressions
// for the block-diagonal family, and a cyclic complex Jacobi solver that
// shares no code with them and serves as a numerical cross-check.

#include <array>
#include <vector>

#include "xyq/model.hpp"

namespace xyq {

enum class Sector { Even, Odd, Degenerate };

// Eigenvalues ascending (ties ordered odd before even); eigenvector i is
// paired with eigenvalue i; sector tags are assigned for dimension 4 by
// dominant subspace weight.
struct EigenSystem {
  int dimension = 0;
  std::vector<double> eigenvalues;
  std::vector<std::array<cplx, 4>> eigenvectors;  // unused tail entries stay zero
  std::vector<Sector> sectors;                    // dimension-4 systems only
};

struct GroundStateResult {
  PureState4 state;
  double energy = 0.0;
  Sector sector = Sector::Odd;
  double gap = 0.0;  // energy to the first excited level
};

// Points with | r - 1 | at or below this are treated as level crossings.
inline constexpr double kDegeneracyTol = 1e-9;

// Closed-form eigensystem of the rotated Hamiltonian: even sector
// +-sqrt(lambda^2+gamma^2) with half-angle eigenvectors carrying
// e^{-+ i phi} phases, odd sector +-1 with (|01> -+ |10>)/sqrt(2).
EigenSystem analytic_eigensystem(double lambda, double gamma, double phi);

// Cyclic complex Jacobi rotations until the off-diagonal Frobenius norm
// drops below 1e-13 times the matrix norm. Independent of the closed
// forms above. Throws NoConvergence after 100 sweeps.
EigenSystem jacobi_eigensystem(const HermitianMatrix& h);

// Instantaneous ground state in the e^{-+ i phi} gauge; on the crossing
// circle (within kDegeneracyTol) the odd-sector state is returned and the
// sector is flagged Degenerate.
GroundStateResult ground_state(double lambda, double gamma, double phi);

// | sqrt(lambda^2 + gamma^2) - 1 |, the gap between the two lowest levels.
double energy_gap(double lambda, double gamma);

// Rephase so the largest-modulus component is real and nonnegative.
// Comparison helper; path integrators use raw vectors.
std::array<cplx, 4> canonical_gauge(const std::array<cplx, 4>& v);

}  // namespace xyq

#endif
