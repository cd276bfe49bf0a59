#ifndef XYQ_MODEL_HPP
#define XYQ_MODEL_HPP

// Two-qubit XY model in a transverse field:
//
//   H(lambda, gamma) = -(1+gamma)/2 sx.sx - (1-gamma)/2 sy.sy
//                      - lambda/2 (sz x 1 + 1 x sz)
//
// in the computational basis {|00>, |01>, |10>, |11>}, together with its
// z-rotated family (corner phases e^{-+ i 2 phi}) and the x-rotated family
// used for the glancing intersection at gamma = 1.

#include <array>
#include <complex>
#include <cstddef>

#include "xyq/errors.hpp"

namespace xyq {

using cplx = std::complex<double>;

// Cartesian control point of the rotated Hamiltonian.
struct ModelParams {
  double lambda = 0.0;  // transverse field
  double gamma = 0.0;   // anisotropy
  double phi = 0.0;     // z-rotation angle, radians
};

// Spherical chart (r, theta, phi) of parameter space: lambda = r cos(theta),
// gamma = r sin(theta); phi is the rotation angle and passes through.
struct SphericalParams {
  double r = 0.0;      // >= 0
  double theta = 0.0;  // in [0, pi]
  double phi = 0.0;
};

// Dense complex Hermitian matrix, dimension 2 or 4, row-major storage.
// Builders fill the lower triangle and mirror-conjugate it so the
// Hermiticity invariant holds bit-exactly.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int dimension) : dim_(dimension) { e_.fill(cplx{}); }

  int dim() const { return dim_; }
  cplx& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * dim_ + j)]; }
  const cplx& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i * dim_ + j)];
  }

  double trace_real() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i).real();
    return t;
  }

  double frobenius_norm() const;

 private:
  int dim_;
  std::array<cplx, 16> e_;
};

// Normalized two-qubit pure state; amp[0..3] multiply |00>,|01>,|10>,|11>.
struct PureState4 {
  std::array<cplx, 4> amp{};

  double norm_sq() const {
    return std::norm(amp[0]) + std::norm(amp[1]) + std::norm(amp[2]) + std::norm(amp[3]);
  }
};

// <a|b> with the physics convention (conjugate on the left).
cplx inner_product(const PureState4& a, const PureState4& b);

// e^{i angle} with exact values on multiples of pi/2, so quarter-turn
// rotations produce exact signs and the pi-periodic corner phases reduce
// to bit-identical entries.
cplx unit_phase(double angle);

// Eq.-pattern matrix -[[l,0,0,g],[0,0,1,0],[0,1,0,0],[g,0,0,-l]].
HermitianMatrix build_hamiltonian(double lambda, double gamma);

// z-rotated family: corner entries -gamma e^{-+ i 2 phi}; exactly
// pi-periodic in phi.
HermitianMatrix build_rotated_hamiltonian(double lambda, double gamma, double phi);

// 2x2 block on span{|00>,|11>}: -[[l, g e^{-i2phi}],[g e^{+i2phi}, -l]].
HermitianMatrix build_even_block(double lambda, double gamma, double phi);

// Ux(phi)^dag H(lambda,1) Ux(phi) with Ux = exp[-i phi/2 (sx x 1 + 1 x sx)],
// computed by explicit 4x4 conjugation.
HermitianMatrix build_x_rotated_hamiltonian(double lambda, double phi);

ModelParams spherical_to_model(const SphericalParams& s);

// Inverse chart. theta = atan2(|gamma|, lambda) stays in [0, pi]; a
// negative gamma is folded to |gamma| with the azimuth advanced by pi/2,
// which flips the sign of the e^{-i2phi} corner and so maps to the same
// Hamiltonian. Throws OriginUndefined for r < 1e-15.
SphericalParams model_to_spherical(const ModelParams& p);

// Adjoint rotation on states: amplitudes scaled by (e^{i phi},1,1,e^{-i phi}).
PureState4 apply_uz(const PureState4& state, double phi);

}  // namespace xyq

#endif
