#include "xyq/model.hpp"

#include <cmath>
#include <numbers>

namespace xyq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOriginTol = 1e-15;

// Mirror the strict lower triangle into the upper one so that
// m(i,j) == conj(m(j,i)) holds bit-exactly.
void mirror_lower(HermitianMatrix& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < i; ++j) m(j, i) = std::conj(m(i, j));
}

}  // namespace

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

cplx inner_product(const PureState4& a, const PureState4& b) {
  cplx s{};
  for (int i = 0; i < 4; ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

cplx unit_phase(double angle) {
  const double quarter = kPi / 2.0;
  // remainder() is exact, so this detects exact multiples of pi/2 (as
  // doubles) and nothing else.
  if (std::remainder(angle, quarter) == 0.0) {
    auto k = static_cast<long long>(std::llround(angle / quarter)) % 4;
    if (k < 0) k += 4;
    switch (k) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  // Reduce first: two angles an exact multiple of 2*pi apart then share
  // the same reduced representative, giving bit-identical factors.
  const double t = std::remainder(angle, 2.0 * kPi);
  return {std::cos(t), std::sin(t)};
}

HermitianMatrix build_hamiltonian(double lambda, double gamma) {
  HermitianMatrix h(4);
  h(0, 0) = -lambda;
  h(3, 3) = lambda;
  h(2, 1) = -1.0;
  h(3, 0) = -gamma;
  mirror_lower(h);
  return h;
}

HermitianMatrix build_rotated_hamiltonian(double lambda, double gamma, double phi) {
  HermitianMatrix h(4);
  h(0, 0) = -lambda;
  h(3, 3) = lambda;
  h(2, 1) = -1.0;
  h(3, 0) = -gamma * unit_phase(2.0 * phi);  // corner -gamma e^{+i2phi}
  mirror_lower(h);
  return h;
}

HermitianMatrix build_even_block(double lambda, double gamma, double phi) {
  HermitianMatrix h(2);
  h(0, 0) = -lambda;
  h(1, 1) = lambda;
  h(1, 0) = -gamma * unit_phase(2.0 * phi);
  mirror_lower(h);
  return h;
}

HermitianMatrix build_x_rotated_hamiltonian(double lambda, double phi) {
  // Ux = u x u with u = cos(phi/2) I - i sin(phi/2) sx.
  const double c = std::cos(phi / 2.0);
  const double s = std::sin(phi / 2.0);
  const cplx is{0.0, s};
  const std::array<std::array<cplx, 2>, 2> u = {{{cplx{c, 0.0}, -is}, {-is, cplx{c, 0.0}}}};

  std::array<std::array<cplx, 4>, 4> ux{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) ux[2 * a + p][2 * b + q] = u[a][b] * u[p][q];

  const HermitianMatrix h0 = build_hamiltonian(lambda, 1.0);

  // t = H0 Ux, then r = Ux^dag t.
  std::array<std::array<cplx, 4>, 4> t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) t[i][j] += h0(i, k) * ux[k][j];
  std::array<std::array<cplx, 4>, 4> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += std::conj(ux[k][i]) * t[k][j];

  // Assemble symmetrically. The exact result has a real diagonal of the
  // form (d, 0, 0, -d); pairing entries with their negatives keeps the
  // trace identically zero.
  HermitianMatrix h(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) h(i, j) = r[i][j];
  h(0, 0) = r[0][0].real();
  h(1, 1) = r[1][1].real();
  h(2, 2) = -h(1, 1).real();
  h(3, 3) = -h(0, 0).real();
  mirror_lower(h);
  return h;
}

ModelParams spherical_to_model(const SphericalParams& s) {
  return {s.r * std::cos(s.theta), s.r * std::sin(s.theta), s.phi};
}

SphericalParams model_to_spherical(const ModelParams& p) {
  const double r = std::hypot(p.lambda, p.gamma);
  if (r < kOriginTol)
    throw OriginUndefined("model_to_spherical: polar angle undefined at the origin");
  const double theta = std::atan2(std::abs(p.gamma), p.lambda);
  const double phi = p.gamma < 0.0 ? p.phi + kPi / 2.0 : p.phi;
  return {r, theta, phi};
}

PureState4 apply_uz(const PureState4& state, double phi) {
  const cplx w = unit_phase(phi);
  PureState4 out = state;
  out.amp[0] *= w;
  out.amp[3] *= std::conj(w);
  return out;
}

}  // namespace xyq
