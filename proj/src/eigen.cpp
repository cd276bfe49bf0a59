#include "xyq/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "xyq/errors.hpp"

namespace xyq {

namespace {

constexpr double kJacobiRelTol = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kTieTol = 1e-12;

double off_diagonal_norm(const HermitianMatrix& h) {
  double s = 0.0;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

Sector dominant_sector(const std::array<cplx, 4>& v) {
  const double even = std::norm(v[0]) + std::norm(v[3]);
  const double odd = std::norm(v[1]) + std::norm(v[2]);
  return even >= odd ? Sector::Even : Sector::Odd;
}

// Ascending sort; among levels equal to kTieTol the odd-sector vector
// comes first so output on the crossing circle is deterministic.
void sort_levels(EigenSystem& sys) {
  const int n = sys.dimension;
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return sys.eigenvalues[a] < sys.eigenvalues[b]; });

  EigenSystem out;
  out.dimension = n;
  for (int i : idx) {
    out.eigenvalues.push_back(sys.eigenvalues[static_cast<std::size_t>(i)]);
    out.eigenvectors.push_back(sys.eigenvectors[static_cast<std::size_t>(i)]);
    if (!sys.sectors.empty()) out.sectors.push_back(sys.sectors[static_cast<std::size_t>(i)]);
  }
  if (!out.sectors.empty()) {
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(out.eigenvalues[i + 1] - out.eigenvalues[i]) <= kTieTol &&
            out.sectors[i] == Sector::Even && out.sectors[i + 1] == Sector::Odd) {
          std::swap(out.eigenvalues[i], out.eigenvalues[i + 1]);
          std::swap(out.eigenvectors[i], out.eigenvectors[i + 1]);
          std::swap(out.sectors[i], out.sectors[i + 1]);
          swapped = true;
        }
      }
    }
  }
  sys = std::move(out);
}

}  // namespace

EigenSystem analytic_eigensystem(double lambda, double gamma, double phi) {
  const double r = std::hypot(lambda, gamma);
  // atan2(0, 0) = 0, so the origin falls out of the theta = 0 limit with
  // eigenvectors |00>, |11> at eigenvalue 0.
  const double theta = std::atan2(std::abs(gamma), lambda);
  const double phi_eff = gamma < 0.0 ? phi + std::numbers::pi / 2.0 : phi;

  const double ch = std::cos(theta / 2.0);
  const double sh = std::sin(theta / 2.0);
  const cplx em = unit_phase(-phi_eff);  // e^{-i phi} on |00>
  const cplx ep = std::conj(em);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  EigenSystem sys;
  sys.dimension = 4;
  sys.eigenvalues = {-r, -1.0, +1.0, +r};
  sys.eigenvectors = {
      {ch * em, 0.0, 0.0, sh * ep},    // even ground
      {0.0, inv_sqrt2, inv_sqrt2, 0.0},  // odd, energy -1
      {0.0, inv_sqrt2, -inv_sqrt2, 0.0}, // odd, energy +1
      {-sh * em, 0.0, 0.0, ch * ep},   // even excited
  };
  sys.sectors = {Sector::Even, Sector::Odd, Sector::Odd, Sector::Even};
  sort_levels(sys);
  return sys;
}

EigenSystem jacobi_eigensystem(const HermitianMatrix& h) {
  const int n = h.dim();
  HermitianMatrix a = h;
  std::array<std::array<cplx, 4>, 4> v{};
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  const double target = kJacobiRelTol * h.frobenius_norm();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= target) break;
    // Threshold cycling: early sweeps skip pivots that are negligible
    // against the current off-diagonal mass.
    const double thresh = sweep < 3 ? 0.2 * off / (n * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double habs = std::abs(a(p, q));
        if (habs == 0.0 || habs < thresh) continue;

        const cplx u = a(p, q) / habs;  // unit phase of the pivot
        const double apv = a(p, p).real();
        const double aqv = a(q, q).real();
        const double vartheta = (apv - aqv) / (2.0 * habs);
        const double t = (vartheta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(vartheta) + std::sqrt(vartheta * vartheta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // J differs from the identity only in rows/cols p, q:
        //   J[p][p] = c, J[p][q] = -s u, J[q][p] = s conj(u), J[q][q] = c.
        a(p, p) = apv * c * c + 2.0 * habs * c * s + aqv * s * s;
        a(q, q) = apv * s * s - 2.0 * habs * c * s + aqv * c * c;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip + s * std::conj(u) * aiq;
          a(i, q) = -s * u * aip + c * aiq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        for (int i = 0; i < n; ++i) {
          const cplx vip = v[i][p];
          const cplx viq = v[i][q];
          v[i][p] = c * vip + s * std::conj(u) * viq;
          v[i][q] = -s * u * vip + c * viq;
        }
      }
    }
  }
  if (!(off_diagonal_norm(a) <= target))
    throw NoConvergence("jacobi_eigensystem: no convergence after 100 sweeps");

  EigenSystem sys;
  sys.dimension = n;
  for (int k = 0; k < n; ++k) {
    sys.eigenvalues.push_back(a(k, k).real());
    std::array<cplx, 4> col{};
    for (int i = 0; i < n; ++i) col[i] = v[i][k];
    sys.eigenvectors.push_back(col);
  }
  if (n == 4)
    for (const auto& col : sys.eigenvectors) sys.sectors.push_back(dominant_sector(col));
  sort_levels(sys);
  return sys;
}

GroundStateResult ground_state(double lambda, double gamma, double phi) {
  const double r = std::hypot(lambda, gamma);
  GroundStateResult res;
  res.gap = std::abs(r - 1.0);

  const bool degenerate = res.gap <= kDegeneracyTol;
  if (degenerate || r < 1.0) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    res.state.amp = {0.0, inv_sqrt2, inv_sqrt2, 0.0};
    res.energy = -1.0;
    res.sector = degenerate ? Sector::Degenerate : Sector::Odd;
    return res;
  }

  const double theta = std::atan2(std::abs(gamma), lambda);
  const double phi_eff = gamma < 0.0 ? phi + std::numbers::pi / 2.0 : phi;
  const cplx em = unit_phase(-phi_eff);
  res.state.amp = {std::cos(theta / 2.0) * em, 0.0, 0.0, std::sin(theta / 2.0) * std::conj(em)};
  res.energy = -r;
  res.sector = Sector::Even;
  return res;
}

double energy_gap(double lambda, double gamma) {
  return std::abs(std::hypot(lambda, gamma) - 1.0);
}

std::array<cplx, 4> canonical_gauge(const std::array<cplx, 4>& v) {
  int k = 0;
  double best = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double m = std::abs(v[i]);
    if (m > best) {
      best = m;
      k = i;
    }
  }
  if (best == 0.0) return v;
  const cplx w = std::conj(v[k]) / best;
  std::array<cplx, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = v[i] * w;
  return out;
}

}  // namespace xyq
