#ifndef XYQ_SWEEP_HPP
#define XYQ_SWEEP_HPP

// Grid sweeps over the (lambda, gamma) plane, level-crossing detection,
// and the CSV exchange format.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace xyq {

enum class Observable { Gap, Concurrence, Fidelity };

// Uniform closed-interval axis: count nodes including both endpoints.
struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  double node(int i) const { return min + i * ((max - min) / (count - 1)); }
};

// Row-major surface, lambda outer and gamma inner.
struct SweepGrid {
  AxisSpec lambda_axis;
  AxisSpec gamma_axis;
  std::vector<double> values;
  std::string observable_name;

  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * gamma_axis.count + j]; }
  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * gamma_axis.count + j];
  }
};

// Grid nodes where the gap sweep dropped to or below the threshold.
struct CrossingSet {
  std::vector<std::pair<double, double>> points;  // (lambda, gamma)
  double threshold = 0.0;
};

// Evaluate the observable on every node. Nodes at the origin use the
// state-based route, so the closed-form origin singularity never fires.
SweepGrid sweep(Observable observable, double lambda_min, double lambda_max,
                double gamma_min, double gamma_max, int resolution);

// Nodes of a gap sweep with value <= threshold; since the gap is |r - 1|
// every returned point lies within threshold of the unit circle.
// Throws EmptyResult when nothing qualifies.
CrossingSet detect_crossings(const SweepGrid& gap_grid, double threshold);

// Scientific notation, 12 digits after the decimal point, minimal
// exponent digits: 0.5 -> "5.000000000000e-1".
std::string format_scientific(double v);

// Header "lambda,gamma,value", one row per node in row-major order, LF
// line ends. Throws IoError on filesystem failure.
void export_csv(const SweepGrid& grid, std::ostream& out);
void export_csv(const SweepGrid& grid, const std::filesystem::path& destination);

// Two-column "lambda,gamma" listing of crossing points.
void export_crossings_csv(const CrossingSet& set, const std::filesystem::path& destination);

// Inverse of export_csv; the observable name is not serialized and comes
// back empty. Values parsed from the canonical format are reproduced
// bit-for-bit by a subsequent export.
SweepGrid import_csv(std::istream& in);
SweepGrid import_csv(const std::filesystem::path& source);

}  // namespace xyq

#endif
