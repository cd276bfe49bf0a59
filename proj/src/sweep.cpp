#include "xyq/sweep.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "xyq/eigen.hpp"
#include "xyq/errors.hpp"
#include "xyq/observables.hpp"

namespace xyq {

namespace {

const char* observable_label(Observable o) {
  switch (o) {
    case Observable::Gap: return "gap";
    case Observable::Concurrence: return "concurrence";
    case Observable::Fidelity: return "fidelity";
  }
  return "?";
}

double evaluate(Observable o, double lambda, double gamma) {
  switch (o) {
    case Observable::Gap:
      return energy_gap(lambda, gamma);
    case Observable::Concurrence:
      // The state route covers the origin, where the closed form has no
      // polar angle.
      if (std::hypot(lambda, gamma) < 1e-15)
        return concurrence(ground_state(lambda, gamma, 0.0).state);
      return ground_concurrence(lambda, gamma);
    case Observable::Fidelity:
      return ground_fidelity_map(lambda, gamma);
  }
  return 0.0;
}

void check_axis(double min, double max, const char* name) {
  if (!(std::isfinite(min) && std::isfinite(max) && min < max))
    throw std::invalid_argument(std::string("sweep: bad ") + name + " range");
}

double parse_real(const std::string& token, const char* what) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (errno != 0 || end == token.c_str() || *end != '\0')
    throw IoError(std::string("import_csv: malformed ") + what + " field '" + token + "'");
  return v;
}

}  // namespace

SweepGrid sweep(Observable observable, double lambda_min, double lambda_max,
                double gamma_min, double gamma_max, int resolution) {
  if (resolution < 2 || resolution > 10000)
    throw std::invalid_argument("sweep: resolution outside [2, 10000]");
  check_axis(lambda_min, lambda_max, "lambda");
  check_axis(gamma_min, gamma_max, "gamma");

  SweepGrid grid;
  grid.lambda_axis = {lambda_min, lambda_max, resolution};
  grid.gamma_axis = {gamma_min, gamma_max, resolution};
  grid.observable_name = observable_label(observable);
  grid.values.resize(static_cast<std::size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i) {
    const double l = grid.lambda_axis.node(i);
    for (int j = 0; j < resolution; ++j)
      grid.at(i, j) = evaluate(observable, l, grid.gamma_axis.node(j));
  }
  return grid;
}

CrossingSet detect_crossings(const SweepGrid& gap_grid, double threshold) {
  if (gap_grid.observable_name != "gap")
    throw std::invalid_argument("detect_crossings: grid is not a gap sweep");
  if (!(threshold > 0.0))
    throw std::invalid_argument("detect_crossings: threshold must be positive");

  CrossingSet set;
  set.threshold = threshold;
  for (int i = 0; i < gap_grid.lambda_axis.count; ++i)
    for (int j = 0; j < gap_grid.gamma_axis.count; ++j)
      if (gap_grid.at(i, j) <= threshold)
        set.points.emplace_back(gap_grid.lambda_axis.node(i), gap_grid.gamma_axis.node(j));
  if (set.points.empty())
    throw EmptyResult("detect_crossings: no node at or below the threshold");
  return set;
}

std::string format_scientific(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  std::string s(buf);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  int exponent = std::atoi(s.c_str() + e + 1);
  char out[48];
  std::snprintf(out, sizeof out, "%s" "e%d", mantissa.c_str(), exponent);
  return out;
}

void export_csv(const SweepGrid& grid, std::ostream& out) {
  out << "lambda,gamma,value\n";
  for (int i = 0; i < grid.lambda_axis.count; ++i) {
    const std::string l = format_scientific(grid.lambda_axis.node(i));
    for (int j = 0; j < grid.gamma_axis.count; ++j)
      out << l << ',' << format_scientific(grid.gamma_axis.node(j)) << ','
          << format_scientific(grid.at(i, j)) << '\n';
  }
}

void export_csv(const SweepGrid& grid, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out)
    throw IoError("export_csv: cannot open '" + destination.string() + "': " +
                  std::strerror(errno));
  export_csv(grid, out);
  out.flush();
  if (!out)
    throw IoError("export_csv: write failed for '" + destination.string() + "': " +
                  std::strerror(errno));
}

void export_crossings_csv(const CrossingSet& set, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out)
    throw IoError("export_crossings_csv: cannot open '" + destination.string() + "': " +
                  std::strerror(errno));
  out << "lambda,gamma\n";
  for (const auto& [l, g] : set.points)
    out << format_scientific(l) << ',' << format_scientific(g) << '\n';
  out.flush();
  if (!out)
    throw IoError("export_crossings_csv: write failed for '" + destination.string() + "': " +
                  std::strerror(errno));
}

SweepGrid import_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "lambda,gamma,value")
    throw IoError("import_csv: missing 'lambda,gamma,value' header");

  std::vector<double> ls, gs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c))
      throw IoError("import_csv: malformed row '" + line + "'");
    ls.push_back(parse_real(a, "lambda"));
    gs.push_back(parse_real(b, "gamma"));
    vs.push_back(parse_real(c, "value"));
  }
  if (vs.empty()) throw IoError("import_csv: no data rows");

  std::size_t count_gamma = 1;
  while (count_gamma < ls.size() && ls[count_gamma] == ls[0]) ++count_gamma;
  if (vs.size() % count_gamma != 0)
    throw IoError("import_csv: rows do not form a rectangular grid");
  const std::size_t count_lambda = vs.size() / count_gamma;
  if (count_lambda < 2 || count_gamma < 2)
    throw IoError("import_csv: grid must be at least 2 x 2");

  SweepGrid grid;
  grid.lambda_axis = {ls.front(), ls.back(), static_cast<int>(count_lambda)};
  grid.gamma_axis = {gs.front(), gs[count_gamma - 1], static_cast<int>(count_gamma)};
  grid.values = std::move(vs);
  return grid;
}

SweepGrid import_csv(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in)
    throw IoError("import_csv: cannot open '" + source.string() + "': " + std::strerror(errno));
  return import_csv(in);
}

}  // namespace xyq
