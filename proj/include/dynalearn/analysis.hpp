#ifndef DYNALEARN_ANALYSIS_HPP
#define DYNALEARN_ANALYSIS_HPP

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "dynalearn/machine.hpp"
#include "dynalearn/trainer.hpp"
#include "dynalearn/types.hpp"

namespace dynalearn {

/// Times t_c where the configured component crosses the section level,
/// located by linear interpolation between the bracketing samples.
/// FromAbove counts transitions from > level to <= level; grazing contact
/// without a sign change is not a crossing. Requires a single-segment series.
std::vector<double> find_crossings(const TimeSeries& series, const SectionConfig& cfg);

/// Delayed coordinates phi(t_c - T), linearly interpolated from the recorded
/// series; crossings whose delayed time falls before the series start are
/// dropped.
std::vector<double> section_values(const TimeSeries& series, const std::vector<double>& crossings,
                                   const SectionConfig& cfg);

struct ClusterSummary {
  int count = 0;
  std::vector<double> centers;
  double max_width = 0.0;
};

/// Single-linkage 1-D clustering: sorted values split wherever the gap
/// between neighbours exceeds tol. The cluster count estimates the orbit
/// period of a periodic section-point set.
ClusterSummary cluster_periods(std::vector<double> values, double tol);

/// Bifurcation diagram of a training chain along 1/lambda: one row per
/// checkpoint, free-run from seed_data, section points per `section`.
/// Diverged free runs produce rows flagged diverged with empty points.
BifurcationDiagram machine_bifurcation(const std::vector<Checkpoint>& checkpoints,
                                       const TimeSeries& seed_data, const SectionConfig& section,
                                       const FreeRunConfig& run);

/// The 20 monomial coefficients of a trivariate polynomial of total degree
/// <= 3, in the fixed label order x^3, y^3, z^3, x^2y, x^2z, xy^2, y^2z,
/// xz^2, yz^2, xyz, x^2, y^2, z^2, xy, xz, yz, x, y, z, 1.
struct PolyCoeffs {
  static constexpr int size = 20;
  static const std::array<std::string_view, size> labels;
  std::array<double, size> c{};

  double operator[](int i) const { return c[i]; }
  double& operator[](int i) { return c[i]; }
  /// Coefficient by exponents (p, q, r) with p + q + r <= 3.
  double& at(int p, int q, int r);
  double evaluate(double x, double y, double z) const;
};

/// Exact multinomial expansion of output k's hidden sum
/// sum_i u[i*3+k] * (beta_i (v_i1 x + v_i2 y + v_i3 z - b_i))^3
/// for a Vector/Cubic machine with M = 3. Coefficients are those of the
/// summation part, i.e. before multiplication by tau.
PolyCoeffs expand_cubic_coefficients(const Machine& m, int output_index);

struct Spectrum {
  struct Peak {
    double frequency = 0.0;
    double power = 0.0;
  };
  std::vector<double> frequencies;  // cycles per time unit, up to Nyquist
  std::vector<double> power;
  std::vector<Peak> peaks;  // local maxima, quadratic-refined, sorted by power
};

/// One-sided magnitude spectrum of the mean-removed, Hann-windowed series.
/// Power is normalized so that its sum equals the windowed-signal energy.
Spectrum periodogram(const TimeSeries& series);

/// Paired delayed coordinates (x(t_c - T1), x(t_c - T2)) per section
/// crossing; crossings lacking either delayed time are dropped.
std::vector<std::pair<double, double>> section_map(const TimeSeries& series, double level,
                                                   double T1, double T2, int component);

}  // namespace dynalearn

#endif
