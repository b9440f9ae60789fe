#ifndef DYNALEARN_DYNSYS_HPP
#define DYNALEARN_DYNSYS_HPP

#include <string>
#include <vector>

#include "dynalearn/types.hpp"

namespace dynalearn {

enum class SystemKind { Lorenz, StableLimitCycle };

/// Ground-truth target systems.
///   Lorenz:           dx/dt = -sigma (x - y), dy/dt = -x z + R x - y, dz/dt = x y - B z
///   StableLimitCycle: dx/dt = x + y - x (x^2 + y^2), dy/dt = -x + y - y (x^2 + y^2)
struct SystemSpec {
  SystemKind kind = SystemKind::Lorenz;
  double sigma = 10.0;
  double R = 28.0;
  double B = 8.0 / 3.0;

  static SystemSpec lorenz(double sigma, double R, double B);
  static SystemSpec stable_limit_cycle();

  int dim() const { return kind == SystemKind::Lorenz ? 3 : 2; }
  double param(const std::string& axis) const;
  void set_param(const std::string& axis, double value);
};

void derivatives(const SystemSpec& spec, const double* state, double* out);

/// One classical fixed-step RK4 step, in place.
void rk4_step(const SystemSpec& spec, std::vector<double>& state, double dt);

/// Integrates from `init`, discards `t_discard` of transient, then records
/// `n_records` full state vectors every `tau`. `tau` must be an integer
/// multiple of `dt`. The returned series is a single segment with t0 = 0
/// (time rebased to the first record).
TimeSeries simulate(const SystemSpec& spec, const std::vector<double>& init, double dt,
                    double tau, long n_records, double t_discard);

/// Ground-truth bifurcation diagram: one row per (value, init) pair, abscissa
/// the swept parameter. Values are sorted ascending; rows for a given value
/// are tagged by init index so coexisting branches stay distinguishable.
/// Diverging trajectories yield rows flagged diverged instead of being
/// dropped. n_discard/n_record of `run` are counted in records of length tau.
BifurcationDiagram target_bifurcation_scan(const SystemSpec& spec_template,
                                           const std::string& axis, std::vector<double> values,
                                           const SectionConfig& section, const FreeRunConfig& run,
                                           const std::vector<std::vector<double>>& inits, double dt,
                                           double tau);

}  // namespace dynalearn

#endif
