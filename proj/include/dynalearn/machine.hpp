#ifndef DYNALEARN_MACHINE_HPP
#define DYNALEARN_MACHINE_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "dynalearn/types.hpp"

namespace dynalearn {

enum class Architecture { DelayedScalar, Vector };
enum class TransferFn { GaussianExp, Cubic };

/// Per-parameter-type bound magnitudes (the training control parameters).
struct Bounds {
  double c_u = 0.2;
  double c_beta = 0.5;
  double c_v = 2.0;
  double c_b = 15.0;
};

inline double transfer(TransferFn f, double h) {
  if (f == TransferFn::GaussianExp) return std::exp(-h * h);
  return h * h * h;
}

/// Three-layer learning machine. Two architectures share the storage layout:
///
/// DelayedScalar (scalar series, window of the last M values):
///   phi(n+1) = phi(n) + tau * sum_i u[i] * f(beta[i] * (sum_c v[i][c] * input_c(n) - b[i]))
/// where input column c carries the value delayed by c+1 records (delays
/// 1..M-1), so v has M-1 columns and phi(n) itself enters only through the
/// leading identity term. With current_in_hidden the delay-0 value is added
/// as an extra first column (v then has M columns).
///
/// Vector (full M-dimensional state):
///   x_k(n+1) = x_k(n) + tau * sum_i u[i*M+k] * f(beta[i] * (sum_j v[i][j] x_j(n) - b[i]))
/// with a shared hidden layer and an N x M output weight matrix.
struct Machine {
  Architecture arch = Architecture::DelayedScalar;
  int M = 2;  // input window length (DelayedScalar) or state dimension (Vector)
  int N = 1;
  double tau = 0.01;
  bool current_in_hidden = false;  // DelayedScalar only
  Bounds bounds;
  TransferFn f = TransferFn::GaussianExp;

  std::vector<double> u;     // DelayedScalar: N; Vector: N*M row-major
  std::vector<double> beta;  // N
  std::vector<double> v;     // N * v_cols() row-major
  std::vector<double> b;     // N

  int v_cols() const {
    if (arch == Architecture::Vector) return M;
    return current_in_hidden ? M : M - 1;
  }
  int out_dim() const { return arch == Architecture::Vector ? M : 1; }
  /// Record delay carried by v column c (DelayedScalar).
  int column_delay(int c) const { return current_in_hidden ? c : c + 1; }
  std::size_t param_count() const;
  bool within_bounds() const;
  void validate() const;  // throws invalid_argument on structural violations
};

/// All parameters drawn independently and uniformly from the bound interval
/// of their type. Deterministic given the seed.
Machine init_machine(Architecture arch, int M, int N, double tau, const Bounds& bounds,
                     TransferFn f, std::uint64_t seed, bool current_in_hidden = false);

/// One step of the delayed-scalar map. `window` holds the last M values in
/// time order, window[M-1] being the current value phi(n).
double step_delayed(const Machine& m, std::span<const double> window);

/// One step of the vector map.
void step_vector(const Machine& m, std::span<const double> state, std::span<double> out);

struct FreeRunResult {
  bool diverged = false;
  long diverged_step = -1;  // step index (0-based from the first closed-loop step)
  TimeSeries series;        // empty when diverged
};

/// Closed-loop self-evolution: the machine's output is fed back as input.
/// Startup state comes from the last M records (DelayedScalar) or the last
/// record (Vector) of seed_data's final segment. Discards cfg.n_discard
/// steps, then records cfg.n_record. A step whose magnitude exceeds
/// cfg.amplitude_guard * max|seed_data| (or is non-finite) stops the run and
/// reports divergence as a value, not an error.
FreeRunResult free_run(const Machine& m, const TimeSeries& seed_data, const FreeRunConfig& cfg);

}  // namespace dynalearn

#endif
