#include "dynalearn/machine.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "dynalearn/rng.hpp"

namespace dynalearn {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapRowMat = Eigen::Map<const RowMat>;
using MapVec = Eigen::Map<const Eigen::VectorXd>;
using MapArr = Eigen::Map<const Eigen::ArrayXd>;

Eigen::ArrayXd hidden_values(const Machine& m, const Eigen::VectorXd& input) {
  MapRowMat V(m.v.data(), m.N, m.v_cols());
  Eigen::ArrayXd a = (V * input).array() - MapArr(m.b.data(), m.N);
  a *= MapArr(m.beta.data(), m.N);
  if (m.f == TransferFn::GaussianExp) return (-a.square()).exp();
  return a.cube();
}

}  // namespace

std::size_t Machine::param_count() const {
  const std::size_t n = static_cast<std::size_t>(N);
  return n * out_dim() + n + n * v_cols() + n;
}

bool Machine::within_bounds() const {
  auto ok = [](const std::vector<double>& p, double c) {
    for (double x : p)
      if (!(std::abs(x) <= c)) return false;
    return true;
  };
  return ok(u, bounds.c_u) && ok(beta, bounds.c_beta) && ok(v, bounds.c_v) && ok(b, bounds.c_b);
}

void Machine::validate() const {
  if (N < 1) fail(Errc::invalid_argument, "machine N must be >= 1");
  if (M < 2) fail(Errc::invalid_argument, "machine M must be >= 2");
  if (!(tau > 0.0)) fail(Errc::invalid_argument, "machine tau must be positive");
  if (!(bounds.c_u > 0.0 && bounds.c_beta > 0.0 && bounds.c_v > 0.0 && bounds.c_b > 0.0))
    fail(Errc::invalid_argument, "bounds must be strictly positive");
  const std::size_t n = static_cast<std::size_t>(N);
  if (u.size() != n * out_dim() || beta.size() != n || v.size() != n * v_cols() || b.size() != n)
    fail(Errc::invalid_argument, "parameter array sizes do not match the architecture");
  if (!within_bounds()) fail(Errc::invalid_argument, "machine parameters exceed their bounds");
}

Machine init_machine(Architecture arch, int M, int N, double tau, const Bounds& bounds,
                     TransferFn f, std::uint64_t seed, bool current_in_hidden) {
  Machine m;
  m.arch = arch;
  m.M = M;
  m.N = N;
  m.tau = tau;
  m.current_in_hidden = arch == Architecture::DelayedScalar && current_in_hidden;
  m.bounds = bounds;
  m.f = f;

  Rng rng(seed);
  auto draw = [&](std::vector<double>& dst, std::size_t count, double c) {
    dst.resize(count);
    for (double& x : dst) x = rng.next_symmetric(c);
  };
  const std::size_t n = static_cast<std::size_t>(N);
  draw(m.u, n * m.out_dim(), bounds.c_u);
  draw(m.beta, n, bounds.c_beta);
  draw(m.v, n * m.v_cols(), bounds.c_v);
  draw(m.b, n, bounds.c_b);
  m.validate();
  return m;
}

double step_delayed(const Machine& m, std::span<const double> window) {
  if (m.arch != Architecture::DelayedScalar)
    fail(Errc::wrong_architecture, "step_delayed requires a delayed-scalar machine");
  if (static_cast<int>(window.size()) != m.M)
    fail(Errc::invalid_argument, "window length must equal M");

  // Column c of v carries delay column_delay(c); window is in time order.
  const int cols = m.v_cols();
  Eigen::VectorXd input(cols);
  for (int c = 0; c < cols; ++c) input[c] = window[m.M - 1 - m.column_delay(c)];

  const Eigen::ArrayXd fv = hidden_values(m, input);
  const double next = window[m.M - 1] + m.tau * (MapArr(m.u.data(), m.N) * fv).sum();
  if (!std::isfinite(next)) fail(Errc::evaluation_diverged, "machine output is non-finite");
  return next;
}

void step_vector(const Machine& m, std::span<const double> state, std::span<double> out) {
  if (m.arch != Architecture::Vector)
    fail(Errc::wrong_architecture, "step_vector requires a vector machine");
  if (static_cast<int>(state.size()) != m.M || static_cast<int>(out.size()) != m.M)
    fail(Errc::invalid_argument, "state length must equal M");

  const Eigen::VectorXd input = MapVec(state.data(), m.M);
  const Eigen::ArrayXd fv = hidden_values(m, input);
  MapRowMat U(m.u.data(), m.N, m.M);
  Eigen::VectorXd next = input + m.tau * (U.transpose() * fv.matrix());
  for (int k = 0; k < m.M; ++k) {
    if (!std::isfinite(next[k])) fail(Errc::evaluation_diverged, "machine output is non-finite");
    out[k] = next[k];
  }
}

FreeRunResult free_run(const Machine& m, const TimeSeries& seed_data, const FreeRunConfig& cfg) {
  m.validate();
  if (cfg.n_record < 1) fail(Errc::invalid_argument, "n_record must be >= 1");
  if (!(cfg.amplitude_guard > 1.0)) fail(Errc::invalid_argument, "amplitude_guard must be > 1");
  if (cfg.n_discard < 0) fail(Errc::invalid_argument, "n_discard must be non-negative");
  if (seed_data.segments.empty()) fail(Errc::empty_input, "seed series is empty");
  if (std::abs(seed_data.tau - m.tau) > 1e-9 * m.tau)
    fail(Errc::invalid_argument, "seed series interval does not match the machine tau");

  const int dim = m.out_dim();
  if (seed_data.dim != (m.arch == Architecture::DelayedScalar ? 1 : m.M))
    fail(Errc::invalid_argument, "seed series dimension does not match the machine");
  const std::size_t need = m.arch == Architecture::DelayedScalar ? m.M : 1;
  if (seed_data.records(seed_data.segments.size() - 1) < need)
    fail(Errc::invalid_argument, "seed series has fewer records than the startup window");

  const TimeSeries startup = seed_data.tail(need);
  const double guard = cfg.amplitude_guard * seed_data.max_abs();
  const double t_end = startup.segments[0].t0 + m.tau * static_cast<double>(need - 1);

  FreeRunResult result;
  result.series.dim = dim;
  result.series.tau = m.tau;
  TimeSeries::Segment seg;
  seg.t0 = t_end + m.tau * static_cast<double>(cfg.n_discard + 1);
  seg.values.reserve(static_cast<std::size_t>(cfg.n_record) * dim);

  // Rolling state: window of the last M scalars, or the current vector state.
  std::vector<double> window(startup.segments[0].values);
  std::vector<double> next(dim);
  const long total = cfg.n_discard + cfg.n_record;
  for (long step = 0; step < total; ++step) {
    bool out_of_range = false;
    try {
      if (m.arch == Architecture::DelayedScalar) {
        next[0] = step_delayed(m, window);
        window.erase(window.begin());
        window.push_back(next[0]);
      } else {
        step_vector(m, window, next);
        window.assign(next.begin(), next.end());
      }
    } catch (const Error& e) {
      if (e.code() != Errc::evaluation_diverged) throw;
      out_of_range = true;
    }
    for (int k = 0; k < dim && !out_of_range; ++k)
      if (!(std::abs(next[k]) <= guard)) out_of_range = true;
    if (out_of_range) {
      result.diverged = true;
      result.diverged_step = step;
      result.series = TimeSeries{};
      return result;
    }
    if (step >= cfg.n_discard) seg.values.insert(seg.values.end(), next.begin(), next.end());
  }
  result.series.segments.push_back(std::move(seg));
  return result;
}

}  // namespace dynalearn
