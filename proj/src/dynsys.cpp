#include "dynalearn/dynsys.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "dynalearn/analysis.hpp"

namespace dynalearn {

std::size_t TimeSeries::total_records() const {
  std::size_t n = 0;
  for (const auto& seg : segments) n += seg.values.size() / dim;
  return n;
}

TimeSeries TimeSeries::component(int k) const {
  if (k < 0 || k >= dim) fail(Errc::invalid_argument, "component index out of range");
  TimeSeries out;
  out.dim = 1;
  out.tau = tau;
  out.segments.reserve(segments.size());
  for (const auto& seg : segments) {
    Segment s;
    s.t0 = seg.t0;
    const std::size_t n = seg.values.size() / dim;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.values.push_back(seg.values[i * dim + k]);
    out.segments.push_back(std::move(s));
  }
  return out;
}

TimeSeries TimeSeries::tail(std::size_t n) const {
  if (segments.empty()) fail(Errc::empty_input, "tail of an empty series");
  const Segment& last = segments.back();
  const std::size_t have = last.values.size() / dim;
  if (n > have) fail(Errc::invalid_argument, "tail longer than the last segment");
  TimeSeries out;
  out.dim = dim;
  out.tau = tau;
  Segment s;
  s.t0 = last.t0 + tau * static_cast<double>(have - n);
  s.values.assign(last.values.end() - static_cast<std::ptrdiff_t>(n * dim), last.values.end());
  out.segments.push_back(std::move(s));
  return out;
}

void TimeSeries::minmax(double& lo, double& hi) const {
  bool any = false;
  lo = 0.0;
  hi = 0.0;
  for (const auto& seg : segments)
    for (double v : seg.values) {
      if (!any) {
        lo = hi = v;
        any = true;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
  if (!any) fail(Errc::empty_input, "minmax of an empty series");
}

double TimeSeries::max_abs() const {
  double lo, hi;
  minmax(lo, hi);
  return std::max(std::abs(lo), std::abs(hi));
}

void TimeSeries::validate() const {
  if (dim < 1) fail(Errc::invalid_argument, "series dim must be positive");
  if (!(tau > 0.0)) fail(Errc::invalid_argument, "series tau must be positive");
  double prev_t0 = 0.0;
  bool first = true;
  for (const auto& seg : segments) {
    if (seg.values.empty() || seg.values.size() % dim != 0)
      fail(Errc::invalid_argument, "segment length must be a positive multiple of dim");
    if (!first && !(seg.t0 > prev_t0))
      fail(Errc::invalid_argument, "segment start times must be strictly increasing");
    prev_t0 = seg.t0;
    first = false;
    for (double v : seg.values)
      if (!std::isfinite(v)) fail(Errc::invalid_argument, "series values must be finite");
  }
}

SystemSpec SystemSpec::lorenz(double sigma, double R, double B) {
  if (!std::isfinite(sigma) || !std::isfinite(R) || !std::isfinite(B))
    fail(Errc::invalid_argument, "Lorenz parameters must be finite");
  SystemSpec s;
  s.kind = SystemKind::Lorenz;
  s.sigma = sigma;
  s.R = R;
  s.B = B;
  return s;
}

SystemSpec SystemSpec::stable_limit_cycle() {
  SystemSpec s;
  s.kind = SystemKind::StableLimitCycle;
  return s;
}

double SystemSpec::param(const std::string& axis) const {
  if (kind != SystemKind::Lorenz) fail(Errc::invalid_argument, "system has no named parameters");
  if (axis == "sigma") return sigma;
  if (axis == "R") return R;
  if (axis == "B") return B;
  fail(Errc::invalid_argument, "unknown parameter axis: " + axis);
}

void SystemSpec::set_param(const std::string& axis, double value) {
  if (kind != SystemKind::Lorenz) fail(Errc::invalid_argument, "system has no named parameters");
  if (axis == "sigma")
    sigma = value;
  else if (axis == "R")
    R = value;
  else if (axis == "B")
    B = value;
  else
    fail(Errc::invalid_argument, "unknown parameter axis: " + axis);
}

void derivatives(const SystemSpec& spec, const double* s, double* out) {
  if (spec.kind == SystemKind::Lorenz) {
    out[0] = -spec.sigma * (s[0] - s[1]);
    out[1] = -s[0] * s[2] + spec.R * s[0] - s[1];
    out[2] = s[0] * s[1] - spec.B * s[2];
  } else {
    const double r2 = s[0] * s[0] + s[1] * s[1];
    out[0] = s[0] + s[1] - s[0] * r2;
    out[1] = -s[0] + s[1] - s[1] * r2;
  }
}

void rk4_step(const SystemSpec& spec, std::vector<double>& state, double dt) {
  if (!(dt > 0.0)) fail(Errc::invalid_argument, "rk4_step requires dt > 0");
  const int d = spec.dim();
  if (static_cast<int>(state.size()) != d)
    fail(Errc::invalid_argument, "state dimension does not match the system");

  double k1[3], k2[3], k3[3], k4[3], tmp[3];
  derivatives(spec, state.data(), k1);
  for (int i = 0; i < d; ++i) tmp[i] = state[i] + 0.5 * dt * k1[i];
  derivatives(spec, tmp, k2);
  for (int i = 0; i < d; ++i) tmp[i] = state[i] + 0.5 * dt * k2[i];
  derivatives(spec, tmp, k3);
  for (int i = 0; i < d; ++i) tmp[i] = state[i] + dt * k3[i];
  derivatives(spec, tmp, k4);
  for (int i = 0; i < d; ++i) {
    state[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!std::isfinite(state[i])) fail(Errc::integration_diverged, "trajectory diverged");
  }
}

TimeSeries simulate(const SystemSpec& spec, const std::vector<double>& init, double dt, double tau,
                    long n_records, double t_discard) {
  if (n_records < 1) fail(Errc::invalid_argument, "n_records must be >= 1");
  if (!(dt > 0.0) || !(tau > 0.0)) fail(Errc::invalid_argument, "dt and tau must be positive");
  const double ratio = tau / dt;
  const long steps_per_record = std::lround(ratio);
  if (steps_per_record < 1 || std::abs(ratio - static_cast<double>(steps_per_record)) > 1e-9 * ratio)
    fail(Errc::invalid_argument, "tau must be an integer multiple of dt");
  if (t_discard < 0.0) fail(Errc::invalid_argument, "t_discard must be non-negative");

  const int d = spec.dim();
  if (static_cast<int>(init.size()) != d)
    fail(Errc::invalid_argument, "init dimension does not match the system");

  std::vector<double> state = init;
  const long discard_steps = std::lround(t_discard / dt);
  for (long i = 0; i < discard_steps; ++i) rk4_step(spec, state, dt);

  TimeSeries out;
  out.dim = d;
  out.tau = tau;
  TimeSeries::Segment seg;
  seg.t0 = 0.0;  // time rebased to the first record
  seg.values.reserve(static_cast<std::size_t>(n_records) * d);
  seg.values.insert(seg.values.end(), state.begin(), state.end());
  for (long r = 1; r < n_records; ++r) {
    for (long i = 0; i < steps_per_record; ++i) rk4_step(spec, state, dt);
    seg.values.insert(seg.values.end(), state.begin(), state.end());
  }
  out.segments.push_back(std::move(seg));
  return out;
}

BifurcationDiagram target_bifurcation_scan(const SystemSpec& spec_template,
                                           const std::string& axis, std::vector<double> values,
                                           const SectionConfig& section, const FreeRunConfig& run,
                                           const std::vector<std::vector<double>>& inits, double dt,
                                           double tau) {
  if (values.empty()) fail(Errc::invalid_argument, "scan values must be non-empty");
  if (inits.empty()) fail(Errc::invalid_argument, "scan inits must be non-empty");
  spec_template.param(axis);  // validates the axis name up front
  std::sort(values.begin(), values.end());

  BifurcationDiagram diagram;
  diagram.rows.reserve(values.size() * inits.size());
  for (double value : values) {
    SystemSpec spec = spec_template;
    spec.set_param(axis, value);
    for (std::size_t k = 0; k < inits.size(); ++k) {
      BifurcationDiagram::Row row;
      row.abscissa = value;
      row.label = AxisLabel::Parameter;
      row.branch = static_cast<int>(k);
      try {
        TimeSeries ts = simulate(spec, inits[k], dt, tau, run.n_record,
                                 static_cast<double>(run.n_discard) * tau);
        const auto crossings = find_crossings(ts, section);
        row.points = section_values(ts, crossings, section);
      } catch (const Error& e) {
        if (e.code() != Errc::integration_diverged) throw;
        row.diverged = true;
      }
      diagram.rows.push_back(std::move(row));
    }
  }
  return diagram;
}

}  // namespace dynalearn
