#ifndef DYNALEARN_TRAINER_HPP
#define DYNALEARN_TRAINER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dynalearn/machine.hpp"
#include "dynalearn/rng.hpp"
#include "dynalearn/types.hpp"

namespace dynalearn {

/// One-step training samples. Windows never span a gap: every sample's input
/// and target come from the same contiguous segment.
///
/// xs concatenates the segment values (dim 1 for DelayedScalar, dim M for
/// Vector); base[n] is the record index of the sample's anchor phi(n), so the
/// DelayedScalar input at delay d is xs[base[n] - d] and the target is
/// xs[base[n] + 1]. For Vector, record r occupies xs[r*M .. r*M+M).
struct SampleSet {
  Architecture arch = Architecture::DelayedScalar;
  int M = 2;
  double tau = 0.0;
  std::vector<double> xs;
  std::vector<std::int64_t> base;

  std::int64_t count() const { return static_cast<std::int64_t>(base.size()); }
};

SampleSet build_samples(const TimeSeries& series, int M, Architecture arch);

/// Root-mean-square one-step prediction error (the cost lambda), evaluated
/// from scratch. For Vector machines the squared error sums over all M
/// components per sample before the mean. Independent of the trainer's
/// incremental caches; used as their consistency oracle.
double full_cost(const Machine& m, const SampleSet& samples);

struct Checkpoint {
  Machine machine;
  double lambda = 0.0;
  std::uint64_t attempts = 0;
  std::uint64_t accepts = 0;
};

struct TrainSchedule {
  std::uint64_t checkpoint_every = 200000;
  std::uint64_t max_attempts = 20000000;
  std::optional<double> stop_lambda;
};

std::uint64_t schedule_hash(const TrainSchedule& sched);

/// Monte Carlo trainer with incremental O(P) cost maintenance.
///
/// Each mutation resamples one uniformly chosen scalar parameter from the
/// full bound interval of its type and accepts iff the cost does not
/// increase. The per-sample caches (pre-activations, transfer values, hidden
/// sums) confine the cost delta to the touched neuron's rows, so a mutation
/// never iterates over N. Rejected proposals leave the state bit-identical.
class Trainer {
public:
  Trainer(Machine machine, SampleSet samples, std::uint64_t seed);

  struct MutationResult {
    bool accepted = false;
    double lambda_after = 0.0;
  };
  MutationResult mutate_once();

  double lambda() const { return lambda_; }
  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t accepts() const { return accepts_; }
  const Machine& machine() const { return machine_; }
  const SampleSet& samples() const { return samples_; }

  /// From-scratch cost of the current machine (the cache-consistency oracle).
  double lambda_recomputed() const;

  /// Rebuilds every cache from the machine parameters. Called automatically
  /// every refresh_period attempts to cap float drift in the incrementally
  /// updated rows.
  void refresh_caches();

  void set_refresh_period(std::uint64_t period) { refresh_period_ = period; }

private:
  friend std::vector<Checkpoint> train(Trainer&, const TrainSchedule&,
                                       const std::function<void(const Checkpoint&)>&);

  void propose_u(std::size_t flat, double value);
  void propose_neuron_row(int neuron, double new_beta, double new_b, int v_col, double new_v);
  double candidate_ssr(int neuron) const;
  void accept_rows(int neuron, bool preact_changed);

  Machine machine_;
  SampleSet samples_;
  std::int64_t S_ = 0;  // P_effective

  // Row-major caches, one row per neuron (N x S) or per output dim (K x S).
  std::vector<double> inputs_;  // v_cols x S: inputs_[c*S+n] = input_c(sample n)
  std::vector<double> incr_;    // K x S: target minus anchor (constant)
  std::vector<double> preact_;  // N x S: a_i(n) = sum_c v[i][c] input_c(n) - b[i]
  std::vector<double> fvals_;   // N x S: f(beta_i * a_i(n))
  std::vector<double> ssum_;    // K x S: hidden-layer output per component
  std::vector<double> ssr_k_;   // per-component sum of squared residuals
  double ssr_ = 0.0;
  double lambda_ = 0.0;

  // Proposal scratch; swapped in on acceptance, untouched state on rejection.
  std::vector<double> cand_preact_, cand_f_, cand_ssum_, cand_ssr_k_;

  Rng rng_;
  std::uint64_t attempts_ = 0;
  std::uint64_t accepts_ = 0;
  std::uint64_t refresh_period_ = 1000000;
};

/// Runs mutate_once until max_attempts or stop_lambda, emitting a checkpoint
/// every checkpoint_every attempts plus a final one. Checkpoint lambdas are
/// non-increasing. max_attempts = 0 yields exactly one checkpoint (the
/// initial state).
std::vector<Checkpoint> train(Trainer& trainer, const TrainSchedule& sched,
                              const std::function<void(const Checkpoint&)>& on_checkpoint = {});

struct PolyCoeffs;  // analysis.hpp

/// Fig. 6(c)-style trace: the 20-monomial expansion of output `output_dim`
/// for every checkpoint. Requires Vector/Cubic machines with M = 3.
std::vector<PolyCoeffs> coefficient_trace(const std::vector<Checkpoint>& checkpoints,
                                          int output_dim);

}  // namespace dynalearn

#endif
