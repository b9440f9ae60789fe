#ifndef DYNALEARN_CSV_HPP
#define DYNALEARN_CSV_HPP

#include <string>
#include <vector>

#include "dynalearn/analysis.hpp"
#include "dynalearn/trainer.hpp"
#include "dynalearn/types.hpp"

namespace dynalearn {

// CSV artifact formats. Every writer emits a fixed header line; numbers are
// written with 17 significant digits so reruns are byte-identical and a
// saved series can seed further runs without precision loss.

/// Header `t,v0,...,v{dim-1}`; one row per record, segments in order (a gap
/// shows up as a jump in t).
void save_series_csv(const TimeSeries& series, const std::string& path);

/// Reads the save_series_csv format back; rows whose time step exceeds
/// 1.5 * tau start a new segment.
TimeSeries load_series_csv_uniform(const std::string& path);

/// Header `abscissa,label,branch,diverged,point`; one line per section point.
/// A diverged (or point-free) row keeps one line with an empty point field.
void save_diagram_csv(const BifurcationDiagram& diagram, const std::string& path);

/// Header `frequency,power`.
void save_spectrum_csv(const Spectrum& spectrum, const std::string& path);

/// Header `monomial,coefficient`, the 20 fixed labels in order.
void save_coeffs_csv(const PolyCoeffs& coeffs, const std::string& path);

/// Header `checkpoint,attempts,lambda,monomial,coefficient`; the 20 labels
/// per checkpoint, in checkpoint order.
void save_coeffs_trace_csv(const std::vector<Checkpoint>& checkpoints,
                           const std::vector<PolyCoeffs>& trace, const std::string& path);

/// Header `attempts,accepts,lambda`; one row per checkpoint.
void save_training_log_csv(const std::vector<Checkpoint>& checkpoints, const std::string& path);

}  // namespace dynalearn

#endif
