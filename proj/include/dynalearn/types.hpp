#ifndef DYNALEARN_TYPES_HPP
#define DYNALEARN_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynalearn {

enum class Errc {
  invalid_argument,
  integration_diverged,
  evaluation_diverged,
  no_usable_samples,
  wrong_architecture,
  empty_input,
  too_short,
  too_sparse,
  constant_series,
  parse_error,
  non_monotonic_time,
  bad_format,
  io_error,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Uniformly sampled series. Values are stored row-major per segment:
/// segment.values[i * dim + k] is component k of record i. Segments are
/// contiguous gap-free blocks; a gap in the source data starts a new segment.
struct TimeSeries {
  struct Segment {
    double t0 = 0.0;
    std::vector<double> values;
  };

  int dim = 1;
  double tau = 0.0;
  std::vector<Segment> segments;

  std::size_t records(std::size_t seg) const { return segments[seg].values.size() / dim; }
  std::size_t total_records() const;
  double value(std::size_t seg, std::size_t record, int component = 0) const {
    return segments[seg].values[record * dim + component];
  }
  double time_at(std::size_t seg, std::size_t record) const {
    return segments[seg].t0 + tau * static_cast<double>(record);
  }

  /// Extracts one component as a dim-1 series with identical segmentation.
  TimeSeries component(int k) const;
  /// Last n records of the last segment, as a fresh single-segment series.
  TimeSeries tail(std::size_t n) const;
  void minmax(double& lo, double& hi) const;
  double max_abs() const;

  void validate() const;  // throws invalid_argument on a malformed series
};

enum class CrossingDirection { FromAbove, FromBelow };

/// Poincare section: crossings of component(t) = level, sampled at delay T.
struct SectionConfig {
  double level = 5.0;
  CrossingDirection direction = CrossingDirection::FromAbove;
  double delay = 0.01;
  int component = 0;
};

struct FreeRunConfig {
  long n_discard = 20000;
  long n_record = 50000;
  double amplitude_guard = 10.0;
};

enum class AxisLabel { InvLambda, Parameter };

struct BifurcationDiagram {
  struct Row {
    double abscissa = 0.0;
    AxisLabel label = AxisLabel::Parameter;
    int branch = 0;  // init index (target scans) or checkpoint index (1/lambda)
    bool diverged = false;
    std::vector<double> points;
  };
  std::vector<Row> rows;
};

}  // namespace dynalearn

#endif
