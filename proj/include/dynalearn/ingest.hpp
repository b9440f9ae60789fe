#ifndef DYNALEARN_INGEST_HPP
#define DYNALEARN_INGEST_HPP

#include <string>
#include <vector>

#include "dynalearn/types.hpp"

namespace dynalearn {

/// Externally observed samples as given: times strictly increasing where
/// finite, non-finite values marking missing records.
struct RawSeries {
  std::vector<double> times;
  std::vector<double> values;
};

/// Two-column CSV (time, value), header row optional. An empty or non-finite
/// value field marks a missing point. Parse failures report the line number.
RawSeries load_series_csv(const std::string& path);

/// Estimates tau as the median finite consecutive time difference, then cuts
/// a new segment wherever dt > gap_factor * tau or at a missing marker.
/// Samples inside a segment are taken as-is, declared uniform at tau.
TimeSeries to_uniform_segments(const RawSeries& raw, double gap_factor = 1.5);

struct Normalization {
  TimeSeries series;
  double offset = 0.0;
  double scale = 1.0;  // raw = normalized * scale + offset
};

/// Affine map sending [min, max] over all segments to [-1, 1].
Normalization normalize_amplitude(const TimeSeries& series);

}  // namespace dynalearn

#endif
