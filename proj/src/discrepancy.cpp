#include "swingcmp/discrepancy.hpp"

#include <cmath>

#include "swingcmp/error.hpp"

namespace swingcmp {

double adaptive_threshold(std::span<const double> signal, double k) {
  if (signal.empty()) throw Error(ErrorCode::EmptySignal, "cannot threshold an empty signal");
  if (!std::isfinite(k)) throw Error(ErrorCode::InvalidParams, "threshold k must be finite");
  double sum = 0.0;
  for (double v : signal) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "signal has non-finite values");
    sum += v;
  }
  const double n = static_cast<double>(signal.size());
  const double mean = sum / n;
  double sq = 0.0;
  for (double v : signal) sq += (v - mean) * (v - mean);
  return mean + k * std::sqrt(sq / n);
}

DiscrepancyResult detect_discrepant_frames(std::span<const double> signal, double threshold, std::size_t min_gap) {
  DiscrepancyResult out;
  out.threshold = threshold;

  std::vector<Segment> runs;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    if (!(signal[i] > threshold)) continue;
    if (!runs.empty() && runs.back().end + 1 == i) {
      runs.back().end = i;
    } else {
      runs.push_back({i, i});
    }
  }

  for (const auto& run : runs) {
    if (!out.flagged_segments.empty()) {
      auto& last = out.flagged_segments.back();
      const std::size_t gap = run.start - last.end - 1;
      if (gap < min_gap) {
        last.end = run.end;
        continue;
      }
    }
    out.flagged_segments.push_back(run);
  }

  for (const auto& seg : out.flagged_segments) {
    std::size_t best = seg.start;
    for (std::size_t i = seg.start + 1; i <= seg.end; ++i)
      if (signal[i] > signal[best]) best = i;
    out.key_frames.push_back(best);
  }
  return out;
}

}  // namespace swingcmp
