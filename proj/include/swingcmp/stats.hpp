#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swingcmp/pose_analysis.hpp"

namespace swingcmp {

// Sample Pearson correlation. nullopt when either series is constant.
// Throws LengthMismatch / TooFewSamples (fewer than 2 points).
std::optional<double> pearson(std::span<const double> a, std::span<const double> b);

struct CorrelationTable {
  std::map<std::string, std::optional<double>> entries;  // group name -> coefficient
  std::size_t sample_count = 0;

  friend bool operator==(const CorrelationTable&, const CorrelationTable&) = default;
};

// Correlation of each group's error (and WholeBody) with latent distance
// across the given frame pairs. Throws TooFewSamples below 2 comparisons.
CorrelationTable correlation_table(std::span<const FrameComparison> comparisons);

// Same table shape with every entry undefined.
CorrelationTable undefined_correlation_table(std::size_t sample_count);

// Descending by coefficient, undefined entries last, ties by name.
std::vector<std::pair<std::string, std::optional<double>>> rank_groups(const CorrelationTable& table);

}  // namespace swingcmp
