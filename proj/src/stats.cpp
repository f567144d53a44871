#include "swingcmp/stats.hpp"

#include <algorithm>
#include <cmath>

#include "swingcmp/error.hpp"

namespace swingcmp {
namespace {

bool constant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); });
}

double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

}  // namespace

std::optional<double> pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "series lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  if (a.size() < 2) throw Error(ErrorCode::TooFewSamples, "correlation needs at least 2 samples");
  if (constant(a) || constant(b)) return std::nullopt;

  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double da = a[k] - ma;
    const double db = b[k] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;
  // sqrt of each factor separately keeps the expression symmetric in (a, b).
  const double r = sab / (std::sqrt(saa) * std::sqrt(sbb));
  return std::clamp(r, -1.0, 1.0);
}

CorrelationTable correlation_table(std::span<const FrameComparison> comparisons) {
  if (comparisons.size() < 2) throw Error(ErrorCode::TooFewSamples, "correlation table needs at least 2 frame pairs");
  CorrelationTable table;
  table.sample_count = comparisons.size();

  std::vector<double> latent;
  latent.reserve(comparisons.size());
  for (const auto& c : comparisons) latent.push_back(c.latent_distance);

  std::vector<double> errors(comparisons.size());
  for (const auto& group : report_group_names()) {
    for (std::size_t k = 0; k < comparisons.size(); ++k) errors[k] = comparisons[k].per_group_error.at(group);
    table.entries[group] = pearson(errors, latent);
  }
  return table;
}

CorrelationTable undefined_correlation_table(std::size_t sample_count) {
  CorrelationTable table;
  table.sample_count = sample_count;
  for (const auto& group : report_group_names()) table.entries[group] = std::nullopt;
  return table;
}

std::vector<std::pair<std::string, std::optional<double>>> rank_groups(const CorrelationTable& table) {
  std::vector<std::pair<std::string, std::optional<double>>> out(table.entries.begin(), table.entries.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second.has_value() != y.second.has_value()) return x.second.has_value();
    if (x.second && *x.second != *y.second) return *x.second > *y.second;
    return x.first < y.first;
  });
  return out;
}

}  // namespace swingcmp
