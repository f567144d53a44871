#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swingcmp/alignment.hpp"
#include "swingcmp/discrepancy.hpp"
#include "swingcmp/json_io.hpp"
#include "swingcmp/motion_data.hpp"
#include "swingcmp/pose_analysis.hpp"
#include "swingcmp/stats.hpp"

namespace swingcmp {

inline constexpr std::string_view kReportSchemaVersion = "swingcmp.report/1";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct SessionConfig {
  std::string user_pose_path;
  std::string expert_pose_path;
  std::optional<std::string> user_emb_path;  // both or neither; absent means proxy embeddings
  std::optional<std::string> expert_emb_path;
  double step_penalty = 0.0;
  double threshold_k = kDefaultThresholdK;
  std::size_t min_gap = kDefaultMinGap;
  bool with_scale = true;
  bool include_club_in_proxy = true;

  friend bool operator==(const SessionConfig&, const SessionConfig&) = default;
};

// Throws InvalidParams when the config breaks its invariants.
void validate(const SessionConfig& cfg);

Json to_json(const SessionConfig& cfg);
SessionConfig session_config_from_json(const Json& doc);

// Reads a session config file. Relative paths inside it are resolved against
// the file's directory.
SessionConfig load_session_config(const std::filesystem::path& path);

struct AnalysisReport {
  SessionConfig config;
  AlignmentPath path;
  SyncMap sync;
  double threshold = 0.0;
  DiscrepancyResult discrepancy;
  std::vector<FrameComparison> comparisons;  // one per user frame
  CorrelationTable correlations_all;
  CorrelationTable correlations_keyframes;
  std::string schema_version = std::string(kReportSchemaVersion);
  std::string tool_version = std::string(kToolVersion);

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Inputs already loaded in memory; the embeddings may be absent.
struct SessionInputs {
  PoseSequence user_pose;
  PoseSequence expert_pose;
  std::optional<EmbeddingSequence> user_emb;
  std::optional<EmbeddingSequence> expert_emb;
};

SessionInputs load_session_inputs(const SessionConfig& cfg);

// embed -> distance matrix -> DTW -> sync -> threshold -> detection ->
// per-frame comparison -> correlation tables. Errors carry a "stage" entry.
AnalysisReport run_analysis(const SessionInputs& inputs, const SessionConfig& cfg);
AnalysisReport run_analysis(const SessionConfig& cfg);

// Re-runs only the threshold and detection stages with new settings.
void recompute_discrepancy(AnalysisReport& report, double threshold_k, std::size_t min_gap);

// Correlations over the key frames; all-undefined with fewer than two.
CorrelationTable keyframe_correlations(const AnalysisReport& report);

// Largest per-joint error across the session (0 for an empty report).
double max_joint_error(const AnalysisReport& report);

Json to_json(const FrameComparison& c);
Json to_json(const CorrelationTable& t);
Json to_json(const DiscrepancyResult& d);
Json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const Json& doc);

// Canonical bytes: two writes of one report are identical.
std::string report_to_canonical_string(const AnalysisReport& report);
void write_report(const AnalysisReport& report, const std::filesystem::path& path);
AnalysisReport read_report(const std::filesystem::path& path);

// Correlation tables followed by the per-frame signal, as two CSV blocks
// separated by a blank line.
std::string report_to_csv(const AnalysisReport& report);

}  // namespace swingcmp
