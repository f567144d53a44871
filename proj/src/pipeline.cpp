#include "swingcmp/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "swingcmp/embedding.hpp"
#include "swingcmp/error.hpp"

namespace swingcmp {
namespace {

Error bad_report(const std::string& msg) { return Error(ErrorCode::MalformedFile, msg); }

// Runs `fn`, tagging any library error with the pipeline stage it came from.
template <typename Fn>
auto staged(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (Error& e) {
    e.with("stage", stage);
    throw;
  }
}

std::string number_text(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

Json vec_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw bad_report(std::string("report is missing '") + key + "'");
  return obj.at(key);
}

double num(const Json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number()) throw bad_report(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

std::size_t index(const Json& v) {
  if (!v.is_number_unsigned()) throw bad_report("expected a non-negative integer");
  return v.get<std::size_t>();
}

Vec3 vec_from(const Json& v) {
  if (!v.is_array() || v.size() != 3) throw bad_report("expected an [x,y,z] array");
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

std::vector<double> doubles_from(const Json& v) {
  if (!v.is_array()) throw bad_report("expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) throw bad_report("expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

FrameComparison comparison_from_json(const Json& j) {
  FrameComparison c;
  c.user_frame = index(field(j, "user_frame"));
  c.expert_frame = index(field(j, "expert_frame"));
  const auto& t = field(j, "transform");
  const auto& rot = field(t, "rotation");
  if (!rot.is_array() || rot.size() != 3) throw bad_report("rotation must be 3x3");
  for (int r = 0; r < 3; ++r) c.transform.rotation.row(r) = vec_from(rot[r]).transpose();
  c.transform.translation = vec_from(field(t, "translation"));
  c.transform.scale = num(t, "scale");
  const auto pje = doubles_from(field(j, "per_joint_error"));
  if (pje.size() != kJointCount) throw bad_report("per_joint_error must have one entry per joint");
  std::copy(pje.begin(), pje.end(), c.per_joint_error.begin());
  for (const auto& [name, v] : field(j, "per_group_error").items()) c.per_group_error[name] = v.get<double>();
  c.mpjpe = num(j, "mpjpe");
  c.latent_distance = num(j, "latent_distance");
  const auto& ae = field(j, "aligned_expert");
  if (!ae.is_array() || ae.size() != kJointCount) throw bad_report("aligned_expert must have one point per joint");
  for (std::size_t k = 0; k < kJointCount; ++k) c.aligned_expert[k] = vec_from(ae[k]);
  return c;
}

CorrelationTable table_from_json(const Json& j) {
  CorrelationTable t;
  t.sample_count = index(field(j, "sample_count"));
  for (const auto& [name, v] : field(j, "entries").items()) {
    t.entries[name] = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
  }
  return t;
}

DiscrepancyResult discrepancy_from_json(const Json& j) {
  DiscrepancyResult d;
  d.threshold = num(j, "threshold");
  for (const auto& s : field(j, "flagged_segments")) {
    if (!s.is_array() || s.size() != 2) throw bad_report("segment must be [start, end]");
    d.flagged_segments.push_back({index(s[0]), index(s[1])});
  }
  for (const auto& k : field(j, "key_frames")) d.key_frames.push_back(index(k));
  return d;
}

}  // namespace

void validate(const SessionConfig& cfg) {
  if (cfg.user_emb_path.has_value() != cfg.expert_emb_path.has_value()) {
    throw Error(ErrorCode::InvalidParams, "embedding paths must be given for both clips or neither");
  }
  if (!std::isfinite(cfg.step_penalty) || cfg.step_penalty < 0) {
    throw Error(ErrorCode::InvalidParams, "step penalty must be finite and non-negative");
  }
  if (!std::isfinite(cfg.threshold_k)) throw Error(ErrorCode::InvalidParams, "threshold k must be finite");
}

Json to_json(const SessionConfig& cfg) {
  Json j = Json::object();
  j["user_pose"] = cfg.user_pose_path;
  j["expert_pose"] = cfg.expert_pose_path;
  j["user_emb"] = cfg.user_emb_path ? Json(*cfg.user_emb_path) : Json(nullptr);
  j["expert_emb"] = cfg.expert_emb_path ? Json(*cfg.expert_emb_path) : Json(nullptr);
  j["step_penalty"] = cfg.step_penalty;
  j["threshold_k"] = cfg.threshold_k;
  j["min_gap"] = cfg.min_gap;
  j["with_scale"] = cfg.with_scale;
  j["include_club_in_proxy"] = cfg.include_club_in_proxy;
  return j;
}

SessionConfig session_config_from_json(const Json& doc) {
  auto err = [](const std::string& m) { return Error(ErrorCode::InvalidParams, m); };
  if (!doc.is_object()) throw err("session config must be a JSON object");
  SessionConfig cfg;
  auto str = [&](const char* key) -> std::optional<std::string> {
    if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
    if (!doc[key].is_string()) throw err(std::string("'") + key + "' must be a string");
    return doc[key].get<std::string>();
  };
  auto user = str("user_pose");
  auto expert = str("expert_pose");
  if (!user || !expert) throw err("session config needs 'user_pose' and 'expert_pose'");
  cfg.user_pose_path = *user;
  cfg.expert_pose_path = *expert;
  cfg.user_emb_path = str("user_emb");
  cfg.expert_emb_path = str("expert_emb");
  auto real = [&](const char* key, double& out) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number()) throw err(std::string("'") + key + "' must be a number");
    out = doc[key].get<double>();
  };
  auto flag = [&](const char* key, bool& out) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_boolean()) throw err(std::string("'") + key + "' must be a boolean");
    out = doc[key].get<bool>();
  };
  real("step_penalty", cfg.step_penalty);
  real("threshold_k", cfg.threshold_k);
  if (doc.contains("min_gap")) {
    if (!doc["min_gap"].is_number_unsigned()) throw err("'min_gap' must be a non-negative integer");
    cfg.min_gap = doc["min_gap"].get<std::size_t>();
  }
  flag("with_scale", cfg.with_scale);
  flag("include_club_in_proxy", cfg.include_club_in_proxy);
  validate(cfg);
  return cfg;
}

SessionConfig load_session_config(const std::filesystem::path& path) {
  try {
    auto cfg = session_config_from_json(load_json_file(path));
    const auto base = path.parent_path();
    auto resolve = [&base](std::string& p) {
      if (!base.empty() && std::filesystem::path(p).is_relative()) p = (base / p).lexically_normal().string();
    };
    resolve(cfg.user_pose_path);
    resolve(cfg.expert_pose_path);
    if (cfg.user_emb_path) resolve(*cfg.user_emb_path);
    if (cfg.expert_emb_path) resolve(*cfg.expert_emb_path);
    return cfg;
  } catch (Error& e) {
    e.with("file", path.string());
    throw;
  }
}

SessionInputs load_session_inputs(const SessionConfig& cfg) {
  return staged("load", [&] {
    validate(cfg);
    SessionInputs in;
    in.user_pose = load_pose_sequence(cfg.user_pose_path);
    in.expert_pose = load_pose_sequence(cfg.expert_pose_path);
    if (cfg.user_emb_path) {
      in.user_emb = load_embedding_sequence(*cfg.user_emb_path);
      in.expert_emb = load_embedding_sequence(*cfg.expert_emb_path);
    }
    return in;
  });
}

AnalysisReport run_analysis(const SessionInputs& inputs, const SessionConfig& cfg) {
  staged("config", [&] {
    validate(cfg);
    if (inputs.user_emb.has_value() != inputs.expert_emb.has_value()) {
      throw Error(ErrorCode::InvalidParams, "embeddings must be given for both clips or neither");
    }
    return 0;
  });

  ClipPair pair = staged("embed", [&] {
    ClipPair p{inputs.user_pose, inputs.expert_pose, {}, {}};
    if (inputs.user_emb) {
      p.user_emb = *inputs.user_emb;
      p.expert_emb = *inputs.expert_emb;
    } else {
      try {
        p.user_emb = proxy_embed(inputs.user_pose, cfg.include_club_in_proxy);
      } catch (Error& e) {
        e.with("clip", "user");
        throw;
      }
      try {
        p.expert_emb = proxy_embed(inputs.expert_pose, cfg.include_club_in_proxy);
      } catch (Error& e) {
        e.with("clip", "expert");
        throw;
      }
    }
    return p;
  });

  staged("validate", [&] {
    const auto violations = validate_pair(pair);
    if (violations.empty()) return 0;
    std::string msg = "inconsistent inputs:";
    for (const auto& v : violations) msg += " " + v.label() + ": " + v.message + ";";
    const auto& first = violations.front();
    const ErrorCode code = first.code == "LENGTH_MISMATCH" ? ErrorCode::LengthMismatch
                           : first.code == "DIM_MISMATCH"  ? ErrorCode::DimensionMismatch
                                                           : ErrorCode::InvalidParams;
    throw Error(code, msg, {{"violation", first.label()}});
  });

  AnalysisReport r;
  r.config = cfg;
  const DistanceMatrix d = staged("distance", [&] { return distance_matrix(pair.user_emb, pair.expert_emb); });
  staged("align", [&] {
    r.path = dtw_align(d, cfg.step_penalty);
    r.sync = sync_map(r.path, d);
    return 0;
  });
  staged("discrepancy", [&] {
    r.threshold = adaptive_threshold(r.sync.aligned_distance, cfg.threshold_k);
    r.discrepancy = detect_discrepant_frames(r.sync.aligned_distance, r.threshold, cfg.min_gap);
    return 0;
  });
  staged("compare", [&] {
    r.comparisons.reserve(pair.user_pose.size());
    for (std::size_t i = 0; i < pair.user_pose.size(); ++i) {
      const std::size_t j = r.sync.expert_for_user[i];
      try {
        auto c = compare_frames(pair.user_pose.frames[i], pair.expert_pose.frames[j], r.sync.aligned_distance[i],
                                cfg.with_scale);
        c.user_frame = i;
        c.expert_frame = j;
        r.comparisons.push_back(std::move(c));
      } catch (Error& e) {
        e.with("frame", std::to_string(i)).with("expert_frame", std::to_string(j));
        throw;
      }
    }
    return 0;
  });
  staged("correlate", [&] {
    r.correlations_all = correlation_table(r.comparisons);
    r.correlations_keyframes = keyframe_correlations(r);
    return 0;
  });
  return r;
}

AnalysisReport run_analysis(const SessionConfig& cfg) { return run_analysis(load_session_inputs(cfg), cfg); }

void recompute_discrepancy(AnalysisReport& report, double threshold_k, std::size_t min_gap) {
  const double threshold = adaptive_threshold(report.sync.aligned_distance, threshold_k);
  report.config.threshold_k = threshold_k;
  report.config.min_gap = min_gap;
  report.threshold = threshold;
  report.discrepancy = detect_discrepant_frames(report.sync.aligned_distance, threshold, min_gap);
  report.correlations_keyframes = keyframe_correlations(report);
}

CorrelationTable keyframe_correlations(const AnalysisReport& report) {
  std::vector<FrameComparison> picked;
  for (auto k : report.discrepancy.key_frames) picked.push_back(report.comparisons.at(k));
  if (picked.size() < 2) return undefined_correlation_table(picked.size());
  return correlation_table(picked);
}

double max_joint_error(const AnalysisReport& report) {
  double m = 0.0;
  for (const auto& c : report.comparisons)
    for (double e : c.per_joint_error) m = std::max(m, e);
  return m;
}

Json to_json(const FrameComparison& c) {
  Json j = Json::object();
  j["user_frame"] = c.user_frame;
  j["expert_frame"] = c.expert_frame;
  Json rot = Json::array();
  for (int r = 0; r < 3; ++r) rot.push_back(vec_json(c.transform.rotation.row(r).transpose()));
  j["transform"] = {{"rotation", rot}, {"translation", vec_json(c.transform.translation)}, {"scale", c.transform.scale}};
  j["per_joint_error"] = c.per_joint_error;
  j["per_group_error"] = c.per_group_error;
  j["mpjpe"] = c.mpjpe;
  j["latent_distance"] = c.latent_distance;
  Json ae = Json::array();
  for (const auto& p : c.aligned_expert) ae.push_back(vec_json(p));
  j["aligned_expert"] = std::move(ae);
  return j;
}

Json to_json(const CorrelationTable& t) {
  Json entries = Json::object();
  for (const auto& [name, v] : t.entries) entries[name] = v ? Json(*v) : Json(nullptr);
  return {{"entries", entries}, {"sample_count", t.sample_count}};
}

Json to_json(const DiscrepancyResult& d) {
  Json segs = Json::array();
  for (const auto& s : d.flagged_segments) segs.push_back(Json::array({s.start, s.end}));
  return {{"threshold", d.threshold}, {"flagged_segments", segs}, {"key_frames", d.key_frames}};
}

Json to_json(const AnalysisReport& r) {
  Json j = Json::object();
  j["versions"] = {{"schema", r.schema_version}, {"tool", r.tool_version}};
  j["config"] = to_json(r.config);
  Json steps = Json::array();
  for (const auto& s : r.path.steps) steps.push_back(Json::array({s.i, s.j}));
  j["path"] = {{"steps", steps}, {"total_cost", r.path.total_cost}};
  j["sync"] = {{"expert_for_user", r.sync.expert_for_user}, {"aligned_distance", r.sync.aligned_distance}};
  j["threshold"] = r.threshold;
  j["discrepancy"] = to_json(r.discrepancy);
  Json comps = Json::array();
  for (const auto& c : r.comparisons) comps.push_back(to_json(c));
  j["comparisons"] = std::move(comps);
  j["correlations_all"] = to_json(r.correlations_all);
  j["correlations_keyframes"] = to_json(r.correlations_keyframes);
  return j;
}

AnalysisReport report_from_json(const Json& doc) {
  const auto& versions = field(doc, "versions");
  const auto& schema = field(versions, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kReportSchemaVersion) {
    throw Error(ErrorCode::SchemaVersionMismatch, "unsupported report schema version",
                {{"found", schema.is_string() ? schema.get<std::string>() : schema.dump()},
                 {"expected", std::string(kReportSchemaVersion)}});
  }
  AnalysisReport r;
  r.schema_version = schema.get<std::string>();
  r.tool_version = field(versions, "tool").get<std::string>();
  r.config = session_config_from_json(field(doc, "config"));
  const auto& path = field(doc, "path");
  for (const auto& s : field(path, "steps")) {
    if (!s.is_array() || s.size() != 2) throw bad_report("path step must be [i, j]");
    r.path.steps.push_back({index(s[0]), index(s[1])});
  }
  r.path.total_cost = num(path, "total_cost");
  const auto& sync = field(doc, "sync");
  for (const auto& x : field(sync, "expert_for_user")) r.sync.expert_for_user.push_back(index(x));
  r.sync.aligned_distance = doubles_from(field(sync, "aligned_distance"));
  r.threshold = num(doc, "threshold");
  r.discrepancy = discrepancy_from_json(field(doc, "discrepancy"));
  for (const auto& c : field(doc, "comparisons")) r.comparisons.push_back(comparison_from_json(c));
  r.correlations_all = table_from_json(field(doc, "correlations_all"));
  r.correlations_keyframes = table_from_json(field(doc, "correlations_keyframes"));
  if (r.comparisons.size() != r.sync.expert_for_user.size() ||
      r.sync.aligned_distance.size() != r.sync.expert_for_user.size()) {
    throw bad_report("report per-frame arrays disagree in length");
  }
  return r;
}

std::string report_to_canonical_string(const AnalysisReport& report) { return canonical_json(to_json(report)); }

void write_report(const AnalysisReport& report, const std::filesystem::path& path) {
  write_text_file(path, report_to_canonical_string(report));
}

AnalysisReport read_report(const std::filesystem::path& path) {
  try {
    Json doc;
    try {
      doc = Json::parse(read_text_file(path));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::MalformedFile, std::string("invalid JSON: ") + e.what());
    }
    return report_from_json(doc);
  } catch (Error& e) {
    e.with("file", path.string());
    throw;
  }
}

std::string report_to_csv(const AnalysisReport& r) {
  std::ostringstream out;
  out << "table,group,coefficient,sample_count\n";
  auto table = [&out](const char* name, const CorrelationTable& t) {
    for (const auto& group : report_group_names()) {
      auto it = t.entries.find(group);
      out << name << ',' << group << ',';
      if (it != t.entries.end() && it->second) out << number_text(*it->second);
      out << ',' << t.sample_count << '\n';
    }
  };
  table("all", r.correlations_all);
  table("keyframes", r.correlations_keyframes);

  out << "\nframe,expert_frame,aligned_distance,threshold,flagged,key_frame,mpjpe\n";
  std::vector<bool> flagged(r.sync.aligned_distance.size(), false);
  std::vector<bool> key(flagged.size(), false);
  for (const auto& s : r.discrepancy.flagged_segments)
    for (std::size_t i = s.start; i <= s.end && i < flagged.size(); ++i) flagged[i] = true;
  for (auto k : r.discrepancy.key_frames)
    if (k < key.size()) key[k] = true;
  for (std::size_t i = 0; i < r.sync.aligned_distance.size(); ++i) {
    out << i << ',' << r.sync.expert_for_user[i] << ',' << number_text(r.sync.aligned_distance[i]) << ','
        << number_text(r.threshold) << ',' << (flagged[i] ? 1 : 0) << ',' << (key[i] ? 1 : 0) << ','
        << number_text(r.comparisons[i].mpjpe) << '\n';
  }
  return out.str();
}

}  // namespace swingcmp
