#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "sessions.hpp"
#include "swingcmp/error.hpp"
#include "swingcmp/json_io.hpp"
#include "swingcmp/pipeline.hpp"
#include "swingcmp/synth.hpp"

using namespace swingcmp;

namespace {

Error error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(ErrorCode::Internal, "");
}

}  // namespace

TEST_CASE("self-comparison: zero cost, zero error, nothing flagged") {
  SessionInputs in;
  in.user_pose = generate_swing(testing::short_swing(1, 0.01));
  in.expert_pose = in.user_pose;
  const auto r = run_analysis(in, SessionConfig{});
  CHECK(r.path.total_cost == 0.0);
  for (const auto& c : r.comparisons) CHECK(c.mpjpe == 0.0);
  CHECK(r.discrepancy.flagged_segments.empty());
  CHECK(r.threshold == 0.0);
  CHECK(max_joint_error(r) == 0.0);
}

TEST_CASE("report invariants on a warped session") {
  const auto in = testing::warped_session(10);
  SessionConfig cfg;
  const auto r = run_analysis(in, cfg);
  CHECK(r.comparisons.size() == in.user_pose.size());
  CHECK(r.sync.expert_for_user.size() == in.user_pose.size());
  CHECK(r.threshold == adaptive_threshold(r.sync.aligned_distance, cfg.threshold_k));
  CHECK(r.discrepancy == detect_discrepant_frames(r.sync.aligned_distance, r.threshold, cfg.min_gap));
  for (std::size_t i = 0; i < r.comparisons.size(); ++i) {
    CHECK(r.comparisons[i].user_frame == i);
    CHECK(r.comparisons[i].expert_frame == r.sync.expert_for_user[i]);
    CHECK(r.comparisons[i].latent_distance == r.sync.aligned_distance[i]);
  }
  CHECK(r.correlations_all.sample_count == in.user_pose.size());
  CHECK(r.correlations_keyframes == keyframe_correlations(r));
}

TEST_CASE("proxy embeddings are used when none are given") {
  auto in = testing::warped_session(11);
  in.user_emb.reset();
  in.expert_emb.reset();
  const auto r = run_analysis(in, SessionConfig{});
  CHECK(r.comparisons.size() == in.user_pose.size());
}

TEST_CASE("errors carry the failing stage") {
  auto in = testing::warped_session(12);
  in.user_emb->frames.pop_back();
  auto e = error_of([&] { run_analysis(in, SessionConfig{}); });
  CHECK(e.code() == ErrorCode::LengthMismatch);
  CHECK(e.context().at("stage") == "validate");

  in = testing::warped_session(12);
  SessionConfig cfg;
  cfg.threshold_k = -1.0;
  cfg.step_penalty = -1.0;
  e = error_of([&] { run_analysis(in, cfg); });
  CHECK(e.code() == ErrorCode::InvalidParams);
  CHECK(e.context().at("stage") == "config");
}

TEST_CASE("recompute_discrepancy only moves the threshold stages") {
  const auto in = testing::warped_session(13);
  auto r = run_analysis(in, SessionConfig{});
  const auto before = r;
  recompute_discrepancy(r, 2.0, 1);
  CHECK(r.threshold == adaptive_threshold(r.sync.aligned_distance, 2.0));
  CHECK(r.config.threshold_k == 2.0);
  CHECK(r.config.min_gap == 1);
  CHECK(r.path == before.path);
  CHECK(r.comparisons == before.comparisons);
  CHECK(r.correlations_all == before.correlations_all);
  recompute_discrepancy(r, 1.0, 3);
  CHECK(r == before);
}

TEST_CASE("reports round-trip and are written canonically") {
  const auto r = run_analysis(testing::warped_session(14), SessionConfig{});
  const auto dir = testing::scratch_dir("report_roundtrip");
  write_report(r, dir / "a.json");
  write_report(r, dir / "b.json");
  CHECK(read_text_file(dir / "a.json") == read_text_file(dir / "b.json"));
  CHECK(read_report(dir / "a.json") == r);
  CHECK(report_to_canonical_string(read_report(dir / "a.json")) == read_text_file(dir / "a.json"));
}

TEST_CASE("unknown schema version is rejected") {
  const auto r = run_analysis(testing::warped_session(15), SessionConfig{});
  auto doc = to_json(r);
  doc["versions"]["schema"] = "swingcmp.report/99";
  CHECK(error_of([&] { report_from_json(doc); }).code() == ErrorCode::SchemaVersionMismatch);
}

TEST_CASE("session configs resolve paths next to the config file") {
  const auto dir = testing::scratch_dir("session_config");
  const auto in = testing::warped_session(16);
  save_pose_sequence(in.user_pose, dir / "user.json");
  save_pose_sequence(in.expert_pose, dir / "expert.json");
  save_embedding_sequence(*in.user_emb, dir / "user_emb.json");
  save_embedding_sequence(*in.expert_emb, dir / "expert_emb.json");
  write_text_file(dir / "session.json", R"({"user_pose": "user.json", "expert_pose": "expert.json",
    "user_emb": "user_emb.json", "expert_emb": "expert_emb.json", "threshold_k": 1.5})");

  const auto cfg = load_session_config(dir / "session.json");
  CHECK(cfg.threshold_k == 1.5);
  CHECK(cfg.min_gap == kDefaultMinGap);
  const auto from_files = run_analysis(cfg);
  CHECK(from_files.path == run_analysis(in, cfg).path);
}

TEST_CASE("config validation") {
  CHECK(error_of([] { session_config_from_json(Json{{"user_pose", "a"}}); }).code() == ErrorCode::InvalidParams);
  Json half = {{"user_pose", "a"}, {"expert_pose", "b"}, {"user_emb", "c"}};
  CHECK(error_of([&] { validate(session_config_from_json(half)); }).code() == ErrorCode::InvalidParams);
  SessionConfig cfg;
  cfg.user_pose_path = "a";
  cfg.expert_pose_path = "b";
  CHECK(session_config_from_json(to_json(cfg)) == cfg);
}

TEST_CASE("missing input files report IoFailure with the file name") {
  SessionConfig cfg;
  cfg.user_pose_path = "/nonexistent/u.json";
  cfg.expert_pose_path = "/nonexistent/e.json";
  const auto e = error_of([&] { run_analysis(cfg); });
  CHECK(e.code() == ErrorCode::IoFailure);
  CHECK(e.context().at("file") == "/nonexistent/u.json");
}

TEST_CASE("CSV export has the correlation and signal blocks") {
  const auto r = run_analysis(testing::warped_session(17), SessionConfig{});
  const auto csv = report_to_csv(r);
  CHECK(csv.rfind("table,group,coefficient,sample_count\n", 0) == 0);
  const auto blank = csv.find("\n\n");
  REQUIRE(blank != std::string::npos);
  CHECK(csv.substr(blank + 2).rfind("frame,expert_frame,aligned_distance,threshold,flagged,key_frame,mpjpe\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv.substr(blank + 2)) lines += ch == '\n';
  CHECK(lines == r.comparisons.size() + 1);
  std::size_t table_rows = 0;
  for (char ch : csv.substr(0, blank + 1)) table_rows += ch == '\n';
  CHECK(table_rows == 1 + 2 * 10);
}
