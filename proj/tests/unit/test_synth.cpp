#include <doctest.h>

#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "swingcmp/embedding.hpp"
#include "swingcmp/error.hpp"
#include "swingcmp/json_io.hpp"
#include "swingcmp/synth.hpp"

using namespace swingcmp;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("keyframe constants match the committed fixture") {
  const auto doc = load_json_file(SWINGCMP_FIXTURE_DIR "/swing_keyframes.json");
  const auto keys = swing_keyframes();
  REQUIRE(doc["keyframes"].size() == keys.size());
  for (std::size_t k = 0; k < kJointCount; ++k) CHECK(doc["joint_names"][k] == joint_names()[k]);
  for (std::size_t f = 0; f < keys.size(); ++f) {
    const auto& kf = doc["keyframes"][f];
    CHECK(kf["event"] == keys[f].event);
    for (std::size_t k = 0; k < kJointCount; ++k)
      for (int c = 0; c < 3; ++c) CHECK(kf["joints"][k][c].get<double>() == keys[f].joints[k][c]);
    for (int p = 0; p < 2; ++p)
      for (int c = 0; c < 3; ++c) CHECK(kf["club"][p][c].get<double>() == keys[f].club[p][c]);
  }
  for (std::size_t p = 0; p < kPhaseCount; ++p) CHECK(keys[p].event == swing_phase_names()[p]);
  CHECK(keys.back().event == "finish_hold");
}

TEST_CASE("generate_swing: frame count, determinism, seed only drives noise") {
  SwingParams p;
  p.frames_per_phase = {3, 4, 5, 6, 7, 8, 9, 10};
  const auto a = generate_swing(p);
  CHECK(a.size() == 52);
  CHECK(a.has_club());

  SwingParams q = p;
  q.seed = 12345;
  CHECK(generate_swing(q) == a);

  p.noise_std = 0.01;
  q.noise_std = 0.01;
  CHECK(generate_swing(p) == generate_swing(p));
  CHECK_FALSE(generate_swing(p) == generate_swing(q));
}

TEST_CASE("generated swings survive a file round trip bit for bit") {
  SwingParams p;
  p.noise_std = 0.02;
  p.seed = 8;
  const auto seq = generate_swing(p);
  const auto dir = testing::scratch_dir("synth_roundtrip");
  save_pose_sequence(seq, dir / "s.json");
  CHECK(load_pose_sequence(dir / "s.json") == seq);
}

TEST_CASE("the first frame is the address keyframe and amplitude scales motion") {
  SwingParams p;
  const auto seq = generate_swing(p);
  const auto& address = swing_keyframes().front();
  for (std::size_t k = 0; k < kJointCount; ++k)
    CHECK(seq.frames[0].joints[k] == Vec3(address.joints[k][0], address.joints[k][1], address.joints[k][2]));

  SwingParams half = p;
  half.upper_body_amplitude = 0.5;
  half.lower_body_amplitude = 0.5;
  const auto h = generate_swing(half);
  const Vec3 base(address.joints[kRWrist][0], address.joints[kRWrist][1], address.joints[kRWrist][2]);
  for (std::size_t f = 0; f < seq.size(); f += 7) {
    const Vec3 full = seq.frames[f].joints[kRWrist] - base;
    const Vec3 damped = h.frames[f].joints[kRWrist] - base;
    CHECK((damped - 0.5 * full).norm() < 1e-12);
  }
}

TEST_CASE("generate_swing rejects bad parameters") {
  SwingParams p;
  p.frames_per_phase[2] = 0;
  CHECK(code_of([&] { generate_swing(p); }) == ErrorCode::InvalidParams);
  p = SwingParams{};
  p.frames_per_phase = {2, 2, 2, 2, 2, 2, 2, 1};
  CHECK(code_of([&] { generate_swing(p); }) == ErrorCode::InvalidParams);
  p = SwingParams{};
  p.noise_std = -1;
  CHECK(code_of([&] { generate_swing(p); }) == ErrorCode::InvalidParams);
  p = SwingParams{};
  p.upper_body_amplitude = 0;
  CHECK(code_of([&] { generate_swing(p); }) == ErrorCode::InvalidParams);
}

TEST_CASE("warp specs parse, format and validate") {
  const auto w = parse_warp_spec("0:0, 0.5:0.25, 1:1");
  REQUIRE(w.control_points.size() == 3);
  CHECK(w.control_points[1].source == 0.5);
  CHECK(w.control_points[1].target == 0.25);
  CHECK(parse_warp_spec(format_warp_spec(w)).control_points.size() == 3);
  CHECK(parse_warp_spec("identity").control_points.size() == 2);

  for (const char* bad : {"0:0", "0:0,1:0.5", "0:0,0.5:0.5,0.4:0.6,1:1", "0:0,x:1", "0:0;1:1", "0:0,0.5:1.5,1:1"})
    CHECK(code_of([&] { parse_warp_spec(bad); }) == ErrorCode::InvalidWarp);
}

TEST_CASE("warp_source_time evaluates the piecewise-linear map") {
  const auto w = parse_warp_spec("0:0,0.5:0.25,1:1");
  CHECK(warp_source_time(w, 0.0) == 0.0);
  CHECK(warp_source_time(w, 0.125) == doctest::Approx(0.25));
  CHECK(warp_source_time(w, 0.25) == doctest::Approx(0.5));
  CHECK(warp_source_time(w, 0.625) == doctest::Approx(0.75));
  CHECK(warp_source_time(w, 1.0) == 1.0);
}

TEST_CASE("identity warp copies frames and correspondence") {
  SwingParams p;
  p.noise_std = 0.01;
  const auto seq = generate_swing(p);
  const auto out = apply_warp(seq, WarpSpec::identity(), seq.size());
  CHECK(out.sequence == seq);
  for (std::size_t k = 0; k < seq.size(); ++k) CHECK(out.true_correspondence[k] == k);
}

TEST_CASE("compressing the first half advances two source frames per output frame") {
  SwingParams p;
  const auto seq = generate_swing(p);  // 120 frames
  const auto out = apply_warp(seq, parse_warp_spec("0:0,0.5:0.25,1:1"), seq.size());
  const auto& c = out.true_correspondence;
  // Output frame k < ~30 shows source time 2k scaled by 119/119.
  for (std::size_t k = 0; k < 29; ++k) {
    const double expected = 2.0 * static_cast<double>(k);
    CHECK(std::abs(static_cast<double>(c[k]) - expected) <= 1.0);
  }
  CHECK(c.front() == 0);
  CHECK(c.back() == seq.size() - 1);
}

TEST_CASE("random warps: slopes bounded, correspondence monotone with fixed endpoints") {
  SwingParams p;
  const auto seq = generate_swing(p);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto w = random_warp(s);
    CHECK(w.control_points.size() == 5);
    for (std::size_t k = 1; k < w.control_points.size(); ++k) {
      const double slope = (w.control_points[k].source - w.control_points[k - 1].source) /
                           (w.control_points[k].target - w.control_points[k - 1].target);
      CHECK(slope >= 1.0 / 3.0 - 1e-12);
      CHECK(slope <= 3.0 + 1e-12);
    }
    const auto out = apply_warp(seq, w, 80 + s);
    const auto& c = out.true_correspondence;
    CHECK(c.size() == 80 + s);
    CHECK(c.front() == 0);
    CHECK(c.back() == seq.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) CHECK(c[k] >= c[k - 1]);
  }
  CHECK(code_of([&] { apply_warp(seq, WarpSpec::identity(), 1); }) == ErrorCode::InvalidWarp);
}

TEST_CASE("coupled_embedding ignores unweighted groups") {
  SwingParams p;
  const auto seq = generate_swing(p);
  PoseSequence two;
  two.frames = {seq.frames[40], seq.frames[40]};
  two.frames[1].joints[kLAnkle] += Vec3(0.1, 0.2, 0.3);
  two.frames[1].joints[kRAnkle] -= Vec3(0.3, 0.0, 0.1);
  const auto e = coupled_embedding(two, {{"Wrist", 1.0}}, 0.0, 1);
  CHECK(e.dim == 45);
  CHECK(euclidean_distance(e.frames[0], e.frames[1]) == 0.0);
}

TEST_CASE("coupled_embedding is linear in the weights without noise") {
  SwingParams p;
  const auto seq = generate_swing(p);
  const auto ones = coupled_embedding(seq, upper_lower_weights(1.0, 1.0), 0.0, 1);
  const auto twos = coupled_embedding(seq, upper_lower_weights(2.0, 2.0), 0.0, 1);
  for (std::size_t f = 1; f < seq.size(); f += 11) {
    const double d1 = euclidean_distance(ones.frames[0], ones.frames[f]);
    const double d2 = euclidean_distance(twos.frames[0], twos.frames[f]);
    CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-12));
    // Equal weights: distance is the norm of the stacked pelvis-relative
    // differences of every grouped joint (all but pelvis and thorax).
    double sq = 0.0;
    for (std::size_t k = 1; k < kJointCount; ++k) {
      if (k == kThorax) continue;
      const Vec3 a = seq.frames[0].joints[k] - seq.frames[0].joints[kPelvis];
      const Vec3 b = seq.frames[f].joints[k] - seq.frames[f].joints[kPelvis];
      sq += (a - b).squaredNorm();
    }
    CHECK(d1 == doctest::Approx(std::sqrt(sq)).epsilon(1e-12));
  }
}

TEST_CASE("coupled_embedding rejects bad weights") {
  SwingParams p;
  const auto seq = generate_swing(p);
  CHECK(code_of([&] { coupled_embedding(seq, {{"Tail", 1.0}}, 0.0, 1); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { coupled_embedding(seq, {{"Wrist", -1.0}}, 0.0, 1); }) == ErrorCode::InvalidParams);
  CHECK(code_of([&] { coupled_embedding(seq, upper_lower_weights(0.0, 0.0), 0.0, 1); }) == ErrorCode::InvalidParams);
}

TEST_CASE("presets") {
  CHECK(synth_preset_names() == std::vector<std::string>{"timing", "beginner"});
  const auto timing = synth_preset("timing", 3);
  CHECK(timing.user.noise_std == 0.0);
  const auto beginner = synth_preset("beginner", 3);
  CHECK(beginner.user.upper_body_amplitude < 1.0);
  CHECK(beginner.user.lower_body_amplitude > 1.0);
  CHECK(code_of([] { synth_preset("pro", 3); }) == ErrorCode::InvalidParams);
}
