#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swingcmp/motion_data.hpp"

namespace swingcmp {

inline constexpr std::size_t kPhaseCount = 8;

// address, toe_up, mid_backswing, top, mid_downswing, impact,
// mid_follow_through, finish
const std::array<std::string_view, kPhaseCount>& swing_phase_names();

struct SwingKeyframe {
  std::string_view event;
  std::array<std::array<double, 3>, kJointCount> joints;
  std::array<std::array<double, 3>, 2> club;  // grip, head
};

// One keyframe per phase start plus a closing "finish_hold" pose that the
// last phase eases into. Coordinates in meters, y up, target along +x.
std::span<const SwingKeyframe> swing_keyframes();

// Random streams: joint jitter in generate_swing and embedding noise in
// coupled_embedding each draw from their own std::mt19937_64 seeded with the
// given seed, consumed frame by frame, then joint by joint, then x, y, z.
struct SwingParams {
  std::uint64_t seed = 0;
  std::array<std::size_t, kPhaseCount> frames_per_phase{15, 15, 15, 15, 15, 15, 15, 15};
  double noise_std = 0.0;
  double upper_body_amplitude = 1.0;
  double lower_body_amplitude = 1.0;
};

// Keyframes interpolated per phase with a cubic ease, motion relative to the
// address pose scaled per body half, plus seeded Gaussian jitter. Always
// carries club keypoints. Throws InvalidParams.
PoseSequence generate_swing(const SwingParams& params);

struct WarpPoint {
  double source = 0.0;
  double target = 0.0;
};

// Piecewise-linear time warp through (source, target) control points in
// [0,1]^2, strictly increasing in both coordinates, from (0,0) to (1,1).
struct WarpSpec {
  std::vector<WarpPoint> control_points;

  static WarpSpec identity() { return {{{0.0, 0.0}, {1.0, 1.0}}}; }
};

// Throws InvalidWarp.
void validate(const WarpSpec& warp);

// "identity" or comma separated source:target pairs, e.g. "0:0,0.5:0.25,1:1".
WarpSpec parse_warp_spec(std::string_view text);
std::string format_warp_spec(const WarpSpec& warp);

// Normalized source time shown at normalized output time `target`.
double warp_source_time(const WarpSpec& warp, double target);

// A random warp with `interior` control points and per-segment slopes in
// [1/3, 3].
WarpSpec random_warp(std::uint64_t seed, std::size_t interior = 3);

struct WarpedSequence {
  PoseSequence sequence;
  std::vector<std::size_t> true_correspondence;  // output frame -> nearest source frame
};

// Resamples `seq` to `out_len` frames along the warp, linearly interpolating
// between neighboring source frames. Throws InvalidWarp.
WarpedSequence apply_warp(const PoseSequence& seq, const WarpSpec& warp, std::size_t out_len);

using GroupWeights = std::map<std::string, double>;

// Weight `upper` on Wrist, Elbow, Shoulder, Neck, Head, Spine and `lower` on
// Knee, Foot, Hip.
GroupWeights upper_lower_weights(double upper, double lower);

// Per frame: for each body-part group in canonical order, its member joints
// relative to the pelvis times the group weight, concatenated (45 values),
// plus seeded Gaussian noise. Unlisted groups get weight 0. Throws
// InvalidParams for unknown groups, negative weights or all-zero weights.
EmbeddingSequence coupled_embedding(const PoseSequence& seq, const GroupWeights& weights, double noise_std,
                                    std::uint64_t seed);

// Parameters for the `synth` command: an expert swing and a user swing built
// from the same keyframes, plus embedding settings.
struct SynthPreset {
  std::string name;
  SwingParams expert;
  SwingParams user;
  GroupWeights weights;
  double embedding_noise = 0.0;
};

// "timing" (user differs only by the time warp) or "beginner" (smaller upper
// body motion, larger lower body motion, jitter). Throws InvalidParams.
SynthPreset synth_preset(std::string_view name, std::uint64_t seed);
std::vector<std::string> synth_preset_names();

}  // namespace swingcmp
