#include "swingcmp/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "swingcmp/error.hpp"

namespace swingcmp {
namespace {

constexpr std::array<std::string_view, kPhaseCount> kPhaseNames = {
    "address", "toe_up", "mid_backswing", "top", "mid_downswing", "impact", "mid_follow_through", "finish"};

bool is_upper_body(std::size_t joint) { return joint >= kSpine; }

Vec3 to_vec(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }

double ease(double t) { return t * t * (3.0 - 2.0 * t); }

Error invalid(const std::string& msg) { return Error(ErrorCode::InvalidParams, msg); }

double parse_number(std::string_view s) {
  double v = 0.0;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidWarp, "not a number in warp spec: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

const std::array<std::string_view, kPhaseCount>& swing_phase_names() { return kPhaseNames; }

PoseSequence generate_swing(const SwingParams& p) {
  std::size_t total = 0;
  for (auto n : p.frames_per_phase) {
    if (n == 0) throw invalid("every phase needs at least one frame");
    total += n;
  }
  if (total < 16) throw invalid("a swing needs at least 16 frames");
  if (!std::isfinite(p.noise_std) || p.noise_std < 0) throw invalid("noise_std must be finite and non-negative");
  if (!std::isfinite(p.upper_body_amplitude) || p.upper_body_amplitude <= 0 ||
      !std::isfinite(p.lower_body_amplitude) || p.lower_body_amplitude <= 0) {
    throw invalid("amplitudes must be positive");
  }

  const auto keys = swing_keyframes();
  const auto& address = keys.front();

  PoseSequence seq;
  seq.fps = 30.0;
  seq.frames.reserve(total);
  for (std::size_t phase = 0; phase < kPhaseCount; ++phase) {
    const auto& from = keys[phase];
    const auto& to = keys[phase + 1];
    const std::size_t n = p.frames_per_phase[phase];
    for (std::size_t f = 0; f < n; ++f) {
      const double s = ease(static_cast<double>(f) / static_cast<double>(n));
      Pose pose;
      for (std::size_t k = 0; k < kJointCount; ++k) {
        const Vec3 base = to_vec(address.joints[k]);
        const Vec3 key = (1.0 - s) * to_vec(from.joints[k]) + s * to_vec(to.joints[k]);
        const double amp = is_upper_body(k) ? p.upper_body_amplitude : p.lower_body_amplitude;
        pose.joints[k] = base + amp * (key - base);
      }
      ClubPoints club;
      for (std::size_t c = 0; c < 2; ++c) {
        const Vec3 base = to_vec(address.club[c]);
        const Vec3 key = (1.0 - s) * to_vec(from.club[c]) + s * to_vec(to.club[c]);
        club[c] = base + p.upper_body_amplitude * (key - base);
      }
      pose.club = club;
      seq.frames.push_back(pose);
    }
  }

  if (p.noise_std > 0) {
    std::mt19937_64 rng(p.seed);
    std::normal_distribution<double> jitter(0.0, p.noise_std);
    for (auto& pose : seq.frames) {
      for (auto& j : pose.joints)
        for (int c = 0; c < 3; ++c) j[c] += jitter(rng);
      for (auto& cp : *pose.club)
        for (int c = 0; c < 3; ++c) cp[c] += jitter(rng);
    }
  }
  return seq;
}

void validate(const WarpSpec& warp) {
  const auto& pts = warp.control_points;
  if (pts.size() < 2) throw Error(ErrorCode::InvalidWarp, "a warp needs at least two control points");
  for (const auto& pt : pts) {
    if (!std::isfinite(pt.source) || !std::isfinite(pt.target) || pt.source < 0 || pt.source > 1 || pt.target < 0 ||
        pt.target > 1) {
      throw Error(ErrorCode::InvalidWarp, "warp control points must lie in [0,1]^2");
    }
  }
  if (pts.front().source != 0.0 || pts.front().target != 0.0 || pts.back().source != 1.0 ||
      pts.back().target != 1.0) {
    throw Error(ErrorCode::InvalidWarp, "warp must run from (0,0) to (1,1)");
  }
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (!(pts[k].source > pts[k - 1].source) || !(pts[k].target > pts[k - 1].target)) {
      throw Error(ErrorCode::InvalidWarp, "warp control points must be strictly increasing");
    }
  }
}

WarpSpec parse_warp_spec(std::string_view text) {
  if (text == "identity") return WarpSpec::identity();
  WarpSpec warp;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::InvalidWarp, "warp control point must be source:target, got '" + std::string(item) + "'");
    }
    warp.control_points.push_back({parse_number(item.substr(0, colon)), parse_number(item.substr(colon + 1))});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  validate(warp);
  return warp;
}

std::string format_warp_spec(const WarpSpec& warp) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t k = 0; k < warp.control_points.size(); ++k) {
    if (k) out << ',';
    out << warp.control_points[k].source << ':' << warp.control_points[k].target;
  }
  return out.str();
}

double warp_source_time(const WarpSpec& warp, double target) {
  const auto& pts = warp.control_points;
  target = std::clamp(target, 0.0, 1.0);
  std::size_t seg = 1;
  while (seg + 1 < pts.size() && pts[seg].target < target) ++seg;
  const auto& a = pts[seg - 1];
  const auto& b = pts[seg];
  const double u = (target - a.target) / (b.target - a.target);
  return a.source + u * (b.source - a.source);
}

WarpSpec random_warp(std::uint64_t seed, std::size_t interior) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> length(1.0, 3.0);
  const std::size_t segments = interior + 1;
  std::vector<double> src(segments);
  std::vector<double> tgt(segments);
  for (std::size_t k = 0; k < segments; ++k) {
    src[k] = length(rng);
    tgt[k] = length(rng);
  }
  auto normalize = [](std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    for (double& x : v) x /= sum;
  };
  normalize(src);
  normalize(tgt);

  WarpSpec warp;
  warp.control_points.push_back({0.0, 0.0});
  double s = 0.0;
  double t = 0.0;
  for (std::size_t k = 0; k + 1 < segments; ++k) {
    s += src[k];
    t += tgt[k];
    warp.control_points.push_back({s, t});
  }
  warp.control_points.push_back({1.0, 1.0});
  validate(warp);
  return warp;
}

WarpedSequence apply_warp(const PoseSequence& seq, const WarpSpec& warp, std::size_t out_len) {
  validate(warp);
  if (out_len < 2) throw Error(ErrorCode::InvalidWarp, "warped sequence needs at least 2 frames");
  if (seq.frames.empty()) throw Error(ErrorCode::InvalidWarp, "cannot warp an empty sequence");

  const std::size_t last = seq.frames.size() - 1;
  WarpedSequence out;
  out.sequence.fps = seq.fps;
  out.sequence.frames.reserve(out_len);
  if (seq.frame_images) out.sequence.frame_images.emplace();

  for (std::size_t k = 0; k < out_len; ++k) {
    const double target = static_cast<double>(k) / static_cast<double>(out_len - 1);
    double x = warp_source_time(warp, target) * static_cast<double>(last);
    // Snap positions that are integral up to rounding so exact frames copy bit for bit.
    if (std::abs(x - std::round(x)) < 1e-9) x = std::round(x);
    x = std::clamp(x, 0.0, static_cast<double>(last));

    const auto lo = static_cast<std::size_t>(std::floor(x));
    const auto hi = std::min(lo + 1, last);
    const double frac = x - static_cast<double>(lo);

    Pose pose;
    if (frac == 0.0) {
      pose = seq.frames[lo];
    } else {
      const auto& a = seq.frames[lo];
      const auto& b = seq.frames[hi];
      for (std::size_t j = 0; j < kJointCount; ++j) pose.joints[j] = (1.0 - frac) * a.joints[j] + frac * b.joints[j];
      if (a.club && b.club) {
        pose.club = ClubPoints{(1.0 - frac) * (*a.club)[0] + frac * (*b.club)[0],
                               (1.0 - frac) * (*a.club)[1] + frac * (*b.club)[1]};
      }
    }
    const auto nearest = static_cast<std::size_t>(std::lround(x));
    out.sequence.frames.push_back(pose);
    out.true_correspondence.push_back(nearest);
    if (seq.frame_images) out.sequence.frame_images->push_back((*seq.frame_images)[nearest]);
  }
  return out;
}

GroupWeights upper_lower_weights(double upper, double lower) {
  return {{"Wrist", upper}, {"Elbow", upper}, {"Shoulder", upper}, {"Neck", upper}, {"Head", upper},
          {"Spine", upper}, {"Knee", lower},  {"Foot", lower},     {"Hip", lower}};
}

EmbeddingSequence coupled_embedding(const PoseSequence& seq, const GroupWeights& weights, double noise_std,
                                    std::uint64_t seed) {
  bool any = false;
  for (const auto& [name, w] : weights) {
    const auto& groups = body_part_groups();
    if (std::none_of(groups.begin(), groups.end(), [&](const BodyPartGroup& g) { return g.name == name; })) {
      throw invalid("unknown body-part group '" + name + "'");
    }
    if (!std::isfinite(w) || w < 0) throw invalid("group weights must be finite and non-negative");
    any = any || w > 0;
  }
  if (!any) throw invalid("at least one group weight must be positive");
  if (!std::isfinite(noise_std) || noise_std < 0) throw invalid("noise_std must be finite and non-negative");

  EmbeddingSequence out;
  for (const auto& g : body_part_groups()) out.dim += 3 * g.members.size();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_std > 0 ? noise_std : 1.0);
  for (const auto& pose : seq.frames) {
    std::vector<double> row;
    row.reserve(out.dim);
    const Vec3 root = pose.joints[kPelvis];
    for (const auto& g : body_part_groups()) {
      auto it = weights.find(std::string(g.name));
      const double w = it == weights.end() ? 0.0 : it->second;
      for (auto k : g.members) {
        const Vec3 v = w * (pose.joints[k] - root);
        row.insert(row.end(), {v.x(), v.y(), v.z()});
      }
    }
    if (noise_std > 0)
      for (double& x : row) x += noise(rng);
    out.frames.push_back(std::move(row));
  }
  return out;
}

SynthPreset synth_preset(std::string_view name, std::uint64_t seed) {
  SynthPreset p;
  p.name = std::string(name);
  p.expert.seed = seed;
  p.user.seed = seed + 1;
  p.weights = upper_lower_weights(1.0, 0.3);
  if (name == "timing") {
    return p;
  }
  if (name == "beginner") {
    p.user.upper_body_amplitude = 0.85;
    p.user.lower_body_amplitude = 1.25;
    p.user.noise_std = 0.01;
    p.embedding_noise = 0.02;
    return p;
  }
  throw invalid("unknown synth preset '" + std::string(name) + "'");
}

std::vector<std::string> synth_preset_names() { return {"timing", "beginner"}; }

}  // namespace swingcmp
