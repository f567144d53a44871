#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "swingcmp/json_io.hpp"

namespace swingcmp {

using Vec3 = Eigen::Vector3d;

inline constexpr std::size_t kJointCount = 17;

// Joint indices in canonical schema order.
enum Joint : std::size_t {
  kPelvis = 0,
  kRHip,
  kRKnee,
  kRAnkle,
  kLHip,
  kLKnee,
  kLAnkle,
  kSpine,
  kThorax,
  kNeck,
  kHead,
  kLShoulder,
  kLElbow,
  kLWrist,
  kRShoulder,
  kRElbow,
  kRWrist,
};

const std::array<std::string_view, kJointCount>& joint_names();
std::optional<std::size_t> joint_index(std::string_view name);

struct BodyPartGroup {
  std::string_view name;
  std::vector<std::size_t> members;
};

inline constexpr std::string_view kWholeBody = "WholeBody";

// The nine named body-part groups in canonical order. The pelvis and thorax
// belong to none of them; they only contribute to WholeBody.
const std::vector<BodyPartGroup>& body_part_groups();

// Group names for reporting: the nine groups followed by WholeBody.
const std::vector<std::string>& report_group_names();

using JointArray = std::array<Vec3, kJointCount>;
using ClubPoints = std::array<Vec3, 2>;  // grip, club head

struct Pose {
  JointArray joints{};
  std::optional<ClubPoints> club;

  friend bool operator==(const Pose&, const Pose&) = default;
};

struct PoseSequence {
  double fps = 30.0;
  std::vector<Pose> frames;
  std::optional<std::vector<std::string>> frame_images;

  std::size_t size() const noexcept { return frames.size(); }
  bool has_club() const noexcept { return !frames.empty() && frames.front().club.has_value(); }

  friend bool operator==(const PoseSequence&, const PoseSequence&) = default;
};

struct EmbeddingSequence {
  std::size_t dim = 0;
  std::vector<std::vector<double>> frames;

  std::size_t size() const noexcept { return frames.size(); }

  friend bool operator==(const EmbeddingSequence&, const EmbeddingSequence&) = default;
};

struct ClipPair {
  PoseSequence user_pose;
  PoseSequence expert_pose;
  EmbeddingSequence user_emb;
  EmbeddingSequence expert_emb;
};

// Permutation taking input joint order to schema order: result[k] is the
// input position of schema joint k. Throws SchemaMismatch naming the first
// unknown, duplicated or missing joint.
std::array<std::size_t, kJointCount> schema_permutation(std::span<const std::string> names);

// Throws NonFiniteValue / MalformedFile when a sequence breaks its invariants.
void validate(const PoseSequence& seq);
void validate(const EmbeddingSequence& seq);

PoseSequence pose_sequence_from_json(const Json& doc);
Json to_json(const PoseSequence& seq);
EmbeddingSequence embedding_sequence_from_json(const Json& doc);
Json to_json(const EmbeddingSequence& seq);

PoseSequence load_pose_sequence(const std::filesystem::path& path);
EmbeddingSequence load_embedding_sequence(const std::filesystem::path& path);
void save_pose_sequence(const PoseSequence& seq, const std::filesystem::path& path);
void save_embedding_sequence(const EmbeddingSequence& seq, const std::filesystem::path& path);

struct Violation {
  std::string code;     // LENGTH_MISMATCH, DIM_MISMATCH, ...
  std::string subject;  // "user", "expert" or "pair"
  std::string message;

  // e.g. "LENGTH_MISMATCH(user)"
  std::string label() const { return code + "(" + subject + ")"; }
};

// Every invariant violation of the pair, reported as data.
std::vector<Violation> validate_pair(const ClipPair& pair);

}  // namespace swingcmp
