#include "swingcmp/motion_data.hpp"

#include <algorithm>
#include <cmath>

#include "swingcmp/error.hpp"

namespace swingcmp {
namespace {

constexpr std::array<std::string_view, kJointCount> kJointNames = {
    "pelvis",  "r_hip",      "r_knee",  "r_ankle", "l_hip",      "l_knee",
    "l_ankle", "spine",      "thorax",  "neck",    "head",       "l_shoulder",
    "l_elbow", "l_wrist",    "r_shoulder", "r_elbow", "r_wrist"};

Error malformed(const std::string& msg) { return Error(ErrorCode::MalformedFile, msg); }

Vec3 read_point(const Json& v, const std::string& what, std::map<std::string, std::string> ctx) {
  if (!v.is_array() || v.size() != 3) throw Error(ErrorCode::MalformedFile, what + " must be an [x,y,z] array", ctx);
  Vec3 p;
  for (std::size_t c = 0; c < 3; ++c) {
    auto d = json_to_double(v[c]);
    if (!d) throw Error(ErrorCode::MalformedFile, what + " has a non-numeric coordinate", ctx);
    if (!std::isfinite(*d)) throw Error(ErrorCode::NonFiniteValue, what + " has a non-finite coordinate", ctx);
    p[static_cast<Eigen::Index>(c)] = *d;
  }
  return p;
}

Json point_json(const Vec3& p) { return Json::array({p.x(), p.y(), p.z()}); }

bool finite(const Vec3& p) { return p.allFinite(); }

}  // namespace

const std::array<std::string_view, kJointCount>& joint_names() { return kJointNames; }

std::optional<std::size_t> joint_index(std::string_view name) {
  auto it = std::find(kJointNames.begin(), kJointNames.end(), name);
  if (it == kJointNames.end()) return std::nullopt;
  return static_cast<std::size_t>(it - kJointNames.begin());
}

const std::vector<BodyPartGroup>& body_part_groups() {
  static const std::vector<BodyPartGroup> groups = {
      {"Wrist", {kLWrist, kRWrist}},
      {"Elbow", {kLElbow, kRElbow}},
      {"Shoulder", {kLShoulder, kRShoulder}},
      {"Neck", {kNeck}},
      {"Head", {kHead}},
      {"Spine", {kSpine}},
      {"Knee", {kLKnee, kRKnee}},
      {"Foot", {kLAnkle, kRAnkle}},
      {"Hip", {kLHip, kRHip}},
  };
  return groups;
}

const std::vector<std::string>& report_group_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& g : body_part_groups()) n.emplace_back(g.name);
    n.emplace_back(kWholeBody);
    return n;
  }();
  return names;
}

std::array<std::size_t, kJointCount> schema_permutation(std::span<const std::string> names) {
  std::array<std::optional<std::size_t>, kJointCount> seen{};
  for (std::size_t pos = 0; pos < names.size(); ++pos) {
    auto idx = joint_index(names[pos]);
    if (!idx) {
      throw Error(ErrorCode::SchemaMismatch, "unknown joint name '" + names[pos] + "'",
                  {{"joint", names[pos]}});
    }
    if (seen[*idx]) {
      throw Error(ErrorCode::SchemaMismatch, "duplicate joint name '" + names[pos] + "'",
                  {{"joint", names[pos]}});
    }
    seen[*idx] = pos;
  }
  std::array<std::size_t, kJointCount> perm{};
  for (std::size_t k = 0; k < kJointCount; ++k) {
    if (!seen[k]) {
      const std::string missing(kJointNames[k]);
      throw Error(ErrorCode::SchemaMismatch, "missing joint '" + missing + "'", {{"joint", missing}});
    }
    perm[k] = *seen[k];
  }
  return perm;
}

void validate(const PoseSequence& seq) {
  if (!std::isfinite(seq.fps)) throw Error(ErrorCode::NonFiniteValue, "fps is not finite");
  if (seq.fps <= 0) throw malformed("fps must be positive");
  if (seq.frames.size() < 2) throw malformed("a pose sequence needs at least 2 frames");
  const bool club = seq.frames.front().club.has_value();
  for (std::size_t f = 0; f < seq.frames.size(); ++f) {
    const auto& pose = seq.frames[f];
    for (std::size_t k = 0; k < kJointCount; ++k) {
      if (!finite(pose.joints[k])) {
        throw Error(ErrorCode::NonFiniteValue, "non-finite joint coordinate",
                    {{"frame", std::to_string(f)}, {"joint", std::to_string(k)}});
      }
    }
    if (pose.club.has_value() != club) {
      throw Error(ErrorCode::MalformedFile, "club keypoints present in some frames only",
                  {{"frame", std::to_string(f)}});
    }
    if (pose.club && (!finite((*pose.club)[0]) || !finite((*pose.club)[1]))) {
      throw Error(ErrorCode::NonFiniteValue, "non-finite club coordinate", {{"frame", std::to_string(f)}});
    }
  }
  if (seq.frame_images && seq.frame_images->size() != seq.frames.size()) {
    throw malformed("frame_images length differs from frame count");
  }
}

void validate(const EmbeddingSequence& seq) {
  if (seq.dim == 0) throw malformed("embedding dim must be positive");
  if (seq.frames.empty()) throw malformed("embedding sequence has no frames");
  for (std::size_t f = 0; f < seq.frames.size(); ++f) {
    const auto& row = seq.frames[f];
    if (row.size() != seq.dim) {
      throw Error(ErrorCode::RaggedRows,
                  "row has length " + std::to_string(row.size()) + ", expected " + std::to_string(seq.dim),
                  {{"frame", std::to_string(f)}});
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        throw Error(ErrorCode::NonFiniteValue, "non-finite embedding value",
                    {{"frame", std::to_string(f)}, {"component", std::to_string(c)}});
      }
    }
  }
}

PoseSequence pose_sequence_from_json(const Json& doc) {
  if (!doc.is_object()) throw malformed("pose file must be a JSON object");
  PoseSequence seq;

  if (!doc.contains("fps")) throw malformed("missing 'fps'");
  auto fps = json_to_double(doc["fps"]);
  if (!fps) throw malformed("'fps' must be a number");
  seq.fps = *fps;

  if (!doc.contains("joint_names") || !doc["joint_names"].is_array()) throw malformed("missing 'joint_names' array");
  std::vector<std::string> names;
  for (const auto& n : doc["joint_names"]) {
    if (!n.is_string()) throw malformed("'joint_names' entries must be strings");
    names.push_back(n.get<std::string>());
  }
  const auto perm = schema_permutation(names);

  if (!doc.contains("frames") || !doc["frames"].is_array()) throw malformed("missing 'frames' array");
  const auto& frames = doc["frames"];
  const std::size_t frame_count = frames.size();

  const Json* club = nullptr;
  if (doc.contains("club") && !doc["club"].is_null()) {
    club = &doc["club"];
    if (!club->is_array() || club->size() != frame_count) throw malformed("'club' must have one entry per frame");
  }

  seq.frames.resize(frame_count);
  for (std::size_t f = 0; f < frame_count; ++f) {
    const auto& frame = frames[f];
    if (!frame.is_array() || frame.size() != names.size()) {
      throw Error(ErrorCode::MalformedFile, "frame must list one point per joint name", {{"frame", std::to_string(f)}});
    }
    auto& pose = seq.frames[f];
    for (std::size_t k = 0; k < kJointCount; ++k) {
      pose.joints[k] = read_point(frame[perm[k]], "joint", {{"frame", std::to_string(f)}, {"joint", std::to_string(perm[k])},
                                                           {"joint_name", std::string(kJointNames[k])}});
    }
    if (club && !(*club)[f].is_null()) {
      const auto& c = (*club)[f];
      if (!c.is_array() || c.size() != 2) {
        throw Error(ErrorCode::MalformedFile, "club entry must hold grip and head points", {{"frame", std::to_string(f)}});
      }
      pose.club = ClubPoints{read_point(c[0], "club grip", {{"frame", std::to_string(f)}}),
                             read_point(c[1], "club head", {{"frame", std::to_string(f)}})};
    }
  }

  if (doc.contains("frame_images") && !doc["frame_images"].is_null()) {
    const auto& imgs = doc["frame_images"];
    if (!imgs.is_array()) throw malformed("'frame_images' must be an array");
    std::vector<std::string> paths;
    for (const auto& s : imgs) {
      if (!s.is_string()) throw malformed("'frame_images' entries must be strings");
      paths.push_back(s.get<std::string>());
    }
    seq.frame_images = std::move(paths);
  }

  validate(seq);
  return seq;
}

Json to_json(const PoseSequence& seq) {
  Json doc = Json::object();
  doc["fps"] = seq.fps;
  Json names = Json::array();
  for (auto n : kJointNames) names.push_back(std::string(n));
  doc["joint_names"] = std::move(names);
  Json frames = Json::array();
  for (const auto& pose : seq.frames) {
    Json joints = Json::array();
    for (const auto& j : pose.joints) joints.push_back(point_json(j));
    frames.push_back(std::move(joints));
  }
  doc["frames"] = std::move(frames);
  if (seq.has_club()) {
    Json club = Json::array();
    for (const auto& pose : seq.frames) club.push_back(Json::array({point_json((*pose.club)[0]), point_json((*pose.club)[1])}));
    doc["club"] = std::move(club);
  } else {
    doc["club"] = nullptr;
  }
  doc["frame_images"] = seq.frame_images ? Json(*seq.frame_images) : Json(nullptr);
  return doc;
}

EmbeddingSequence embedding_sequence_from_json(const Json& doc) {
  if (!doc.is_object()) throw malformed("embedding file must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw malformed("'dim' must be an integer");
  const auto dim = doc["dim"].get<std::int64_t>();
  if (dim <= 0) throw malformed("'dim' must be positive");
  if (!doc.contains("frames") || !doc["frames"].is_array()) throw malformed("missing 'frames' array");

  EmbeddingSequence seq;
  seq.dim = static_cast<std::size_t>(dim);
  for (std::size_t f = 0; f < doc["frames"].size(); ++f) {
    const auto& row = doc["frames"][f];
    if (!row.is_array()) throw Error(ErrorCode::MalformedFile, "embedding row must be an array", {{"frame", std::to_string(f)}});
    std::vector<double> values;
    values.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      auto d = json_to_double(row[c]);
      if (!d) {
        throw Error(ErrorCode::MalformedFile, "embedding value must be numeric",
                    {{"frame", std::to_string(f)}, {"component", std::to_string(c)}});
      }
      values.push_back(*d);
    }
    seq.frames.push_back(std::move(values));
  }
  validate(seq);
  return seq;
}

Json to_json(const EmbeddingSequence& seq) {
  Json doc = Json::object();
  doc["dim"] = seq.dim;
  Json frames = Json::array();
  for (const auto& row : seq.frames) frames.push_back(row);
  doc["frames"] = std::move(frames);
  return doc;
}

PoseSequence load_pose_sequence(const std::filesystem::path& path) {
  try {
    return pose_sequence_from_json(load_json_file(path));
  } catch (Error& e) {
    e.with("file", path.string());
    throw;
  }
}

EmbeddingSequence load_embedding_sequence(const std::filesystem::path& path) {
  try {
    return embedding_sequence_from_json(load_json_file(path));
  } catch (Error& e) {
    e.with("file", path.string());
    throw;
  }
}

void save_pose_sequence(const PoseSequence& seq, const std::filesystem::path& path) {
  validate(seq);
  write_text_file(path, canonical_json(to_json(seq)));
}

void save_embedding_sequence(const EmbeddingSequence& seq, const std::filesystem::path& path) {
  validate(seq);
  write_text_file(path, canonical_json(to_json(seq)));
}

std::vector<Violation> validate_pair(const ClipPair& pair) {
  std::vector<Violation> out;
  auto check_side = [&out](const PoseSequence& pose, const EmbeddingSequence& emb, const std::string& side) {
    try {
      validate(pose);
    } catch (const Error& e) {
      out.push_back({"INVALID_POSE", side, e.what()});
    }
    try {
      validate(emb);
    } catch (const Error& e) {
      out.push_back({"INVALID_EMBEDDING", side, e.what()});
    }
    if (pose.size() != emb.size()) {
      out.push_back({"LENGTH_MISMATCH", side,
                     "pose has " + std::to_string(pose.size()) + " frames, embedding has " + std::to_string(emb.size())});
    }
  };
  check_side(pair.user_pose, pair.user_emb, "user");
  check_side(pair.expert_pose, pair.expert_emb, "expert");
  if (pair.user_emb.dim != pair.expert_emb.dim) {
    out.push_back({"DIM_MISMATCH", "pair",
                   "embedding dims " + std::to_string(pair.user_emb.dim) + " vs " + std::to_string(pair.expert_emb.dim)});
  }
  return out;
}

}  // namespace swingcmp
