#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <Eigen/Core>

#include "swingcmp/motion_data.hpp"

namespace swingcmp {

// x -> scale * rotation * x + translation
struct SimilarityTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Vec3 translation = Vec3::Zero();
  double scale = 1.0;

  Vec3 apply(const Vec3& x) const { return scale * (rotation * x) + translation; }
  JointArray apply(const JointArray& joints) const;

  bool operator==(const SimilarityTransform& o) const {
    return rotation == o.rotation && translation == o.translation && scale == o.scale;
  }
};

struct FrameComparison {
  std::size_t user_frame = 0;
  std::size_t expert_frame = 0;
  SimilarityTransform transform;
  std::array<double, kJointCount> per_joint_error{};
  std::map<std::string, double> per_group_error;  // nine groups plus WholeBody
  double mpjpe = 0.0;
  double latent_distance = 0.0;
  JointArray aligned_expert{};  // expert joints after the fitted transform

  bool operator==(const FrameComparison&) const = default;
};

// Least-squares similarity (or rigid, when with_scale is false) transform
// carrying `moving` onto `reference`. Reflections are excluded. Throws
// DegeneratePose when either joint set collapses to a point or the optimal
// scale vanishes.
SimilarityTransform procrustes_fit(const Pose& reference, const Pose& moving, bool with_scale = true);

// Sum of squared joint distances between reference and transformed moving.
double residual(const Pose& reference, const Pose& moving, const SimilarityTransform& t);

// Fits the expert onto the user, then measures per-joint distances.
FrameComparison compare_frames(const Pose& user, const Pose& expert, double latent_distance, bool with_scale = true);

// Mean per-joint position error without any alignment.
double raw_mpjpe(const Pose& a, const Pose& b);

}  // namespace swingcmp
