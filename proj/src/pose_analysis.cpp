#include "swingcmp/pose_analysis.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "swingcmp/error.hpp"

namespace swingcmp {
namespace {

constexpr double kDegenerateNorm = 1e-12 * static_cast<double>(kJointCount);

Vec3 centroid(const JointArray& pts) {
  Vec3 c = Vec3::Zero();
  for (const auto& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

double mean_over(const std::array<double, kJointCount>& err, const std::vector<std::size_t>& members) {
  double sum = 0.0;
  for (auto k : members) sum += err[k];
  return sum / static_cast<double>(members.size());
}

}  // namespace

JointArray SimilarityTransform::apply(const JointArray& joints) const {
  JointArray out;
  for (std::size_t k = 0; k < joints.size(); ++k) out[k] = apply(joints[k]);
  return out;
}

SimilarityTransform procrustes_fit(const Pose& reference, const Pose& moving, bool with_scale) {
  const Vec3 ref_mean = centroid(reference.joints);
  const Vec3 mov_mean = centroid(moving.joints);

  Eigen::Matrix3d cross = Eigen::Matrix3d::Zero();
  double mov_sq = 0.0;
  double ref_sq = 0.0;
  for (std::size_t k = 0; k < kJointCount; ++k) {
    const Vec3 x = moving.joints[k] - mov_mean;
    const Vec3 y = reference.joints[k] - ref_mean;
    cross += x * y.transpose();
    mov_sq += x.squaredNorm();
    ref_sq += y.squaredNorm();
  }
  if (!std::isfinite(mov_sq) || !std::isfinite(ref_sq)) {
    throw Error(ErrorCode::NonFiniteValue, "pose has non-finite coordinates");
  }
  if (std::sqrt(mov_sq) < kDegenerateNorm) {
    throw Error(ErrorCode::DegeneratePose, "moving pose collapses to a point");
  }
  if (std::sqrt(ref_sq) < kDegenerateNorm) {
    throw Error(ErrorCode::DegeneratePose, "reference pose collapses to a point");
  }

  // Coincident joint sets: the identity is exact, the SVD route is only close.
  if (reference.joints == moving.joints) return SimilarityTransform{};

  // cross = U S V^T; R = V D U^T maximizes tr(R * cross) with det(R) = +1.
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix3d& u = svd.matrixU();
  const Eigen::Matrix3d& v = svd.matrixV();
  Vec3 correction = Vec3::Ones();
  if ((v * u.transpose()).determinant() < 0) correction[2] = -1.0;

  SimilarityTransform t;
  t.rotation = v * correction.asDiagonal() * u.transpose();
  if (with_scale) {
    t.scale = svd.singularValues().dot(correction) / mov_sq;
    if (!(t.scale > 0.0) || !std::isfinite(t.scale)) {
      throw Error(ErrorCode::DegeneratePose, "optimal scale is not positive");
    }
  }
  t.translation = ref_mean - t.scale * (t.rotation * mov_mean);
  return t;
}

double residual(const Pose& reference, const Pose& moving, const SimilarityTransform& t) {
  double sum = 0.0;
  for (std::size_t k = 0; k < kJointCount; ++k) sum += (reference.joints[k] - t.apply(moving.joints[k])).squaredNorm();
  return sum;
}

FrameComparison compare_frames(const Pose& user, const Pose& expert, double latent_distance, bool with_scale) {
  FrameComparison c;
  c.transform = procrustes_fit(user, expert, with_scale);
  c.aligned_expert = c.transform.apply(expert.joints);
  for (std::size_t k = 0; k < kJointCount; ++k) c.per_joint_error[k] = (user.joints[k] - c.aligned_expert[k]).norm();

  double sum = 0.0;
  for (double e : c.per_joint_error) sum += e;
  c.mpjpe = sum / static_cast<double>(kJointCount);

  for (const auto& g : body_part_groups()) c.per_group_error[std::string(g.name)] = mean_over(c.per_joint_error, g.members);
  c.per_group_error[std::string(kWholeBody)] = c.mpjpe;
  c.latent_distance = latent_distance;
  return c;
}

double raw_mpjpe(const Pose& a, const Pose& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < kJointCount; ++k) sum += (a.joints[k] - b.joints[k]).norm();
  return sum / static_cast<double>(kJointCount);
}

}  // namespace swingcmp
