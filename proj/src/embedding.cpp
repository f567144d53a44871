#include "swingcmp/embedding.hpp"

#include <cmath>
#include <string>

#include "swingcmp/error.hpp"

namespace swingcmp {

DistanceMatrix::DistanceMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw Error(ErrorCode::InvalidParams, "distance matrix value count does not match its shape");
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0) {
      throw Error(ErrorCode::InvalidParams, "distance matrix entries must be finite and non-negative");
    }
  }
}

DistanceMatrix DistanceMatrix::transpose() const {
  std::vector<double> t(values_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = values_[i * cols_ + j];
  return DistanceMatrix(cols_, rows_, std::move(t));
}

double euclidean_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths differ: " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double d = u[k] - v[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

DistanceMatrix distance_matrix(const EmbeddingSequence& a, const EmbeddingSequence& b) {
  if (a.dim != b.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "embedding dims differ: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim));
  }
  std::vector<double> values;
  values.reserve(a.size() * b.size());
  for (const auto& ra : a.frames)
    for (const auto& rb : b.frames) values.push_back(euclidean_distance(ra, rb));
  return DistanceMatrix(a.size(), b.size(), std::move(values));
}

EmbeddingSequence proxy_embed(const PoseSequence& seq, bool include_club) {
  if (seq.frames.size() < 2) throw Error(ErrorCode::InvalidParams, "proxy embedding needs at least 2 frames");
  const bool club = include_club && seq.has_club();

  EmbeddingSequence out;
  out.dim = 3 * kJointCount + (club ? 3 : 0);
  out.frames.reserve(seq.size());
  for (std::size_t f = 0; f < seq.size(); ++f) {
    const auto& pose = seq.frames[f];
    const Vec3 root = pose.joints[kPelvis];
    double mean_norm = 0.0;
    for (const auto& j : pose.joints) mean_norm += (j - root).norm();
    mean_norm /= static_cast<double>(kJointCount);
    if (!(mean_norm > 0.0)) {
      throw Error(ErrorCode::DegeneratePose, "all joints coincide; scale undefined", {{"frame", std::to_string(f)}});
    }

    std::vector<double> row;
    row.reserve(out.dim);
    for (const auto& j : pose.joints) {
      const Vec3 p = (j - root) / mean_norm;
      row.insert(row.end(), {p.x(), p.y(), p.z()});
    }
    if (club) {
      const Vec3 shaft = (*pose.club)[1] - (*pose.club)[0];
      const double len = shaft.norm();
      if (!(len > 0.0)) {
        throw Error(ErrorCode::DegeneratePose, "club grip and head coincide", {{"frame", std::to_string(f)}});
      }
      const Vec3 dir = shaft / len;
      row.insert(row.end(), {dir.x(), dir.y(), dir.z()});
    }
    out.frames.push_back(std::move(row));
  }
  return out;
}

}  // namespace swingcmp
