#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swingcmp/motion_data.hpp"

namespace swingcmp {

// Dense row-major matrix of latent distances, user frames by expert frames.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  // Throws InvalidParams unless values has rows*cols non-negative finite entries.
  DistanceMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
  std::span<const double> values() const noexcept { return values_; }

  DistanceMatrix transpose() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// L2 norm of u - v. Throws DimensionMismatch on unequal lengths.
double euclidean_distance(std::span<const double> u, std::span<const double> v);

DistanceMatrix distance_matrix(const EmbeddingSequence& a, const EmbeddingSequence& b);

// Deterministic pose-derived embedding standing in for a learned encoder.
// Per frame: pelvis moved to the origin, scaled so the mean joint distance
// from the origin is 1, flattened to 51 values; with include_club and club
// keypoints present, the unit grip-to-head direction is appended (54 values).
// Not rotation normalized, so camera viewpoint still matters.
EmbeddingSequence proxy_embed(const PoseSequence& seq, bool include_club);

}  // namespace swingcmp
