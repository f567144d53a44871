#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "swingcmp/embedding.hpp"
#include "swingcmp/error.hpp"

using namespace swingcmp;

namespace {

EmbeddingSequence random_embedding(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  EmbeddingSequence e;
  e.dim = dim;
  for (std::size_t f = 0; f < n; ++f) {
    std::vector<double> row(dim);
    for (auto& x : row) x = g(rng);
    e.frames.push_back(row);
  }
  return e;
}

PoseSequence sequence_of(std::vector<Pose> frames) {
  PoseSequence s;
  s.frames = std::move(frames);
  return s;
}

}  // namespace

TEST_CASE("euclidean_distance on small vectors") {
  const std::vector<double> o{0, 0}, p{3, 4};
  CHECK(euclidean_distance(o, p) == 5.0);
  CHECK(euclidean_distance(p, p) == 0.0);
  const std::vector<double> a{1, 1, 1}, b{2, 2, 2};
  CHECK(euclidean_distance(a, b) == doctest::Approx(std::sqrt(1.0 + 1.0 + 1.0)).epsilon(1e-15));
  const std::vector<double> c{1, 2, 3};
  CHECK_THROWS_AS(euclidean_distance(o, c), Error);
}

TEST_CASE("distance_matrix: zero diagonal, transpose symmetry, pairwise agreement") {
  std::mt19937_64 rng(11);
  const auto a = random_embedding(rng, 3, 5);
  const auto b = random_embedding(rng, 2, 5);

  const auto self = distance_matrix(a, a);
  for (std::size_t i = 0; i < 3; ++i) CHECK(self(i, i) == 0.0);

  const auto ab = distance_matrix(a, b);
  CHECK(ab.rows() == 3);
  CHECK(ab.cols() == 2);
  CHECK(ab == distance_matrix(b, a).transpose());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      double sum = 0.0;
      for (std::size_t c = 0; c < 5; ++c) sum += (a.frames[i][c] - b.frames[j][c]) * (a.frames[i][c] - b.frames[j][c]);
      CHECK(ab(i, j) == doctest::Approx(std::sqrt(sum)).epsilon(1e-14));
    }
  }

  const auto c = random_embedding(rng, 2, 4);
  CHECK_THROWS_AS(distance_matrix(a, c), Error);
}

TEST_CASE("DistanceMatrix rejects negative, non-finite and mis-sized values") {
  CHECK_THROWS_AS(DistanceMatrix(2, 2, {0, 1, -1, 0}), Error);
  CHECK_THROWS_AS(DistanceMatrix(2, 2, {0, 1, NAN, 0}), Error);
  CHECK_THROWS_AS(DistanceMatrix(2, 2, {0, 1, 0}), Error);
}

TEST_CASE("proxy_embed is invariant to translation and pelvis-centered scaling") {
  std::mt19937_64 rng(5);
  const Pose p = testing::random_pose(rng);
  Pose shifted = p;
  for (auto& j : shifted.joints) j += Vec3(5, 5, 5);
  Pose scaled = p;
  for (auto& j : scaled.joints) j = p.joints[kPelvis] + 2.0 * (j - p.joints[kPelvis]);

  const auto e = proxy_embed(sequence_of({p, shifted, scaled}), false);
  REQUIRE(e.dim == 51);
  for (std::size_t c = 0; c < e.dim; ++c) {
    CHECK(e.frames[1][c] == doctest::Approx(e.frames[0][c]).epsilon(1e-12));
    CHECK(e.frames[2][c] == doctest::Approx(e.frames[0][c]).epsilon(1e-12));
  }
}

TEST_CASE("proxy_embed appends the club direction when asked") {
  std::mt19937_64 rng(6);
  Pose p = testing::random_pose(rng);
  p.club = ClubPoints{Vec3(0, 1, 0), Vec3(0, 1, 2)};
  const auto with = proxy_embed(sequence_of({p, p}), true);
  const auto without = proxy_embed(sequence_of({p, p}), false);
  REQUIRE(with.dim == 54);
  CHECK(without.dim == 51);
  CHECK(with.frames[0][51] == 0.0);
  CHECK(with.frames[0][52] == 0.0);
  CHECK(with.frames[0][53] == 1.0);
}

TEST_CASE("proxy_embed rejects a collapsed pose") {
  Pose p;
  for (auto& j : p.joints) j = Vec3(1, 2, 3);
  try {
    proxy_embed(sequence_of({p, p}), false);
    FAIL("expected DegeneratePose");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePose);
  }
}
