#include <doctest.h>

#include <cmath>
#include <random>

#include "swingcmp/discrepancy.hpp"
#include "swingcmp/error.hpp"

using namespace swingcmp;

namespace {

std::vector<Segment> segs(std::initializer_list<std::pair<std::size_t, std::size_t>> s) {
  std::vector<Segment> out;
  for (auto [a, b] : s) out.push_back({a, b});
  return out;
}

}  // namespace

TEST_CASE("threshold of the one-spike signal") {
  const std::vector<double> s{1, 1, 1, 1, 9};
  CHECK(adaptive_threshold(s, 1.0) == doctest::Approx(5.8).epsilon(1e-14));
  CHECK(adaptive_threshold(s, 0.0) == doctest::Approx(2.6).epsilon(1e-14));
  CHECK(adaptive_threshold(s, 2.0) == doctest::Approx(2.6 + 2 * 3.2).epsilon(1e-14));

  const auto r = detect_discrepant_frames(s, 5.8, 0);
  CHECK(r.flagged_segments == segs({{4, 4}}));
  CHECK(r.key_frames == std::vector<std::size_t>{4});
}

TEST_CASE("constant signal thresholds at its value for any k") {
  const std::vector<double> c{2.5, 2.5, 2.5};
  for (double k : {0.0, 1.0, 3.0}) CHECK(adaptive_threshold(c, k) == 2.5);
  CHECK(detect_discrepant_frames(c, adaptive_threshold(c, 1.0)).flagged_segments.empty());
}

TEST_CASE("threshold errors") {
  CHECK_THROWS_AS(adaptive_threshold(std::vector<double>{}, 1.0), Error);
  CHECK_THROWS_AS(adaptive_threshold(std::vector<double>{1.0, NAN}, 1.0), Error);
  CHECK_THROWS_AS(adaptive_threshold(std::vector<double>{1.0, 2.0}, INFINITY), Error);
}

TEST_CASE("nothing above threshold means no segments") {
  const std::vector<double> s{0.1, 0.2, 0.3};
  const auto r = detect_discrepant_frames(s, 0.3);
  CHECK(r.flagged_segments.empty());
  CHECK(r.key_frames.empty());
  CHECK(r.threshold == 0.3);
}

TEST_CASE("runs closer than min_gap merge; equal maxima pick the first") {
  const std::vector<double> s{0, 7, 0, 7, 0};
  const auto merged = detect_discrepant_frames(s, 5, 2);
  CHECK(merged.flagged_segments == segs({{1, 3}}));
  CHECK(merged.key_frames == std::vector<std::size_t>{1});

  const auto apart = detect_discrepant_frames(s, 5, 1);
  CHECK(apart.flagged_segments == segs({{1, 1}, {3, 3}}));
  CHECK(apart.key_frames == std::vector<std::size_t>{1, 3});
}

TEST_CASE("gap equal to min_gap keeps runs apart") {
  const std::vector<double> s{9, 0, 0, 0, 8};
  CHECK(detect_discrepant_frames(s, 5, 3).flagged_segments == segs({{0, 0}, {4, 4}}));
  CHECK(detect_discrepant_frames(s, 5, 4).flagged_segments == segs({{0, 4}}));
}

TEST_CASE("segments are sorted, disjoint, and key frames hold the segment max") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> len(1, 60), gap(0, 5);
  for (int t = 0; t < 500; ++t) {
    std::vector<double> s(len(rng));
    for (auto& x : s) x = std::round(u(rng) * 10) / 10;
    const double th = adaptive_threshold(s, 0.5);
    const auto r = detect_discrepant_frames(s, th, gap(rng));
    REQUIRE(r.key_frames.size() == r.flagged_segments.size());
    for (std::size_t k = 0; k < r.flagged_segments.size(); ++k) {
      const auto& seg = r.flagged_segments[k];
      CHECK(seg.start <= seg.end);
      CHECK(s[seg.start] > th);
      CHECK(s[seg.end] > th);
      if (k) CHECK(seg.start > r.flagged_segments[k - 1].end + 1);
      const auto key = r.key_frames[k];
      CHECK(key >= seg.start);
      CHECK(key <= seg.end);
      for (std::size_t i = seg.start; i <= seg.end; ++i) {
        CHECK(s[i] <= s[key]);
        if (i < key) CHECK(s[i] < s[key]);
      }
    }
  }
}
