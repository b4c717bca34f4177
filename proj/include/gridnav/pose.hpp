// Copyright 2026 The Gridnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>

namespace gridnav {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wraps an angle into the half-open interval (-pi, pi].
inline double normalize_angle(double angle) {
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped <= -kPi) wrapped += kTwoPi;
  return wrapped;
}

/// Planar pose. Heading is kept in (-pi, pi] by every operation that
/// writes it; construct via normalized() when the source angle is raw.
struct Pose2D {
  double x = 0.0;      // m
  double y = 0.0;      // m
  double theta = 0.0;  // rad, in (-pi, pi]

  static Pose2D normalized(double x, double y, double theta) {
    return Pose2D{x, y, normalize_angle(theta)};
  }
};

inline double angle_diff(double a, double b) { return normalize_angle(a - b); }

inline double euclidean_distance(const Pose2D& a, const Pose2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace gridnav
