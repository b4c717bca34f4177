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
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gridnav/pose.hpp"

namespace gridnav {

enum class CellState : uint8_t { kFree = 0, kOccupied = 1, kUnknown = 2 };

struct GridIndex {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

/// Tri-state occupancy grid. Cell (0,0) has its corner at `origin`; the
/// origin pose may carry a rotation, in which case grid axes are rotated
/// relative to the world frame. Reads are pure and thread-safe on a shared
/// map; mutation is limited to set_cell().
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, double resolution,
                Pose2D origin = {0.0, 0.0, 0.0},
                CellState fill = CellState::kFree)
      : width_(width),
        height_(height),
        resolution_(resolution),
        origin_(origin),
        cells_(static_cast<size_t>(width) * static_cast<size_t>(height), fill) {
    if (width < 1 || height < 1)
      throw std::invalid_argument("OccupancyGrid: width and height must be >= 1");
    if (!(resolution > 0.0))
      throw std::invalid_argument("OccupancyGrid: resolution must be > 0");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const Pose2D& origin() const { return origin_; }

  bool in_bounds(GridIndex c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
  }

  CellState at(GridIndex c) const {
    return cells_[static_cast<size_t>(c.y) * width_ + c.x];
  }

  void set_cell(GridIndex c, CellState s) {
    cells_[static_cast<size_t>(c.y) * width_ + c.x] = s;
  }

  /// A cell blocks rays and travel when OCCUPIED or UNKNOWN.
  bool blocks(GridIndex c) const { return at(c) != CellState::kFree; }

  /// World point -> containing cell, or nullopt when outside the map.
  /// Floor-based: the cell [i,j] covers [i*res, (i+1)*res) x [j*res, (j+1)*res)
  /// in the grid frame.
  std::optional<GridIndex> world_to_grid(Point2D p) const {
    Point2D g = world_to_grid_frame(p);
    GridIndex c{static_cast<int>(std::floor(g.x / resolution_)),
                static_cast<int>(std::floor(g.y / resolution_))};
    if (!in_bounds(c)) return std::nullopt;
    return c;
  }

  /// Center of a cell in world coordinates.
  Point2D grid_to_world(GridIndex c) const {
    return grid_frame_to_world({(c.x + 0.5) * resolution_, (c.y + 0.5) * resolution_});
  }

  /// Distance along `bearing` from `start` to the boundary of the first
  /// blocking cell, capped at range_max. A ray that leaves the map before
  /// hitting anything reports range_max (no return), mirroring a max-range
  /// LiDAR reading. Amanatides-Woo traversal, so the result is exact up to
  /// floating-point rounding.
  double raycast(Point2D start, double bearing, double range_max) const {
    Point2D s = world_to_grid_frame(start);
    GridIndex cell{static_cast<int>(std::floor(s.x / resolution_)),
                   static_cast<int>(std::floor(s.y / resolution_))};
    if (!in_bounds(cell))
      throw std::out_of_range("raycast: start position outside map bounds");
    if (blocks(cell)) return 0.0;

    const double b = bearing - origin_.theta;
    const double dx = std::cos(b);
    const double dy = std::sin(b);
    constexpr double kInf = std::numeric_limits<double>::infinity();

    const int step_x = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
    const int step_y = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);

    // Distance along the ray to the next cell border in each axis.
    double t_max_x = kInf, t_delta_x = kInf;
    if (step_x != 0) {
      double border = (cell.x + (step_x > 0 ? 1 : 0)) * resolution_;
      t_max_x = (border - s.x) / dx;
      t_delta_x = resolution_ / std::abs(dx);
    }
    double t_max_y = kInf, t_delta_y = kInf;
    if (step_y != 0) {
      double border = (cell.y + (step_y > 0 ? 1 : 0)) * resolution_;
      t_max_y = (border - s.y) / dy;
      t_delta_y = resolution_ / std::abs(dy);
    }

    for (;;) {
      double t;
      if (t_max_x < t_max_y) {
        t = t_max_x;
        t_max_x += t_delta_x;
        cell.x += step_x;
      } else {
        t = t_max_y;
        t_max_y += t_delta_y;
        cell.y += step_y;
      }
      if (t > range_max) return range_max;
      if (!in_bounds(cell)) return range_max;  // exits the map: no return
      if (blocks(cell)) return t;
    }
  }

  size_t count(CellState s) const {
    size_t n = 0;
    for (CellState c : cells_)
      if (c == s) ++n;
    return n;
  }

  const std::vector<CellState>& cells() const { return cells_; }

 private:
  Point2D world_to_grid_frame(Point2D p) const {
    double c = std::cos(origin_.theta), s = std::sin(origin_.theta);
    double rx = p.x - origin_.x, ry = p.y - origin_.y;
    return {c * rx + s * ry, -s * rx + c * ry};
  }

  Point2D grid_frame_to_world(Point2D g) const {
    double c = std::cos(origin_.theta), s = std::sin(origin_.theta);
    return {origin_.x + c * g.x - s * g.y, origin_.y + s * g.x + c * g.y};
  }

  int width_;
  int height_;
  double resolution_;
  Pose2D origin_;
  std::vector<CellState> cells_;
};

/// One LiDAR revolution. Beam i points at angle_min + i * angle_increment
/// in the sensor frame; a reading equal to range_max means no return.
struct LidarScan {
  double angle_min = -kPi;
  double angle_increment = kPi / 180.0;
  double range_max = 8.0;
  std::vector<double> ranges;

  double beam_angle(size_t i) const { return angle_min + static_cast<double>(i) * angle_increment; }
  bool is_return(size_t i) const { return ranges[i] < range_max; }
};

}  // namespace gridnav
