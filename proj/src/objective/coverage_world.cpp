// Copyright 2026 The Authors.
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

#include "anaconda/objective/coverage_world.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "anaconda/errors.hpp"

namespace anaconda::objective {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Absorbs rounding in heading arithmetic so boundary cells stay inclusive.
constexpr double kAngleSlack = 1e-9;

int cells_along(double extent, double cell_size) {
  return static_cast<int>(std::ceil(extent / cell_size - 1e-12));
}

void validate_camera(const CameraSpec& cam, int index) {
  const std::string where = "camera " + std::to_string(index) + ": ";
  if (!(cam.fov_radius > 0.0)) throw InvalidArgument(where + "fov_radius <= 0");
  if (!(cam.aov > 0.0) || cam.aov > kTwoPi + 1e-12) {
    throw InvalidArgument(where + "aov outside (0, 2pi]");
  }
  if (cam.directions.empty()) throw InvalidArgument(where + "no directions");
  for (std::size_t a = 0; a < cam.directions.size(); ++a) {
    double d = cam.directions[a];
    if (!(d >= 0.0 && d < kTwoPi)) {
      throw InvalidArgument(where + "direction outside [0, 2pi)");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (cam.directions[b] == d) {
        throw InvalidArgument(where + "duplicate direction");
      }
    }
  }
  if (cam.comm_range < 0.0) throw InvalidArgument(where + "comm_range < 0");
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<double> evenly_spaced_directions(int count) {
  if (count < 1) throw InvalidArgument("direction count must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[k] = kTwoPi * k / count;
  return out;
}

CoverageWorld::CoverageWorld(double width, double height, double cell_size,
                             std::vector<bool> interest_mask,
                             std::vector<CameraSpec> cameras)
    : width_(width),
      height_(height),
      cell_size_(cell_size),
      cols_(0),
      rows_(0),
      interest_(std::move(interest_mask)),
      cameras_(std::move(cameras)) {
  if (!(width > 0.0) || !(height > 0.0) || !(cell_size > 0.0)) {
    throw InvalidArgument("width, height and cell_size must be positive");
  }
  cols_ = cells_along(width, cell_size);
  rows_ = cells_along(height, cell_size);
  if (interest_.size() != static_cast<std::size_t>(cols_) * rows_) {
    throw InvalidArgument("interest mask has " +
                          std::to_string(interest_.size()) + " cells, expected " +
                          std::to_string(cols_ * rows_));
  }
  for (bool b : interest_) interest_count_ += b ? 1 : 0;
  if (interest_count_ == 0) throw InvalidArgument("no cell is of interest");
  for (std::size_t i = 0; i < cameras_.size(); ++i) {
    validate_camera(cameras_[i], static_cast<int>(i));
  }
}

CoverageWorld CoverageWorld::open_map(double width, double height,
                                      std::vector<CameraSpec> cameras,
                                      double cell_size) {
  return with_regions(width, height, {Rect{0.0, 0.0, width, height}},
                      std::move(cameras), cell_size);
}

CoverageWorld CoverageWorld::with_regions(double width, double height,
                                          const std::vector<Rect>& regions,
                                          std::vector<CameraSpec> cameras,
                                          double cell_size) {
  if (!(cell_size > 0.0) || !(width > 0.0) || !(height > 0.0)) {
    throw InvalidArgument("width, height and cell_size must be positive");
  }
  const int cols = cells_along(width, cell_size);
  const int rows = cells_along(height, cell_size);
  std::vector<bool> mask(static_cast<std::size_t>(cols) * rows, false);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Point center{(c + 0.5) * cell_size, (r + 0.5) * cell_size};
      for (const Rect& region : regions) {
        if (region.contains(center)) {
          mask[static_cast<std::size_t>(r) * cols + c] = true;
          break;
        }
      }
    }
  }
  return CoverageWorld(width, height, cell_size, std::move(mask),
                       std::move(cameras));
}

Point CoverageWorld::cell_center(int cell) const {
  const int r = cell / cols_;
  const int c = cell % cols_;
  return Point{(c + 0.5) * cell_size_, (r + 0.5) * cell_size_};
}

std::vector<Point> CoverageWorld::camera_positions() const {
  std::vector<Point> out;
  out.reserve(cameras_.size());
  for (const CameraSpec& cam : cameras_) out.push_back(cam.position);
  return out;
}

bool sector_contains(const CameraSpec& camera, double heading, Point p) {
  const double dx = p.x - camera.position.x;
  const double dy = p.y - camera.position.y;
  const double r = camera.fov_radius;
  if (dx * dx + dy * dy > r * r + 1e-9) return false;
  if (dx == 0.0 && dy == 0.0) return true;
  if (camera.aov >= kTwoPi - kAngleSlack) return true;
  const double bearing = std::atan2(dy, dx);
  const double diff = std::abs(std::remainder(bearing - heading, kTwoPi));
  return diff <= camera.aov / 2.0 + kAngleSlack;
}

std::vector<int> coverage_cells(const CoverageWorld& world, int camera_index,
                                int direction_index) {
  const auto& cams = world.cameras();
  if (camera_index < 0 || camera_index >= static_cast<int>(cams.size())) {
    throw InvalidArgument("camera index " + std::to_string(camera_index) +
                          " out of range");
  }
  const CameraSpec& cam = cams[camera_index];
  if (direction_index < 0 ||
      direction_index >= static_cast<int>(cam.directions.size())) {
    throw InvalidArgument("direction index " +
                          std::to_string(direction_index) + " out of range");
  }
  const double heading = cam.directions[direction_index];
  // Only cells inside the FOV disc's bounding box can qualify.
  const double s = world.cell_size();
  const double r = cam.fov_radius;
  const int c0 = std::max(0, static_cast<int>(std::floor((cam.position.x - r) / s)) - 1);
  const int c1 = std::min(world.cols() - 1,
                          static_cast<int>(std::ceil((cam.position.x + r) / s)) + 1);
  const int r0 = std::max(0, static_cast<int>(std::floor((cam.position.y - r) / s)) - 1);
  const int r1 = std::min(world.rows() - 1,
                          static_cast<int>(std::ceil((cam.position.y + r) / s)) + 1);
  std::vector<int> out;
  for (int row = r0; row <= r1; ++row) {
    for (int col = c0; col <= c1; ++col) {
      const int cell = row * world.cols() + col;
      if (!world.is_interest(cell)) continue;
      if (sector_contains(cam, heading, world.cell_center(cell))) {
        out.push_back(cell);
      }
    }
  }
  return out;
}

}  // namespace anaconda::objective
