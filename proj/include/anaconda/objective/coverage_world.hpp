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

#pragma once

#include <vector>

namespace anaconda::objective {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double distance(Point a, Point b);

// Axis-aligned region [x0, x1] x [y0, y1].
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  bool contains(Point p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
};

// A camera with a circular-sector field of view. Each entry of
// `directions` is one action (heading, radians in [0, 2pi)).
struct CameraSpec {
  Point position;
  double fov_radius = 1.0;
  double aov = 0.0;  // full angle of view, radians
  std::vector<double> directions;
  double comm_range = 0.0;
};

// `count` headings k * 2pi / count, k = 0..count-1.
std::vector<double> evenly_spaced_directions(int count);

// Rasterized 2D map. Cells are cell_size squares indexed row-major from the
// origin corner: index = row * cols + col, center ((col + .5) s, (row + .5) s).
class CoverageWorld {
 public:
  CoverageWorld(double width, double height, double cell_size,
                std::vector<bool> interest_mask,
                std::vector<CameraSpec> cameras);

  // Every cell whose center lies on the map is of interest.
  static CoverageWorld open_map(double width, double height,
                                std::vector<CameraSpec> cameras,
                                double cell_size = 1.0);
  // Cells whose centers lie in at least one region are of interest.
  static CoverageWorld with_regions(double width, double height,
                                    const std::vector<Rect>& regions,
                                    std::vector<CameraSpec> cameras,
                                    double cell_size = 1.0);

  double width() const { return width_; }
  double height() const { return height_; }
  double cell_size() const { return cell_size_; }
  int cols() const { return cols_; }
  int rows() const { return rows_; }
  int cell_count() const { return cols_ * rows_; }

  Point cell_center(int cell) const;
  bool is_interest(int cell) const { return interest_[cell]; }
  int interest_count() const { return interest_count_; }
  double interest_area() const {
    return interest_count_ * cell_size_ * cell_size_;
  }

  const std::vector<CameraSpec>& cameras() const { return cameras_; }
  std::vector<Point> camera_positions() const;

 private:
  double width_;
  double height_;
  double cell_size_;
  int cols_;
  int rows_;
  std::vector<bool> interest_;
  int interest_count_ = 0;
  std::vector<CameraSpec> cameras_;
};

// True iff p lies within the camera's FOV radius and within aov/2 of
// `heading` (both boundaries inclusive). The camera's own position counts.
bool sector_contains(const CameraSpec& camera, double heading, Point p);

// Sorted grid indices of the interest cells whose centers lie in the
// sector of camera `camera_index` facing direction `direction_index`.
std::vector<int> coverage_cells(const CoverageWorld& world, int camera_index,
                                int direction_index);

}  // namespace anaconda::objective
