#pragma once

// Discrete spatiotemporal grid, sparse vehicle trajectories, and the
// occupancy/density algebra shared by the rest of the library.
//
// Conventions: cell coordinates are 1-based, x in [1..M], y in [1..N],
// time slots t in [1..T].  A trajectory occupies at most one spatial cell
// per time slot over a contiguous slot range, and moves by at most one
// 4-neighbor step per slot.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quids/errors.hpp"

namespace quids {

struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellIndex {
  int x = 0;
  int y = 0;
  int t = 0;
  Cell spatial() const { return {x, y}; }
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

class GridSpec {
 public:
  GridSpec(int width, int height, int horizon, double slot_minutes,
           std::set<Cell> excluded = {});

  int width() const { return width_; }
  int height() const { return height_; }
  int horizon() const { return horizon_; }
  double slot_minutes() const { return slot_minutes_; }
  const std::set<Cell>& excluded_cells() const { return excluded_; }

  bool contains(int x, int y) const {
    return x >= 1 && x <= width_ && y >= 1 && y <= height_;
  }
  bool is_excluded(int x, int y) const { return excluded_.count({x, y}) > 0; }
  // In bounds (including t) and not excluded.
  bool valid_cell(const CellIndex& c) const {
    return contains(c.x, c.y) && c.t >= 1 && c.t <= horizon_ && !is_excluded(c.x, c.y);
  }

  std::size_t cell_count() const {
    return static_cast<std::size_t>(width_) * height_ * horizon_;
  }
  std::size_t usable_spatial_count() const {
    return static_cast<std::size_t>(width_) * height_ - excluded_.size();
  }

  // 0-based linear index over the full M*N*T box.
  std::int64_t linear_index(int x, int y, int t) const {
    return (static_cast<std::int64_t>(t - 1) * height_ + (y - 1)) * width_ + (x - 1);
  }
  std::int64_t linear_index(const CellIndex& c) const { return linear_index(c.x, c.y, c.t); }
  CellIndex from_linear(std::int64_t idx) const;

  bool same_shape(const GridSpec& other) const {
    return width_ == other.width_ && height_ == other.height_ && horizon_ == other.horizon_;
  }

 private:
  int width_, height_, horizon_;
  double slot_minutes_;
  std::set<Cell> excluded_;
};

// Sparse occupancy of one vehicle: candidate index 0 is the original
// (no-dispatch) trace.  Cells are kept sorted by slot; validity against a
// grid is checked by validate_trajectory, not the constructor, so that
// ingested data can be inspected before rejection.
class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(int vehicle, int candidate, std::vector<CellIndex> occupied);

  int vehicle() const { return vehicle_; }
  int candidate() const { return candidate_; }
  const std::vector<CellIndex>& occupied() const { return occupied_; }
  std::size_t size() const { return occupied_.size(); }
  bool empty() const { return occupied_.empty(); }

  int start_slot() const { return occupied_.empty() ? 0 : occupied_.front().t; }
  int end_slot() const { return occupied_.empty() ? 0 : occupied_.back().t; }

  // Spatial cell at slot t, if occupied.
  std::optional<Cell> at(int t) const;

 private:
  int vehicle_ = 0;
  int candidate_ = 0;
  std::vector<CellIndex> occupied_;
};

struct Violation {
  enum class Kind { OutOfBounds, ExcludedCell, DuplicateSlot, Teleport, NonContiguous };
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

const char* violation_kind_name(Violation::Kind kind);

ValidationReport validate_trajectory(const Trajectory& traj, const GridSpec& grid);

// Dense per-(x,y,t) scalar field over a grid's M*N*T box.
class Field3 {
 public:
  Field3() = default;
  Field3(int width, int height, int horizon, double fill = 0.0);
  explicit Field3(const GridSpec& grid, double fill = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }
  int horizon() const { return horizon_; }

  double at(int x, int y, int t) const { return values_[index(x, y, t)]; }
  double& at(int x, int y, int t) { return values_[index(x, y, t)]; }
  double at(const CellIndex& c) const { return at(c.x, c.y, c.t); }
  double& at(const CellIndex& c) { return at(c.x, c.y, c.t); }

  double sum() const;
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  bool same_shape(const Field3& other) const {
    return width_ == other.width_ && height_ == other.height_ && horizon_ == other.horizon_;
  }

 private:
  std::size_t index(int x, int y, int t) const;

  int width_ = 0, height_ = 0, horizon_ = 0;
  std::vector<double> values_;
};

using DensityField = Field3;
using DemandField = Field3;
using GroundTruthField = Field3;

struct WeightedTrajectory {
  Trajectory trajectory;
  double weight = 1.0;
};

// Number of slots where a and b occupy the same spatial cell.
int overlap_count(const Trajectory& a, const Trajectory& b);
// Same, but first checks both trajectories lie on `grid`.
int overlap_count(const Trajectory& a, const Trajectory& b, const GridSpec& grid);

// P(x,y,t) = sum_c w_c * [c occupies (x,y,t)] / (C*T).
DensityField density(const std::vector<WeightedTrajectory>& trajectories, const GridSpec& grid,
                     int vehicle_count, int horizon_slots);

}  // namespace quids
