#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracdrift {

// Hurst index of fractional Brownian motion. Valid range for path
// generation is (0,1); estimation pipelines additionally need H > 1/2
// (long memory), exposed as a second validity level.
class HurstIndex {
 public:
  explicit HurstIndex(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0))
      throw std::domain_error("Hurst index must lie in (0,1), got " + std::to_string(value));
  }
  static HurstIndex long_memory(double value) {
    HurstIndex h(value);
    h.require_long_memory();
    return h;
  }
  double value() const { return value_; }
  bool is_long_memory() const { return value_ > 0.5; }
  void require_long_memory() const {
    if (!is_long_memory())
      throw std::domain_error("estimation requires Hurst index > 1/2, got " + std::to_string(value_));
  }

 private:
  double value_;
};

// Order of a fractional derivative, alpha in (0,1). When used to integrate
// against an fBm path the pairing additionally needs alpha > 1 - H.
class FractionalOrder {
 public:
  explicit FractionalOrder(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0))
      throw std::domain_error("fractional order must lie in (0,1), got " + std::to_string(value));
  }
  double value() const { return value_; }
  void require_compatible(HurstIndex h) const {
    if (!(value_ > 1.0 - h.value()))
      throw std::domain_error("fractional order must exceed 1-H = " + std::to_string(1.0 - h.value()));
  }

 private:
  double value_;
};

// Uniform grid t_k = k*T/n on [0,T], k = 0..n.
class TimeGrid {
 public:
  TimeGrid(double horizon, int steps) : horizon_(horizon), steps_(steps) {
    if (!(horizon > 0.0)) throw std::domain_error("grid horizon must be positive");
    if (steps < 2) throw std::domain_error("grid needs at least 2 steps");
  }
  double horizon() const { return horizon_; }
  int steps() const { return steps_; }
  int nodes() const { return steps_ + 1; }
  double dt() const { return horizon_ / steps_; }
  double node(int k) const { return horizon_ * static_cast<double>(k) / steps_; }
  bool operator==(const TimeGrid& o) const {
    return horizon_ == o.horizon_ && steps_ == o.steps_;
  }
  bool operator!=(const TimeGrid& o) const { return !(*this == o); }

  // Restriction to [0, node(k)]; the first k cells of this grid.
  TimeGrid prefix(int k) const {
    if (k < 2 || k > steps_) throw std::domain_error("prefix length out of range");
    return TimeGrid(node(k), k);
  }

 private:
  double horizon_;
  int steps_;
};

// Deterministic node data on a grid (coefficients, transforms, weights).
struct GridFunction {
  TimeGrid grid;
  Eigen::VectorXd values;  // one entry per node

  GridFunction(TimeGrid g, Eigen::VectorXd v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.nodes())
      throw std::invalid_argument("grid function length does not match grid");
  }
  static GridFunction zero(TimeGrid g) { return GridFunction(g, Eigen::VectorXd::Zero(g.nodes())); }
};

// A simulated process on a grid, with provenance (seed, generator tag).
struct SamplePath {
  TimeGrid grid;
  Eigen::VectorXd values;
  std::uint64_t seed = 0;
  std::string generator;

  SamplePath(TimeGrid g, Eigen::VectorXd v, std::uint64_t s = 0, std::string gen = {})
      : grid(g), values(std::move(v)), seed(s), generator(std::move(gen)) {
    if (values.size() != grid.nodes())
      throw std::invalid_argument("sample path length does not match grid");
  }
  GridFunction as_grid_function() const { return GridFunction(grid, values); }
};

}  // namespace fracdrift
