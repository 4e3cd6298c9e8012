#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace fsq {

using Complex = std::complex<double>;

/// Label set of an N-dimensional discrete system.
///
/// Odd N uses the symmetric labels j = -l, ..., l with l = (N-1)/2. Even N
/// uses j = -N/2, ..., N/2 - 1; zero-mean and parity guarantees of the
/// oscillator states only hold for odd N. Storage index i maps to label
/// j = i + min_label().
///
/// An optional eigenvalue map o(j) attaches a physical value to each label;
/// by default o(j) = j.
class LatticeGrid {
 public:
  static constexpr int kMinOdd = 3;
  static constexpr int kMaxOdd = 201;
  static constexpr int kMinEven = 4;
  static constexpr int kMaxEven = 200;

  explicit LatticeGrid(int dimension);
  LatticeGrid(int dimension, std::vector<double> eigenvalues);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(dimension_); }
  bool is_odd() const noexcept { return dimension_ % 2 != 0; }
  int min_label() const noexcept { return min_label_; }
  int max_label() const noexcept { return min_label_ + dimension_ - 1; }
  // (N-1)/2 for odd N, N/2 for even N.
  int half_width() const noexcept { return -min_label_; }

  int label(std::size_t index) const noexcept {
    return static_cast<int>(index) + min_label_;
  }
  // Index of the label congruent to j modulo N.
  std::size_t index_of(int j) const noexcept {
    return static_cast<std::size_t>(reduce(j) - min_label_);
  }
  // Representative of j modulo N inside the label range.
  int reduce(int j) const noexcept;

  double eigenvalue(std::size_t index) const noexcept;
  bool has_custom_eigenvalues() const noexcept { return eigenvalues_.has_value(); }

  friend bool operator==(const LatticeGrid& a, const LatticeGrid& b) {
    return a.dimension_ == b.dimension_ && a.eigenvalues_ == b.eigenvalues_;
  }

 private:
  int dimension_;
  int min_label_;
  std::optional<std::vector<double>> eigenvalues_;
};

/// Dimensionless width parameter xi > 0.
class SqueezeParam {
 public:
  explicit SqueezeParam(double xi);

  double value() const noexcept { return xi_; }
  SqueezeParam inverse() const { return SqueezeParam(1.0 / xi_); }

  friend bool operator==(const SqueezeParam&, const SqueezeParam&) = default;

 private:
  double xi_;
};

// sqrt(2 pi / N)
double grid_epsilon(const LatticeGrid& grid) noexcept;

enum class Representation { kU, kV };

/// Amplitudes over a grid, tagged with the basis they refer to.
class StateVector {
 public:
  StateVector(LatticeGrid grid, Eigen::VectorXcd amplitudes,
              Representation rep = Representation::kU);

  // Rescales the amplitudes to unit Euclidean norm.
  static StateVector normalized(LatticeGrid grid, Eigen::VectorXcd amplitudes,
                                Representation rep = Representation::kU);

  const LatticeGrid& grid() const noexcept { return grid_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Representation representation() const noexcept { return rep_; }
  std::size_t size() const noexcept { return grid_.size(); }

  Complex amplitude_at(int label) const { return amplitudes_(grid_.index_of(label)); }
  double norm() const { return amplitudes_.norm(); }

 private:
  LatticeGrid grid_;
  Eigen::VectorXcd amplitudes_;
  Representation rep_;
};

}  // namespace fsq
