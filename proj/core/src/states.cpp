#include "fsq/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fsq/errors.hpp"
#include "fsq/special.hpp"

namespace fsq {

namespace {

constexpr double kRelativeTail = 1e-15;
constexpr int kQuietTermsToStop = 3;
constexpr double kDegenerateAmplitude = 1e-300;

}  // namespace

double fn_eval(int n, int j, const SqueezeParam& xi, const LatticeGrid& grid) {
  if (n < 0) throw DomainError("function index must be non-negative");
  const int big_n = grid.dimension();
  const int jr = grid.reduce(j);
  const double scale = grid_epsilon(grid) / xi.value();
  const double turning = std::sqrt(2.0 * n + 1.0);

  auto term = [&](long a) {
    return hermite_gauss(n, scale * static_cast<double>(a * big_n + jr));
  };

  double sum = term(0);
  double largest = std::fabs(sum);
  int quiet = 0;
  for (long a = 1;; ++a) {
    const double up = term(a);
    const double down = term(-a);
    sum += up + down;
    const double mag = std::max(std::fabs(up), std::fabs(down));
    largest = std::max(largest, mag);
    const double y_min =
        scale * static_cast<double>(std::min(std::labs(a * big_n + jr), std::labs(-a * big_n + jr)));
    if (y_min > turning && mag <= kRelativeTail * largest) {
      if (++quiet >= kQuietTermsToStop) break;
    } else {
      quiet = 0;
    }
  }
  const double value = sum / std::sqrt(xi.value());
  if (!std::isfinite(value)) {
    throw CapabilityError("f_" + std::to_string(n) + " overflows double precision");
  }
  return value;
}

Eigen::VectorXd lattice_function(int n, const SqueezeParam& xi, const LatticeGrid& grid) {
  Eigen::VectorXd out(grid.dimension());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = fn_eval(n, grid.label(i), xi, grid);
  }
  return out;
}

int function_index(int n, const LatticeGrid& grid) {
  const int big_n = grid.dimension();
  if (n < 0 || n >= big_n) {
    throw DomainError("state index " + std::to_string(n) + " outside [0, " +
                      std::to_string(big_n - 1) + "]");
  }
  if (!grid.is_odd() && n == big_n - 1) return big_n + 3;
  return n;
}

StateVector oscillator_state(int n, const SqueezeParam& xi, const LatticeGrid& grid) {
  const Eigen::VectorXd f = lattice_function(function_index(n, grid), xi, grid);
  if (f.cwiseAbs().maxCoeff() < kDegenerateAmplitude) {
    throw DegenerateStateError("f_" + std::to_string(n) + " vanishes on the N = " +
                               std::to_string(grid.dimension()) + " grid");
  }
  return StateVector::normalized(grid, f.cast<Complex>());
}

Eigen::MatrixXcd dft_matrix(const LatticeGrid& grid) {
  const int big_n = grid.dimension();
  const auto size = static_cast<Eigen::Index>(big_n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(big_n));
  Eigen::MatrixXcd m(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    const long k = grid.label(static_cast<std::size_t>(r));
    for (Eigen::Index c = 0; c < size; ++c) {
      const long j = grid.label(static_cast<std::size_t>(c));
      // Reduce jk mod N so the phase argument stays in [0, 2 pi).
      long p = (j * k) % big_n;
      if (p < 0) p += big_n;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / big_n;
      m(r, c) = std::polar(norm, angle);
    }
  }
  return m;
}

StateVector dft_apply(const StateVector& state) {
  const Representation next = state.representation() == Representation::kU
                                  ? Representation::kV
                                  : Representation::kU;
  return StateVector(state.grid(), dft_matrix(state.grid()) * state.amplitudes(), next);
}

}  // namespace fsq
