#pragma once

namespace fsq {

// Highest Hermite degree the scaled recurrence is certified for.
inline constexpr int kMaxHermiteDegree = 512;

/// A real number held as mantissa * 2^exponent, mantissa in [1, 2) (or 0).
///
/// Used to carry Hermite polynomial values whose magnitude exceeds the
/// double range before they are multiplied by a Gaussian weight.
struct ScaledReal {
  double mantissa = 0.0;
  long exponent = 0;

  // log2 |value|; -infinity for zero.
  double log2_abs() const;
  // Throws CapabilityError if the value does not fit in a double.
  double to_double() const;
};

// Physicists' Hermite polynomial H_n(x), evaluated by the three-term
// recurrence with periodic rescaling. n in [0, kMaxHermiteDegree].
ScaledReal hermite_scaled(int n, double x);

// H_n(x) as a double; CapabilityError when n is out of range or the value
// overflows.
double hermite_eval(int n, double x);

// H_n(x) * exp(-x^2 / 2) combined in the log domain, so large degrees and
// arguments neither overflow nor underflow prematurely.
double hermite_gauss(int n, double x);

/// Jacobi theta_3(z, i t) = sum_a exp(-pi t a^2) exp(2 pi i a z) for real z
/// and t > 0. The result is real; the neglected tail is below 1e-15.
double theta3_eval(double z, double t);

}  // namespace fsq
