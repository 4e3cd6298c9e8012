#include "fsq/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fsq/errors.hpp"

namespace fsq {

namespace {

constexpr int kRescaleBits = 64;

void check_degree(int n) {
  if (n < 0 || n > kMaxHermiteDegree) {
    throw CapabilityError("Hermite degree " + std::to_string(n) +
                          " outside supported range [0, " +
                          std::to_string(kMaxHermiteDegree) + "]");
  }
}

ScaledReal make_scaled(double value, long exponent) {
  if (value == 0.0) return {};
  int e = 0;
  const double m = std::frexp(value, &e);  // |m| in [0.5, 1)
  return {2.0 * m, exponent + e - 1};
}

}  // namespace

double ScaledReal::log2_abs() const {
  if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

double ScaledReal::to_double() const {
  if (mantissa == 0.0) return 0.0;
  if (exponent > std::numeric_limits<double>::max_exponent - 1) {
    throw CapabilityError("value 2^" + std::to_string(exponent) +
                          " exceeds double precision range");
  }
  return std::ldexp(mantissa, static_cast<int>(std::max<long>(exponent, -2000)));
}

ScaledReal hermite_scaled(int n, double x) {
  check_degree(n);
  if (!std::isfinite(x)) throw DomainError("Hermite argument must be finite");
  if (n == 0) return {1.0, 0};

  // H_{k+1} = 2x H_k - 2k H_{k-1}; both carried values share `exponent`.
  double prev = 1.0;
  double cur = 2.0 * x;
  long exponent = 0;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
    const double big = std::max(std::fabs(prev), std::fabs(cur));
    if (big != 0.0) {
      int e = 0;
      std::frexp(big, &e);
      if (e > kRescaleBits || e < -kRescaleBits) {
        prev = std::ldexp(prev, -e);
        cur = std::ldexp(cur, -e);
        exponent += e;
      }
    }
  }
  return make_scaled(cur, exponent);
}

double hermite_eval(int n, double x) { return hermite_scaled(n, x).to_double(); }

double hermite_gauss(int n, double x) {
  const ScaledReal h = hermite_scaled(n, x);
  if (h.mantissa == 0.0) return 0.0;
  // log2 of exp(-x^2/2)
  const double total = static_cast<double>(h.exponent) - 0.5 * x * x / std::numbers::ln2;
  const double whole = std::floor(total);
  if (whole > std::numeric_limits<double>::max_exponent - 2) {
    throw CapabilityError("Hermite-Gaussian value overflows at degree " +
                          std::to_string(n));
  }
  if (whole < -1100.0) return 0.0;
  return std::ldexp(h.mantissa * std::exp2(total - whole), static_cast<int>(whole));
}

double theta3_eval(double z, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("theta3 requires t > 0 (series diverges otherwise)");
  }
  if (!std::isfinite(z)) throw DomainError("theta3 argument must be finite");

  // Tail after a: 2 sum_{b>a} q^{b^2} <= 2 q^{(a+1)^2} / (1 - q^{2a+3}), q = e^{-pi t}.
  constexpr double kTail = 1e-15;
  const double needed = std::sqrt(std::log(2.0 / kTail) / (std::numbers::pi * t));
  if (needed > 1e7) {
    throw CapabilityError("theta3 series with t = " + std::to_string(t) +
                          " needs too many terms");
  }
  const double frac = z - std::floor(z);
  double sum = 1.0;
  for (long a = 1;; ++a) {
    const double weight = std::exp(-std::numbers::pi * t * static_cast<double>(a * a));
    sum += 2.0 * weight * std::cos(2.0 * std::numbers::pi * static_cast<double>(a) * frac);
    const double next = std::exp(-std::numbers::pi * t * static_cast<double>((a + 1) * (a + 1)));
    const double ratio = std::exp(-std::numbers::pi * t * static_cast<double>(2 * a + 3));
    if (2.0 * next / (1.0 - ratio) <= kTail) break;
  }
  return sum;
}

}  // namespace fsq
