#pragma once

// Straightforward reference computations used to cross-check the library.
// They favour clarity over speed and share no code with fsq::core.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline int min_label(int n) { return n % 2 != 0 ? -(n - 1) / 2 : -n / 2; }

// Direct lattice sum with the standard-library Hermite polynomial.
inline double lattice_fn(int n, int j, double xi, int N, int terms = 40) {
  const double eps = std::sqrt(2.0 * std::numbers::pi / N);
  double sum = 0.0;
  for (int a = -terms; a <= terms; ++a) {
    const double x = a * N + j;
    sum += std::exp(-std::numbers::pi * x * x / (N * xi * xi)) *
           std::hermite(static_cast<unsigned>(n), eps / xi * x);
  }
  return sum / std::sqrt(xi);
}

inline std::vector<double> lattice_vector(int n, double xi, int N) {
  std::vector<double> v(N);
  for (int i = 0; i < N; ++i) v[i] = lattice_fn(n, i + min_label(N), xi, N);
  return v;
}

// sum_{|a| <= terms} exp(-pi t a^2) cos(2 pi a z)
inline double theta3_partial(double z, double t, int terms) {
  double s = 0.0;
  for (int a = -terms; a <= terms; ++a) {
    s += std::exp(-std::numbers::pi * t * a * a) * std::cos(2.0 * std::numbers::pi * a * z);
  }
  return s;
}

// Poisson-dual form t^{-1/2} sum_a exp(-pi (z + a)^2 / t).
inline double theta3_dual(double z, double t, int terms) {
  double s = 0.0;
  for (int a = -terms; a <= terms; ++a) s += std::exp(-std::numbers::pi * (z + a) * (z + a) / t);
  return s / std::sqrt(t);
}

// out(k) = N^{-1/2} sum_j exp(+2 pi i j k / N) in(j) over labels.
inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in) {
  const int N = static_cast<int>(in.size());
  const int lo = min_label(N);
  std::vector<std::complex<double>> out(N);
  for (int k = 0; k < N; ++k) {
    std::complex<double> s = 0.0;
    for (int j = 0; j < N; ++j) {
      const double phase = 2.0 * std::numbers::pi * double(j + lo) * double(k + lo) / N;
      s += std::polar(1.0, phase) * in[j];
    }
    out[k] = s / std::sqrt(double(N));
  }
  return out;
}

// Column-normalized basis matrix built from the direct lattice sum.
inline Eigen::MatrixXd basis(int N, double xi) {
  Eigen::MatrixXd b(N, N);
  for (int n = 0; n < N; ++n) {
    const int idx = (N % 2 == 0 && n == N - 1) ? N + 3 : n;
    const auto v = lattice_vector(idx, xi, N);
    for (int i = 0; i < N; ++i) b(i, n) = v[i];
    b.col(n).normalize();
  }
  return b;
}

// Exhaustive N_l scan with explicit loops over squared overlaps.
inline int low_block(const Eigen::MatrixXd& unit, const Eigen::MatrixXd& target, double cross,
                     double drift) {
  const int N = static_cast<int>(unit.cols());
  for (int nl = N; nl >= 1; --nl) {
    bool ok = true;
    for (int n = 0; n < nl && ok; ++n) {
      for (int m = nl; m < N && ok; ++m) {
        const double o = target.col(m).dot(target.col(n));
        if (o * o >= cross) ok = false;
      }
    }
    for (int n = 0; n < nl && ok; ++n) {
      for (int m = 0; m < nl && ok; ++m) {
        const double a = unit.col(m).dot(unit.col(n));
        const double b = target.col(m).dot(target.col(n));
        if (std::abs(a * a - b * b) >= drift) ok = false;
      }
    }
    if (ok) return nl;
  }
  return 0;
}

}  // namespace oracle
