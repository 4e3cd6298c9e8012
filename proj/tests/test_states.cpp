#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fsq/errors.hpp"
#include "fsq/special.hpp"
#include "fsq/states.hpp"
#include "oracles.hpp"

namespace {

using fsq::Complex;

double sup(const Eigen::VectorXcd& v) { return v.cwiseAbs().maxCoeff(); }

TEST(LatticeFunction, MatchesDirectSum) {
  for (int N : {5, 13, 21}) {
    const fsq::LatticeGrid g(N);
    for (double xi : {0.8, 1.0, 1.25}) {
      for (int n = 0; n < std::min(N, 16); ++n) {
        const Eigen::VectorXd f = fsq::lattice_function(n, fsq::SqueezeParam(xi), g);
        const auto ref = oracle::lattice_vector(n, xi, N);
        const double scale = f.cwiseAbs().maxCoeff();
        for (int i = 0; i < N; ++i) {
          EXPECT_NEAR(f(i), ref[i], 1e-11 * scale) << N << " " << xi << " " << n << " " << i;
        }
      }
    }
  }
}

TEST(LatticeFunction, GroundStateIsTheta) {
  // f_0(j; xi) = sqrt(xi / N) theta3(j / N, xi^2 / N)
  const int N = 11;
  const fsq::LatticeGrid g(N);
  for (double xi : {0.7, 1.0, 1.6}) {
    for (int j = -5; j <= 5; ++j) {
      const double ref = std::sqrt(xi / N) * fsq::theta3_eval(double(j) / N, xi * xi / N);
      EXPECT_NEAR(fsq::fn_eval(0, j, fsq::SqueezeParam(xi), g), ref, 1e-14);
    }
  }
}

TEST(LatticeFunction, PeriodicBitExact) {
  const fsq::LatticeGrid g(13);
  for (int n : {0, 3, 8}) {
    for (int j = -6; j <= 6; ++j) {
      EXPECT_EQ(fsq::fn_eval(n, j, fsq::SqueezeParam(0.9), g),
                fsq::fn_eval(n, j + 13 * 4, fsq::SqueezeParam(0.9), g));
    }
  }
}

// DFT[f_n(.; xi)] = i^n f_n(.; 1/xi), computed with a naive transform.
TEST(LatticeFunction, DftEigenRelation) {
  for (int N : {5, 13, 21}) {
    const fsq::LatticeGrid g(N);
    for (double xi : {0.8, 1.0, 1.25}) {
      for (int n = 0; n < N; ++n) {
        const Eigen::VectorXd f = fsq::lattice_function(n, fsq::SqueezeParam(xi), g);
        const Eigen::VectorXd h = fsq::lattice_function(n, fsq::SqueezeParam(1.0 / xi), g);
        std::vector<Complex> in(f.data(), f.data() + N);
        const auto out = oracle::dft(in);
        const Complex phase = std::pow(Complex(0, 1), n);
        double res = 0.0;
        for (int k = 0; k < N; ++k) res = std::max(res, std::abs(out[k] - phase * h(k)));
        EXPECT_LT(res / h.cwiseAbs().maxCoeff(), 1e-10) << N << " " << xi << " " << n;

        const fsq::StateVector s(g, f.cast<Complex>());
        const auto t = fsq::dft_apply(s);
        EXPECT_EQ(t.representation(), fsq::Representation::kV);
        EXPECT_LT(sup(t.amplitudes() - phase * h.cast<Complex>()) / h.cwiseAbs().maxCoeff(), 1e-10);
      }
    }
  }
}

TEST(LatticeFunction, DftRelationAtLargestGrid) {
  const fsq::LatticeGrid g(201);
  const int n = 200;
  const Eigen::VectorXd f = fsq::lattice_function(n, fsq::SqueezeParam(1.0), g);
  const auto t = fsq::dft_apply(fsq::StateVector(g, f.cast<Complex>()));
  EXPECT_LT(sup(t.amplitudes() - f.cast<Complex>()) / f.cwiseAbs().maxCoeff(), 1e-10);
}

TEST(LatticeFunction, ZeroMeanAndParity) {
  for (int N : {5, 13, 21}) {
    const fsq::LatticeGrid g(N);
    for (double xi : {0.8, 1.0, 1.25}) {
      for (int n = 0; n < N; ++n) {
        const Eigen::VectorXd f = fsq::lattice_function(n, fsq::SqueezeParam(xi), g);
        double first = 0.0, total = 0.0, parity = 0.0;
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        for (int i = 0; i < N; ++i) {
          first += g.label(i) * f(i) * f(i);
          total += f(i) * f(i);
          parity = std::max(parity, std::abs(f(i) - sign * f(N - 1 - i)));
        }
        EXPECT_LT(std::abs(first) / total, 1e-12);
        EXPECT_LT(parity / f.cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(OscillatorState, NormalizedAndEvenSubstitution) {
  const fsq::LatticeGrid odd(13), even(12);
  EXPECT_NEAR(fsq::oscillator_state(4, fsq::SqueezeParam(0.9), odd).norm(), 1.0, 1e-14);
  EXPECT_EQ(fsq::function_index(11, even), 15);
  EXPECT_EQ(fsq::function_index(10, even), 10);
  EXPECT_EQ(fsq::function_index(12, odd), 12);
  EXPECT_THROW(fsq::oscillator_state(13, fsq::SqueezeParam(1.0), odd), fsq::DomainError);
  EXPECT_THROW(fsq::fn_eval(-1, 0, fsq::SqueezeParam(1.0), odd), fsq::DomainError);
}

TEST(Dft, UnitaryAndFourthPowerIdentity) {
  const fsq::LatticeGrid g(9);
  const Eigen::MatrixXcd F = fsq::dft_matrix(g);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(9, 9);
  EXPECT_LT((F * F.adjoint() - I).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((F * F * F * F - I).cwiseAbs().maxCoeff(), 1e-13);
}

}  // namespace
