#include <gtest/gtest.h>

#include "fsq/basis.hpp"
#include "fsq/certifier.hpp"
#include "fsq/errors.hpp"
#include "fsq/squeezers.hpp"

namespace {

using Mat = Eigen::MatrixXcd;

struct Frames {
  fsq::OscillatorBasis unit;
  fsq::OscillatorBasis target;
  fsq::DualBasis unit_dual;
  fsq::DualBasis target_dual;
};

Frames frames(int n, double xi) {
  const fsq::LatticeGrid g(n);
  auto u = fsq::build_basis(g, fsq::SqueezeParam(1.0));
  auto t = fsq::build_basis(g, fsq::SqueezeParam(xi));
  auto ud = fsq::dual(u);
  auto td = fsq::dual(t);
  return {u, t, ud, td};
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

class Oblique : public ::testing::TestWithParam<double> {};

TEST_P(Oblique, InverseAndBasisMapping) {
  const Frames f = frames(13, GetParam());
  const auto [xi_op, inv] = fsq::squeezer_oblique(f.unit, f.target, f.unit_dual, f.target_dual);
  EXPECT_EQ(xi_op.provenance(), fsq::Provenance::kOblique);
  EXPECT_EQ(inv.provenance(), fsq::Provenance::kObliqueInverse);
  const Mat I = Mat::Identity(13, 13);
  EXPECT_LT(max_abs(xi_op.matrix() * inv.matrix() - I), 1e-8);
  EXPECT_LT(max_abs(inv.matrix() * xi_op.matrix() - I), 1e-8);
  const Mat mapped = xi_op.matrix() * f.unit.amplitudes().cast<fsq::Complex>();
  EXPECT_LT(max_abs(mapped - f.target.amplitudes().cast<fsq::Complex>()), 1e-8);
  const Mat back = inv.matrix() * f.target.amplitudes().cast<fsq::Complex>();
  EXPECT_LT(max_abs(back - f.unit.amplitudes().cast<fsq::Complex>()), 1e-8);
  // Not unitary: the adjoint is not the inverse.
  EXPECT_GT(max_abs(xi_op.matrix().adjoint() - inv.matrix()), 1e-3);
}

INSTANTIATE_TEST_SUITE_P(Widths, Oblique, ::testing::Values(0.9, 1.1));

TEST(Provisional, IsTargetTimesSourceTranspose) {
  const Frames f = frames(13, 0.9);
  const auto p = fsq::squeezer_provisional(f.unit, f.target);
  const Eigen::MatrixXd ref = f.target.amplitudes() * f.unit.amplitudes().transpose();
  EXPECT_LT(max_abs(p.matrix() - ref.cast<fsq::Complex>()), 1e-15);
  EXPECT_EQ(p.provenance(), fsq::Provenance::kProvisional);
}

TEST(Unitary, MapsLowBlockFixesHighBlock) {
  const Frames f = frames(13, 0.95);
  const int low = 2;
  const auto u = fsq::squeezer_unitary(f.unit, f.target, f.unit_dual, low);
  const Mat B = f.unit.amplitudes().cast<fsq::Complex>();
  const Mat T = f.target.amplitudes().cast<fsq::Complex>();
  const Mat image = u.matrix() * B;
  for (int n = 0; n < 13; ++n) {
    const Eigen::VectorXcd expected = n < low ? T.col(n) : B.col(n);
    EXPECT_LT((image.col(n) - expected).cwiseAbs().maxCoeff(), 1e-9) << n;
  }
  EXPECT_THROW(fsq::squeezer_unitary(f.unit, f.target, f.unit_dual, 0), fsq::DomainError);
  EXPECT_THROW(fsq::squeezer_unitary(f.unit, f.target, f.unit_dual, 14), fsq::DomainError);
}

TEST(Unitary, FullBlockAtUnitWidthIsIdentity) {
  const Frames f = frames(9, 1.0);
  const auto u = fsq::squeezer_unitary(f.unit, f.unit, f.unit_dual, 9);
  EXPECT_LT(max_abs(u.matrix() - Mat::Identity(9, 9)), 1e-10);
}

TEST(LinearMap, ApplyAndGridChecks) {
  const auto d = fsq::dft_map(fsq::LatticeGrid(5));
  EXPECT_EQ(d.provenance(), fsq::Provenance::kDft);
  EXPECT_LT(fsq::unitarity_deviation(d), 1e-14);
  const fsq::StateVector s(fsq::LatticeGrid(7), Eigen::VectorXcd::Ones(7));
  EXPECT_THROW(d.apply(s), fsq::GridMismatchError);
  EXPECT_THROW(fsq::LinearMap(fsq::LatticeGrid(5), Mat::Zero(4, 5), fsq::Provenance::kCustom),
               fsq::GridMismatchError);
  const auto a = frames(5, 1.0);
  const auto b = fsq::build_basis(fsq::LatticeGrid(7), fsq::SqueezeParam(1.0));
  EXPECT_THROW(fsq::squeezer_provisional(a.unit, b), fsq::GridMismatchError);
}

TEST(Provenance, Names) {
  EXPECT_EQ(fsq::to_string(fsq::Provenance::kUnitarySqueezer), "unitary-squeezer");
}

}  // namespace
