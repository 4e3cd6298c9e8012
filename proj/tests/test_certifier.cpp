#include <gtest/gtest.h>

#include <cmath>

#include "fsq/certifier.hpp"
#include "fsq/errors.hpp"
#include "fsq/squeezers.hpp"
#include "oracles.hpp"

namespace {

fsq::PartitionCert certify(int n, double xi, fsq::Thresholds th = {}) {
  const fsq::LatticeGrid g(n);
  return fsq::certify_partition(fsq::build_basis(g, fsq::SqueezeParam(1.0)),
                                fsq::build_basis(g, fsq::SqueezeParam(xi)), th);
}

TEST(Certifier, FrozenValuesAtThirteen) {
  EXPECT_EQ(certify(13, 0.95).low_block, 2);
  EXPECT_EQ(certify(13, 1.05).low_block, 2);
  EXPECT_EQ(certify(13, 0.9).low_block, 1);
  EXPECT_EQ(certify(13, 1.1).low_block, 1);
  EXPECT_EQ(certify(13, 1.0).low_block, 13);
}

TEST(Certifier, AgreesWithExhaustiveScan) {
  for (int n : {7, 13, 21}) {
    const Eigen::MatrixXd unit = oracle::basis(n, 1.0);
    for (double xi : {0.85, 0.9, 0.95, 1.05, 1.1, 1.2}) {
      for (double th : {1e-4, 1e-3}) {
        const int expected = oracle::low_block(unit, oracle::basis(n, xi), th, th);
        const auto cert = certify(n, xi, {th, th});
        EXPECT_EQ(cert.low_block, expected) << n << " " << xi << " " << th;
        EXPECT_EQ(cert.pass, expected > 0);
        EXPECT_EQ(cert.high_block, n - cert.low_block);
      }
    }
  }
}

TEST(Certifier, ReportedMaximaRespectThresholds) {
  const auto c = certify(21, 1.05);
  ASSERT_TRUE(c.pass);
  EXPECT_LT(c.cross_block_max, c.thresholds.cross_block);
  EXPECT_LT(c.xi_drift_max, c.thresholds.xi_drift);
  EXPECT_TRUE(std::isfinite(c.dual_cross_max));
}

TEST(Certifier, LowBlockShrinksAwayFromUnitWidth) {
  for (int n : {13, 21}) {
    int previous = n;
    for (double xi : {1.05, 1.1, 1.15, 1.2}) {
      const int nl = certify(n, xi).low_block;
      EXPECT_LE(nl, previous) << n << " " << xi;
      previous = nl;
    }
    previous = n;
    for (double xi : {0.95, 0.9, 0.85, 0.8}) {
      const int nl = certify(n, xi).low_block;
      EXPECT_LE(nl, previous) << n << " " << xi;
      previous = nl;
    }
  }
}

TEST(Certifier, NoPassingSize) {
  const auto c = certify(5, 0.9);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.low_block, 0);
  EXPECT_EQ(c.high_block, 5);
  // Diagnostics describe the smallest candidate.
  const auto d = fsq::partition_diagnostics(
      fsq::gram(fsq::build_basis(fsq::LatticeGrid(5), fsq::SqueezeParam(1.0))),
      fsq::gram(fsq::build_basis(fsq::LatticeGrid(5), fsq::SqueezeParam(0.9))), 1);
  EXPECT_DOUBLE_EQ(c.cross_block_max, d.cross_block_max);
}

TEST(Certifier, RefusesEvenAndMismatchedGrids) {
  const fsq::LatticeGrid even(8);
  const auto b = fsq::build_basis(even, fsq::SqueezeParam(1.0));
  EXPECT_THROW(fsq::certify_partition(b, b), fsq::DomainError);
  const auto a = fsq::build_basis(fsq::LatticeGrid(7), fsq::SqueezeParam(1.0));
  const auto c = fsq::build_basis(fsq::LatticeGrid(9), fsq::SqueezeParam(1.0));
  EXPECT_THROW(fsq::certify_partition(a, c), fsq::GridMismatchError);
}

TEST(Unitarity, DeviationOfKnownMatrices) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
  EXPECT_DOUBLE_EQ(fsq::unitarity_deviation(m), 0.0);
  m(0, 0) = 2.0;
  EXPECT_DOUBLE_EQ(fsq::unitarity_deviation(m), 3.0);
  EXPECT_THROW(fsq::unitarity_deviation(Eigen::MatrixXcd::Zero(2, 3)), fsq::DomainError);
}

TEST(GramStructure, ModFourAtUnitWidth) {
  const auto g = fsq::gram(fsq::build_basis(fsq::LatticeGrid(13), fsq::SqueezeParam(1.0)));
  const auto r = fsq::gram_structure_check(g);
  EXPECT_EQ(r.modulus, 4);
  EXPECT_TRUE(r.clean());
  EXPECT_LT(r.class_max[1], 1e-12);
  EXPECT_LT(r.class_max[2], 1e-12);
  EXPECT_GT(r.class_max[0], 0.5);
}

TEST(GramStructure, ParityOnlyAwayFromUnitWidth) {
  const auto g = fsq::gram(fsq::build_basis(fsq::LatticeGrid(13), fsq::SqueezeParam(0.9)));
  EXPECT_EQ(fsq::gram_structure_check(g).modulus, 2);
  EXPECT_TRUE(fsq::gram_structure_check(g).clean());
  const auto strict = fsq::gram_structure_check(g, 4);
  EXPECT_FALSE(strict.clean());
  for (const auto& v : strict.violations) {
    EXPECT_LT(v.row, v.col);
    EXPECT_EQ((v.col - v.row) % 2, 0);
  }
  EXPECT_THROW(fsq::gram_structure_check(g, 3), fsq::DomainError);
}

TEST(Certifier, KeyValueRendering) {
  const auto text = fsq::to_key_value(certify(13, 1.05));
  EXPECT_EQ(text.rfind("N=13\nxi=1.05\nN_l=2\nN_h=11\n", 0), 0u);
  EXPECT_NE(text.find("pass=true\n"), std::string::npos);
}

}  // namespace
