#pragma once

#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "fsq/basis.hpp"
#include "fsq/lattice.hpp"

namespace fsq {

enum class Provenance {
  kProvisional,
  kOblique,
  kObliqueInverse,
  kUnitarySqueezer,
  kDft,
  kDisplacement,
  kCustom,
};

std::string_view to_string(Provenance p) noexcept;

/// Dense operator on the u-representation of a grid.
class LinearMap {
 public:
  LinearMap(LatticeGrid grid, Eigen::MatrixXcd matrix, Provenance provenance);

  const LatticeGrid& grid() const noexcept { return grid_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  Provenance provenance() const noexcept { return provenance_; }

  // Result keeps the input's representation tag; no renormalization.
  StateVector apply(const StateVector& state) const;

 private:
  LatticeGrid grid_;
  Eigen::MatrixXcd matrix_;
  Provenance provenance_;
};

// Xi_p = sum_n |n; target> <n; source|. Not unitary in general.
LinearMap squeezer_provisional(const OscillatorBasis& source, const OscillatorBasis& target);

// Xi = sum_n |n; target>(n; source| and its inverse Xi-bar = sum_n |n; source>(n; target|.
std::pair<LinearMap, LinearMap> squeezer_oblique(const OscillatorBasis& source,
                                                 const OscillatorBasis& target,
                                                 const DualBasis& source_dual,
                                                 const DualBasis& target_dual);

/// Xi_u = sum_{n < low} |n; target>(n; source| + sum_{n >= low} |n; source>(n; source|.
/// Maps |n; source> to |n; target> for n < low and fixes the other source states.
LinearMap squeezer_unitary(const OscillatorBasis& source, const OscillatorBasis& target,
                           const DualBasis& source_dual, int low_block);

LinearMap dft_map(const LatticeGrid& grid);

}  // namespace fsq
