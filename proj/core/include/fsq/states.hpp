#pragma once

#include <Eigen/Dense>

#include "fsq/lattice.hpp"

namespace fsq {

/// Lattice function f_n(j; xi) on an N-periodic grid:
///
///   f_n(j; xi) = xi^{-1/2} sum_a exp[-pi (aN + j)^2 / (N xi^2)] H_n(eps/xi (aN + j))
///
/// with eps = sqrt(2 pi / N). The xi^{-1/2} weight makes the unitary DFT map
/// f_n(.; xi) to i^n f_n(.; 1/xi) exactly. j is reduced modulo N first, so
/// periodicity is bit-exact.
double fn_eval(int n, int j, const SqueezeParam& xi, const LatticeGrid& grid);

// f_n over every label of the grid, in storage order.
Eigen::VectorXd lattice_function(int n, const SqueezeParam& xi, const LatticeGrid& grid);

// Function index used for basis slot n: n itself, except that even N uses
// N + 3 in slot N - 1.
int function_index(int n, const LatticeGrid& grid);

/// Normalized discrete oscillator state |n; xi> in the u-representation.
/// Throws DegenerateStateError if every amplitude of f_n vanishes.
StateVector oscillator_state(int n, const SqueezeParam& xi, const LatticeGrid& grid);

/// Unitary DFT between the u- and v-representations,
///   out(k) = N^{-1/2} sum_j exp(+2 pi i jk / N) in(j),  j, k labels,
/// i.e. the amplitudes <v_k|psi> for |v_k> = sum_j exp(-2 pi i kj/N) |u_j>.
/// Toggles the representation tag.
StateVector dft_apply(const StateVector& state);

// The matrix applied by dft_apply.
Eigen::MatrixXcd dft_matrix(const LatticeGrid& grid);

}  // namespace fsq
