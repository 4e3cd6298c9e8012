#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsq/basis.hpp"

namespace fsq::cli {

inline constexpr int kTable1Dimension = 13;
inline constexpr double kTable1Xi = 1.0;
// Two-decimal entries are matched to half a unit in the last place.
inline constexpr double kTable1Tolerance = 0.005;
inline constexpr double kStructuralZeroTolerance = 1e-12;

// Reference overlap matrix for N = 13, xi = 1, cell text kept verbatim.
const std::vector<std::vector<std::string_view>>& table1_reference();

enum class CellKind {
  kDiagonal,        // "1"
  kStructuralZero,  // "0": must vanish to 1e-12
  kNegligible,      // "0.00": |value| < 0.005
  kValue,           // two-decimal number: magnitude within 0.005
};

struct CellCheck {
  int row = 0;
  int col = 0;
  CellKind kind = CellKind::kValue;
  std::string reference;
  double computed = 0.0;
  bool magnitude_ok = true;
  // Only meaningful for kValue cells.
  bool sign_ok = true;
};

struct TableComparison {
  std::vector<CellCheck> cells;

  bool magnitudes_ok() const;
  int mismatches() const;
  int sign_flips() const;
};

TableComparison compare_table1(const GramMatrix& g);

}  // namespace fsq::cli
