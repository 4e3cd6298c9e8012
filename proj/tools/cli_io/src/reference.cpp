#include "fsq/cli/reference.hpp"

#include <charconv>
#include <cmath>

#include "fsq/errors.hpp"

namespace fsq::cli {

const std::vector<std::vector<std::string_view>>& table1_reference() {
  static const std::vector<std::vector<std::string_view>> table = {
      {"1", "0", "0", "0", "0.00", "0", "0", "0", "0.00", "0", "0", "0", "0.00"},
      {"0", "1", "0", "0", "0", "0.00", "0", "0", "0", "0.00", "0", "0", "0"},
      {"0", "0", "1", "0", "0", "0", "0.00", "0", "0", "0", "0.00", "0", "0"},
      {"0", "0", "0", "1", "0", "0", "0", "0.00", "0", "0", "0", "0.05", "0"},
      {"0.00", "0", "0", "0", "1", "0", "0", "0", "0.00", "0", "0", "0", "0.07"},
      {"0", "0.00", "0", "0", "0", "1", "0", "0", "0", "0.05", "0", "0", "0"},
      {"0", "0", "0.00", "0", "0", "0", "1", "0", "0", "0", "0.01", "0", "0"},
      {"0", "0", "0", "0.00", "0", "0", "0", "1", "0", "0", "0", "-0.67", "0"},
      {"0.00", "0", "0", "0", "0.00", "0", "0", "0", "1", "0", "0", "0", "0.42"},
      {"0", "0.00", "0", "0", "0", "0.05", "0", "0", "0", "1", "0", "0", "0"},
      {"0", "0", "0.00", "0", "0", "0", "0.01", "0", "0", "0", "1", "0", "0"},
      {"0", "0", "0", "0.05", "0", "0", "0", "-0.67", "0", "0", "0", "1", "0"},
      {"0.00", "0", "0", "0", "0.07", "0", "0", "0", "0.42", "0", "0", "0", "1"},
  };
  return table;
}

bool TableComparison::magnitudes_ok() const { return mismatches() == 0; }

int TableComparison::mismatches() const {
  int count = 0;
  for (const auto& c : cells) count += c.magnitude_ok ? 0 : 1;
  return count;
}

int TableComparison::sign_flips() const {
  int count = 0;
  for (const auto& c : cells) count += (c.kind == CellKind::kValue && !c.sign_ok) ? 1 : 0;
  return count;
}

TableComparison compare_table1(const GramMatrix& g) {
  if (g.dimension() != kTable1Dimension) {
    throw DomainError("reference comparison needs the N = 13 overlap matrix");
  }
  const auto& ref = table1_reference();
  TableComparison out;
  for (int r = 0; r < kTable1Dimension; ++r) {
    for (int c = 0; c < kTable1Dimension; ++c) {
      CellCheck check;
      check.row = r;
      check.col = c;
      check.reference = std::string(ref[r][c]);
      check.computed = g(r, c);
      const std::string_view text = ref[r][c];
      if (text == "1") {
        check.kind = CellKind::kDiagonal;
        check.magnitude_ok = std::fabs(check.computed - 1.0) < kStructuralZeroTolerance;
      } else if (text == "0") {
        check.kind = CellKind::kStructuralZero;
        check.magnitude_ok = std::fabs(check.computed) < kStructuralZeroTolerance;
      } else if (text == "0.00") {
        check.kind = CellKind::kNegligible;
        check.magnitude_ok = std::fabs(check.computed) < kTable1Tolerance;
      } else {
        check.kind = CellKind::kValue;
        double value = 0.0;
        std::from_chars(text.data(), text.data() + text.size(), value);
        check.magnitude_ok =
            std::fabs(std::fabs(check.computed) - std::fabs(value)) <= kTable1Tolerance;
        check.sign_ok = (check.computed < 0.0) == (value < 0.0);
      }
      out.cells.push_back(check);
    }
  }
  return out;
}

}  // namespace fsq::cli
