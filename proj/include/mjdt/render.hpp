#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mjdt/analysis.hpp"

namespace mjdt {

// Distinct matrix values in ascending order; values[k] is drawn as digit k+1.
struct DigitLegend {
  std::vector<std::uint64_t> values;

  static DigitLegend from(const CountMatrix& m);
  char digit(std::uint64_t value) const;
};

// One line of digits per matrix row, a blank line, then one "d -> value"
// line per legend entry.
std::string render_digit_matrix(const CountMatrix& m);

// Only the digit rows, without the legend block.
std::string render_digit_rows(const CountMatrix& m);

std::string matrix_to_json(const CountMatrix& m);
std::string matrix_to_csv(const CountMatrix& m);

std::string report_to_text(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r);

}  // namespace mjdt
