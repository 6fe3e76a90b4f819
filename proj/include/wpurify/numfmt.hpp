// numfmt.hpp
// Text formatting shared by the CSV export, the round serialization and the
// CLI: floats are printed with 12 significant digits.
#pragma once

#include <string>
#include <vector>

namespace wpurify {

std::string format_sig(double value, int digits = 12);

// One left-aligned table row (first column narrow, the rest wide), newline
// terminated.
std::string format_row(const std::vector<std::string>& cells);

}  // namespace wpurify
