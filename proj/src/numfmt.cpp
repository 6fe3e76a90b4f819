// numfmt.cpp

#include "wpurify/numfmt.hpp"

#include <cstdio>

namespace wpurify {

std::string format_sig(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return buffer;
}

std::string format_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string cell = cells[i];
    const std::size_t width = (i == 0) ? 8 : 16;
    if (i + 1 < cells.size() && cell.size() < width)
      cell.append(width - cell.size(), ' ');
    row += cell;
    if (i + 1 < cells.size()) row += "  ";
  }
  row += '\n';
  return row;
}

}  // namespace wpurify
