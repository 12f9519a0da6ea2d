#pragma once

// Exact row reduction over Q; internal helper.

#include <cstddef>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rows;               // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

inline RowEchelon reduced_row_echelon(RationalMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

}  // namespace germlab::detail
