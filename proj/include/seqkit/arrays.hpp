/*
   Copyright 2026 The seqkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEQKIT_ARRAYS_HPP
#define SEQKIT_ARRAYS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqkit/sequence.hpp"

namespace seqkit {

/// Doubly periodic rows x cols array over GF(2), row-major.
class BinaryArray {
 public:
  BinaryArray() = default;
  BinaryArray(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint8_t v) { cells_[i * cols_ + j] = v ? 1 : 0; }
  int bipolar(std::size_t i, std::size_t j) const { return 1 - 2 * int(at(i, j)); }

  BinarySequence column(std::size_t j) const;
  BinarySequence row(std::size_t i) const;

  bool operator==(const BinaryArray&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// The unique k in [0, u*v) with k = i (mod u) and k = j (mod v).
std::size_t fold_index(std::size_t u, std::size_t v, std::size_t i, std::size_t j);

/// CRT fold of a length u*v sequence into u rows x v columns
/// (the diagonal-writing construction); requires gcd(u, v) = 1.
BinaryArray fold(const BinarySequence& s, std::size_t u, std::size_t v);
/// Exact inverse of fold.
BinarySequence unfold(const BinaryArray& a);

/// Periodic array shift: h places horizontally (columns) to the left and
/// v places vertically (rows); result(i, j) = a(i + v, j + h) cyclically.
BinaryArray array_shift(const BinaryArray& a, long long h, long long v);

/// Per-column cyclic-shift descriptor: value tau means the base column
/// left-shifted by tau, read downward from row 0; kBlank marks a constant
/// column. Doubles as a frequency-hop pattern (kBlank = no transmission).
struct ShiftSequence {
  static constexpr int kBlank = -1;

  int n_cols = 0;
  int row_modulus = 0;
  std::vector<int> values;  // in [0, row_modulus) or kBlank

  int defined_count() const;
  bool operator==(const ShiftSequence&) const = default;

  /// Comma-separated values with '-' for blanks, e.g. "5,-,-,5,6,4,0,4,6".
  std::string to_csv() const;
  static ShiftSequence from_csv(std::string_view text, int row_modulus);
};

/// Per column: kBlank if constant, else the smallest tau with
/// column == shift(base, tau). Throws ColumnNotAShift otherwise.
ShiftSequence extract_shift_sequence(const BinaryArray& a, const BinarySequence& base);

/// Column j of the result is shift(column, values[j]), or a constant fill
/// column where values[j] is blank.
BinaryArray substitute_columns(const ShiftSequence& shifts, const BinarySequence& column,
                               std::uint8_t fill = 0);

/// Sparse grid of dots; convertible to a ShiftSequence when no column
/// holds more than one dot.
struct DotGrid {
  int rows = 0;
  int cols = 0;
  std::vector<std::pair<int, int>> dots;  // (row, col), kept sorted

  void add(int r, int c);
  bool operator==(const DotGrid&) const = default;
};

/// Quarter-turn anticlockwise: R x C grid becomes C x R, dot (r, c) moves
/// to (C-1-c, r).
DotGrid rotate_ccw(const DotGrid& g);

/// Column j maps to its dot's row, or kBlank for an empty column.
/// Throws MultipleDotsInColumn when some column holds two dots.
ShiftSequence to_shift_sequence(const DotGrid& g);
DotGrid to_dot_grid(const ShiftSequence& s);

/// Text form: one row of '0'/'1' per line.
std::string array_to_text(const BinaryArray& a);
BinaryArray array_from_text(std::string_view text);
/// PBM P1 export; 1 = black cell.
std::string array_to_pbm(const BinaryArray& a);
BinaryArray array_from_pbm(std::string_view text);

}  // namespace seqkit

#endif  // SEQKIT_ARRAYS_HPP
