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

#include "seqkit/arrays.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "seqkit/errors.hpp"

namespace seqkit {

BinaryArray::BinaryArray(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw DomainError("array dimensions must be positive");
}

BinarySequence BinaryArray::column(std::size_t j) const {
  std::vector<std::uint8_t> bits(rows_);
  for (std::size_t i = 0; i < rows_; ++i) bits[i] = at(i, j);
  return BinarySequence(std::move(bits));
}

BinarySequence BinaryArray::row(std::size_t i) const {
  std::vector<std::uint8_t> bits(cols_);
  for (std::size_t j = 0; j < cols_; ++j) bits[j] = at(i, j);
  return BinarySequence(std::move(bits));
}

std::size_t fold_index(std::size_t u, std::size_t v, std::size_t i, std::size_t j) {
  // k = i*v*(v^{-1} mod u) + j*u*(u^{-1} mod v) mod uv
  auto inv_mod = [](std::size_t a, std::size_t m) {
    long long t = 0, newt = 1, r = (long long)m, newr = (long long)(a % m);
    while (newr != 0) {
      long long q = r / newr;
      t = std::exchange(newt, t - q * newt);
      r = std::exchange(newr, r - q * newr);
    }
    return std::size_t(((t % (long long)m) + (long long)m) % (long long)m);
  };
  std::size_t L = u * v;
  std::size_t a = v % u == 0 ? 0 : v * inv_mod(v % u, u) % L;
  std::size_t b = u % v == 0 ? 0 : u * inv_mod(u % v, v) % L;
  return ((unsigned long long)a * i + (unsigned long long)b * j) % L;
}

BinaryArray fold(const BinarySequence& s, std::size_t u, std::size_t v) {
  if (u == 0 || v == 0 || s.size() != u * v) {
    throw DimensionMismatch("fold requires length == rows * cols");
  }
  if (std::gcd(u, v) != 1) throw NotCoprime("fold requires coprime dimensions");
  BinaryArray a(u, v);
  for (std::size_t k = 0; k < s.size(); ++k) a.set(k % u, k % v, s[k]);
  return a;
}

BinarySequence unfold(const BinaryArray& a) {
  std::size_t u = a.rows(), v = a.cols();
  if (std::gcd(u, v) != 1) throw NotCoprime("unfold requires coprime dimensions");
  std::vector<std::uint8_t> bits(u * v);
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = a.at(k % u, k % v);
  return BinarySequence(std::move(bits));
}

BinaryArray array_shift(const BinaryArray& a, long long h, long long v) {
  long long R = (long long)a.rows(), C = (long long)a.cols();
  long long dh = ((h % C) + C) % C;
  long long dv = ((v % R) + R) % R;
  BinaryArray out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, a.at(std::size_t((long long(i) + dv) % R), std::size_t((long long(j) + dh) % C)));
    }
  }
  return out;
}

int ShiftSequence::defined_count() const {
  return int(std::count_if(values.begin(), values.end(), [](int v) { return v != kBlank; }));
}

std::string ShiftSequence::to_csv() const {
  std::string s;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) s += ',';
    s += values[j] == kBlank ? "-" : std::to_string(values[j]);
  }
  return s;
}

ShiftSequence ShiftSequence::from_csv(std::string_view text, int row_modulus) {
  if (row_modulus < 1) throw DomainError("row modulus must be positive");
  ShiftSequence s;
  s.row_modulus = row_modulus;
  std::string token;
  auto push = [&] {
    std::string t;
    for (char c : token) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) throw DomainError("empty shift-sequence entry");
    if (t == "-") {
      s.values.push_back(kBlank);
    } else {
      int v = std::stoi(t);
      if (v < 0 || v >= row_modulus) {
        throw DomainError("shift value " + t + " outside [0, " + std::to_string(row_modulus) + ")");
      }
      s.values.push_back(v);
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      push();
    } else {
      token += c;
    }
  }
  push();
  s.n_cols = int(s.values.size());
  return s;
}

ShiftSequence extract_shift_sequence(const BinaryArray& a, const BinarySequence& base) {
  if (base.size() != a.rows()) {
    throw DimensionMismatch("base column length must equal the number of rows");
  }
  ShiftSequence out;
  out.n_cols = int(a.cols());
  out.row_modulus = int(a.rows());
  out.values.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    BinarySequence col = a.column(j);
    if (col.is_constant()) {
      out.values.push_back(ShiftSequence::kBlank);
      continue;
    }
    int found = ShiftSequence::kBlank;
    for (std::size_t t = 0; t < base.size(); ++t) {
      if (col == shift(base, (long long)t)) {
        found = int(t);
        break;
      }
    }
    if (found == ShiftSequence::kBlank) {
      throw ColumnNotAShift("column " + std::to_string(j) +
                            " is neither constant nor a shift of the base");
    }
    out.values.push_back(found);
  }
  return out;
}

BinaryArray substitute_columns(const ShiftSequence& shifts, const BinarySequence& column,
                               std::uint8_t fill) {
  if ((int)column.size() != shifts.row_modulus) {
    throw DimensionMismatch("column length must equal the shift sequence's row modulus");
  }
  BinaryArray a(std::size_t(shifts.row_modulus), std::size_t(shifts.n_cols));
  for (int j = 0; j < shifts.n_cols; ++j) {
    int v = shifts.values[std::size_t(j)];
    if (v == ShiftSequence::kBlank) {
      for (int i = 0; i < shifts.row_modulus; ++i) a.set(std::size_t(i), std::size_t(j), fill);
    } else {
      BinarySequence col = shift(column, v);
      for (int i = 0; i < shifts.row_modulus; ++i) a.set(std::size_t(i), std::size_t(j), col[std::size_t(i)]);
    }
  }
  return a;
}

void DotGrid::add(int r, int c) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw DomainError("dot outside the grid");
  dots.emplace_back(r, c);
  std::sort(dots.begin(), dots.end());
  dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
}

DotGrid rotate_ccw(const DotGrid& g) {
  DotGrid out;
  out.rows = g.cols;
  out.cols = g.rows;
  for (auto [r, c] : g.dots) out.dots.emplace_back(g.cols - 1 - c, r);
  std::sort(out.dots.begin(), out.dots.end());
  return out;
}

ShiftSequence to_shift_sequence(const DotGrid& g) {
  ShiftSequence s;
  s.n_cols = g.cols;
  s.row_modulus = g.rows;
  s.values.assign(std::size_t(g.cols), ShiftSequence::kBlank);
  for (auto [r, c] : g.dots) {
    if (s.values[std::size_t(c)] != ShiftSequence::kBlank) {
      throw MultipleDotsInColumn("column " + std::to_string(c) + " holds more than one dot");
    }
    s.values[std::size_t(c)] = r;
  }
  return s;
}

DotGrid to_dot_grid(const ShiftSequence& s) {
  DotGrid g;
  g.rows = s.row_modulus;
  g.cols = s.n_cols;
  for (int j = 0; j < s.n_cols; ++j) {
    if (s.values[std::size_t(j)] != ShiftSequence::kBlank) g.add(s.values[std::size_t(j)], j);
  }
  return g;
}

std::string array_to_text(const BinaryArray& a) {
  std::string s;
  s.reserve(a.rows() * (a.cols() + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

BinaryArray array_from_text(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur[0] != '#') lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty() && cur[0] != '#') lines.push_back(cur);
  if (lines.empty()) throw DomainError("empty array text");
  BinaryArray a(lines.size(), lines[0].size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != lines[0].size()) throw DomainError("ragged array text");
    for (std::size_t j = 0; j < lines[i].size(); ++j) {
      if (lines[i][j] != '0' && lines[i][j] != '1') throw DomainError("array text must be 0/1");
      a.set(i, j, lines[i][j] == '1');
    }
  }
  return a;
}

std::string array_to_pbm(const BinaryArray& a) {
  std::ostringstream os;
  os << "P1\n" << a.cols() << ' ' << a.rows() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << int(a.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

BinaryArray array_from_pbm(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string magic;
  is >> magic;
  if (magic != "P1") throw DomainError("not a PBM P1 file");
  auto next_token = [&]() -> std::string {
    std::string tok;
    while (is >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(is, rest);
        continue;
      }
      return tok;
    }
    throw DomainError("truncated PBM file");
  };
  std::size_t cols = std::stoul(next_token());
  std::size_t rows = std::stoul(next_token());
  // P1 pixels may be separated by whitespace or packed together
  std::string pixels;
  char c;
  bool in_comment = false;
  while (is.get(c)) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (in_comment) continue;
    if (c == '0' || c == '1') pixels += c;
  }
  if (pixels.size() != rows * cols) throw DomainError("PBM pixel count mismatch");
  BinaryArray a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a.set(i, j, pixels[i * cols + j] == '1');
  }
  return a;
}

}  // namespace seqkit
