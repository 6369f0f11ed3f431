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

#ifndef SEQKIT_POLY2_HPP
#define SEQKIT_POLY2_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqkit {

/// Polynomial over GF(2), stored as packed coefficient words (bit i = c_i).
///
/// The zero polynomial has no defined degree; degree() returns the
/// kMinusInfinity sentinel for it and callers branch on is_zero() before
/// doing degree arithmetic.
class Poly2 {
 public:
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  Poly2() = default;  // zero polynomial

  static Poly2 zero() { return Poly2{}; }
  static Poly2 one() { return monomial(0); }
  static Poly2 monomial(int degree);
  /// Parses the ascending-coefficient bit string form, e.g. "1101" = 1+x+x^3.
  static Poly2 from_bits(std::string_view bits);
  /// Parses the human form, e.g. "x^3+x+1"; accepts "0" and "1".
  static Poly2 from_human(std::string_view text);
  /// Accepts either text form; empty optional on malformed input.
  static std::optional<Poly2> parse(std::string_view text);

  bool is_zero() const { return words_.empty(); }
  int degree() const;
  bool coeff(int i) const;
  void set_coeff(int i, bool v);
  int weight() const;

  Poly2& operator^=(const Poly2& other);
  friend Poly2 operator^(Poly2 a, const Poly2& b) { return a ^= b; }
  Poly2 operator*(const Poly2& other) const;
  /// this * x^n
  Poly2 shifted_up(int n) const;
  /// this ^= other * x^n
  void xor_shifted(const Poly2& other, int n);
  /// quotient/remainder; b must be nonzero
  static std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b);
  Poly2 operator%(const Poly2& b) const { return divmod(*this, b).second; }
  Poly2 operator/(const Poly2& b) const { return divmod(*this, b).first; }

  /// p(x^n): every term x^e becomes x^{e*n}. n >= 1.
  Poly2 compose_x_pow(int n) const;
  /// x^d * p(1/x) for d >= degree(); coefficient i moves to d-i.
  Poly2 reciprocal(int d) const;

  bool operator==(const Poly2& other) const = default;

  std::string to_bits() const;   // ascending coefficients; "0" for zero
  std::string to_human() const;  // descending terms; "0" for zero

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
  void normalize();
};

/// Monic greatest common divisor; gcd(a, 0) = a, gcd(0, 0) = 0.
Poly2 poly_gcd(Poly2 a, Poly2 b);

}  // namespace seqkit

#endif  // SEQKIT_POLY2_HPP
