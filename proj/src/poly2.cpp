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

#include "seqkit/poly2.hpp"

#include <bit>
#include <cctype>
#include <charconv>

#include "seqkit/errors.hpp"

namespace seqkit {

namespace {
constexpr int kWordBits = 64;

std::size_t word_index(int i) { return std::size_t(i) / kWordBits; }
std::uint64_t bit_mask(int i) { return std::uint64_t(1) << (std::size_t(i) % kWordBits); }
}  // namespace

void Poly2::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly2 Poly2::monomial(int degree) {
  if (degree < 0) throw DomainError("monomial degree must be non-negative");
  Poly2 p;
  p.words_.resize(word_index(degree) + 1, 0);
  p.words_.back() |= bit_mask(degree);
  return p;
}

int Poly2::degree() const {
  if (words_.empty()) return kMinusInfinity;
  int top = int(words_.size()) - 1;
  return top * kWordBits + (std::bit_width(words_.back()) - 1);
}

bool Poly2::coeff(int i) const {
  if (i < 0) return false;
  std::size_t w = word_index(i);
  if (w >= words_.size()) return false;
  return (words_[w] & bit_mask(i)) != 0;
}

void Poly2::set_coeff(int i, bool v) {
  if (i < 0) throw DomainError("negative coefficient index");
  std::size_t w = word_index(i);
  if (v) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= bit_mask(i);
  } else if (w < words_.size()) {
    words_[w] &= ~bit_mask(i);
    normalize();
  }
}

int Poly2::weight() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

Poly2& Poly2::operator^=(const Poly2& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  normalize();
  return *this;
}

Poly2 Poly2::shifted_up(int n) const {
  if (is_zero() || n == 0) {
    Poly2 r = *this;
    return r;
  }
  Poly2 r;
  r.words_.assign(words_.size() + word_index(n) + 1, 0);
  std::size_t ws = std::size_t(n) / kWordBits;
  int bs = n % kWordBits;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i + ws] |= words_[i] << bs;
    if (bs != 0) r.words_[i + ws + 1] |= words_[i] >> (kWordBits - bs);
  }
  r.normalize();
  return r;
}

void Poly2::xor_shifted(const Poly2& other, int n) {
  if (other.is_zero()) return;
  std::size_t need = other.words_.size() + word_index(n) + 1;
  if (words_.size() < need) words_.resize(need, 0);
  std::size_t ws = std::size_t(n) / kWordBits;
  int bs = n % kWordBits;
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i + ws] ^= other.words_[i] << bs;
    if (bs != 0) words_[i + ws + 1] ^= other.words_[i] >> (kWordBits - bs);
  }
  normalize();
}

Poly2 Poly2::operator*(const Poly2& other) const {
  if (is_zero() || other.is_zero()) return Poly2{};
  const Poly2& a = degree() <= other.degree() ? *this : other;
  const Poly2& b = degree() <= other.degree() ? other : *this;
  Poly2 r;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i)) r.xor_shifted(b, i);
  }
  return r;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly2 q, r = a;
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int s = r.degree() - db;
    q.set_coeff(s, true);
    r.xor_shifted(b, s);
  }
  return {q, r};
}

Poly2 Poly2::compose_x_pow(int n) const {
  if (n < 1) throw DomainError("composition exponent must be >= 1");
  Poly2 r;
  if (is_zero()) return r;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i)) r.set_coeff(i * n, true);
  }
  return r;
}

Poly2 Poly2::reciprocal(int d) const {
  if (!is_zero() && d < degree()) throw DomainError("reciprocal degree below polynomial degree");
  Poly2 r;
  if (is_zero()) return r;
  for (int i = 0; i <= degree(); ++i) {
    if (coeff(i)) r.set_coeff(d - i, true);
  }
  return r;
}

Poly2 Poly2::from_bits(std::string_view bits) {
  Poly2 p;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      p.set_coeff(int(i), true);
    } else if (bits[i] != '0') {
      throw DomainError("bit-string polynomial may contain only '0'/'1'");
    }
  }
  return p;
}

Poly2 Poly2::from_human(std::string_view text) {
  Poly2 p;
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) throw DomainError("empty polynomial text");
  if (t == "0") return p;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t next = t.find('+', pos);
    std::string_view term(t.data() + pos, (next == std::string::npos ? t.size() : next) - pos);
    if (term.empty()) throw DomainError("malformed polynomial term");
    int e = 0;
    if (term == "1") {
      e = 0;
    } else if (term == "x") {
      e = 1;
    } else if (term.starts_with("x^")) {
      auto num = term.substr(2);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), e);
      if (ec != std::errc{} || ptr != num.data() + num.size() || e < 0) {
        throw DomainError("malformed polynomial exponent: " + std::string(term));
      }
    } else {
      throw DomainError("malformed polynomial term: " + std::string(term));
    }
    if (p.coeff(e)) throw DomainError("repeated polynomial term: " + std::string(term));
    p.set_coeff(e, true);
    pos = (next == std::string::npos) ? t.size() : next + 1;
  }
  return p;
}

std::optional<Poly2> Poly2::parse(std::string_view text) {
  try {
    bool bits_only = !text.empty();
    for (char c : text) {
      if (c != '0' && c != '1') {
        bits_only = false;
        break;
      }
    }
    return bits_only ? from_bits(text) : from_human(text);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::string Poly2::to_bits() const {
  if (is_zero()) return "0";
  std::string s(std::size_t(degree()) + 1, '0');
  for (int i = 0; i <= degree(); ++i) {
    if (coeff(i)) s[std::size_t(i)] = '1';
  }
  return s;
}

std::string Poly2::to_human() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!s.empty()) s += '+';
    if (i == 0) {
      s += '1';
    } else if (i == 1) {
      s += 'x';
    } else {
      s += "x^" + std::to_string(i);
    }
  }
  return s;
}

Poly2 poly_gcd(Poly2 a, Poly2 b) {
  while (!b.is_zero()) {
    Poly2 r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;  // GF(2): nonzero polynomials are already monic
}

}  // namespace seqkit
