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

#include <bit>
#include <cstdint>
#include <vector>

#include "seqkit/analysis.hpp"
#include "seqkit/errors.hpp"

namespace seqkit {

namespace {

// 64 coefficient bits starting at bit position pos; w must be padded so
// that reads one word past the data are zero.
inline std::uint64_t window64(const std::vector<std::uint64_t>& w, std::size_t pos) {
  std::size_t q = pos >> 6;
  unsigned r = unsigned(pos & 63);
  std::uint64_t lo = w[q] >> r;
  if (r != 0) lo |= w[q + 1] << (64 - r);
  return lo;
}

}  // namespace

BmResult berlekamp_massey(const BinarySequence& prefix) {
  const std::size_t n_bits = prefix.size();
  const std::size_t n_words = (n_bits + 63) / 64 + 4;  // slack for shifted writes

  // Reversed copy of the input, packed: bit j = s[n-1-j]. The discrepancy
  // at step t is then a contiguous dot product against the register.
  std::vector<std::uint64_t> rev(n_words, 0);
  for (std::size_t i = 0; i < n_bits; ++i) {
    if (prefix[i]) rev[(n_bits - 1 - i) >> 6] |= std::uint64_t(1) << ((n_bits - 1 - i) & 63);
  }

  std::vector<std::uint64_t> c(n_words, 0), b(n_words, 0), scratch;
  c[0] = 1;
  b[0] = 1;
  long long l = 0;
  std::size_t gap = 1;

  // dst ^= src << sh, over the first `used` source words
  auto xor_shifted_words = [](std::vector<std::uint64_t>& dst,
                              const std::vector<std::uint64_t>& src, std::size_t used,
                              std::size_t sh) {
    std::size_t ws = sh >> 6;
    unsigned bs = unsigned(sh & 63);
    for (std::size_t i = 0; i < used; ++i) {
      dst[i + ws] ^= src[i] << bs;
      if (bs != 0) dst[i + ws + 1] ^= src[i] >> (64 - bs);
    }
  };

  long long b_degree_bound = 0;  // deg(b) <= this
  for (std::size_t t = 0; t < n_bits; ++t) {
    std::size_t off = n_bits - 1 - t;
    std::size_t cw = (std::size_t(l) >> 6) + 1;  // words holding c_0..c_l
    std::uint64_t acc = 0;
    for (std::size_t wi = 0; wi < cw; ++wi) acc ^= c[wi] & window64(rev, off + 64 * wi);
    if ((std::popcount(acc) & 1) == 0) {
      ++gap;
      continue;
    }
    std::size_t bw = (std::size_t(b_degree_bound) >> 6) + 1;
    if (2 * l <= (long long)t) {
      scratch.assign(c.begin(), c.begin() + long(cw));
      xor_shifted_words(c, b, bw, gap);
      std::fill(b.begin(), b.end(), 0);
      std::copy(scratch.begin(), scratch.end(), b.begin());
      b_degree_bound = l;
      l = (long long)t + 1 - l;
      gap = 1;
    } else {
      xor_shifted_words(c, b, bw, gap);
      ++gap;
    }
  }

  // Connection form c(x) -> characteristic form x^l * c(1/x).
  Poly2 connection;
  for (long long i = 0; i <= l; ++i) {
    if ((c[std::size_t(i) >> 6] >> (i & 63)) & 1) connection.set_coeff(int(i), true);
  }
  BmResult r;
  r.l = l;
  r.feedback = connection.reciprocal(int(l));
  return r;
}

bool lfsr_regenerates(const BinarySequence& bits, long long l, const Poly2& feedback) {
  if (l == 0) return bits.weight() == 0;
  if ((long long)bits.size() < l) return true;
  for (std::size_t i = 0; i + std::size_t(l) < bits.size(); ++i) {
    std::uint8_t acc = 0;
    for (long long j = 0; j < l; ++j) {
      if (feedback.coeff(int(j))) acc ^= bits[i + std::size_t(j)];
    }
    if (acc != bits[i + std::size_t(l)]) return false;
  }
  return true;
}

ComplexityReport linear_complexity_periodic(const BinarySequence& period) {
  if (period.empty()) throw DomainError("complexity of an empty period is undefined");
  const std::size_t L = period.size();

  std::vector<std::uint8_t> doubled(2 * L);
  for (std::size_t i = 0; i < L; ++i) doubled[i] = doubled[i + L] = period[i];
  BmResult bm = berlekamp_massey(BinarySequence(std::move(doubled)));

  // Independent route: l = L - deg gcd(x^L + 1, S(x)).
  Poly2 s_poly;
  for (std::size_t i = 0; i < L; ++i) {
    if (period[i]) s_poly.set_coeff(int(i), true);
  }
  Poly2 xl1 = Poly2::monomial(int(L)) ^ Poly2::one();
  long long oracle_l =
      s_poly.is_zero() ? 0 : (long long)L - poly_gcd(xl1, s_poly).degree();

  if (bm.l != oracle_l) {
    throw OracleDisagreement("complexity mismatch: shortest register " + std::to_string(bm.l) +
                             " vs divisor route " + std::to_string(oracle_l));
  }
  if (bm.l > 0 && bm.feedback.degree() != int(bm.l)) {
    throw OracleDisagreement("feedback degree does not match the register length");
  }

  ComplexityReport rep;
  rep.l = bm.l;
  rep.feedback = bm.feedback;
  rep.length = (long long)L;
  rep.oracle_l = oracle_l;
  return rep;
}

ConjectureResult conjecture_check(const BinarySequence& long_seq, const BinarySequence& column,
                                  int n_cols) {
  if (n_cols < 1) throw DomainError("column count must be positive");
  ConjectureResult res;
  res.n_cols = n_cols;
  res.long_feedback = linear_complexity_periodic(long_seq).feedback;
  res.column_feedback = linear_complexity_periodic(column).feedback;
  res.match = res.long_feedback == res.column_feedback.compose_x_pow(n_cols);
  return res;
}

}  // namespace seqkit
