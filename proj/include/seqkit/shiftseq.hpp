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

#ifndef SEQKIT_SHIFTSEQ_HPP
#define SEQKIT_SHIFTSEQ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqkit/arrays.hpp"
#include "seqkit/seqgen.hpp"

namespace seqkit {

/// A shift sequence used as a frequency-hop pattern: slot j transmits
/// frequency values[j], or nothing where blank.
using HopPattern = ShiftSequence;

enum class ShiftKind { kMtA, kMtB, kMtC, kKasamiHop, kNoKumarHop };

std::string shift_kind_name(ShiftKind kind);

/// A family of shift sequences sharing (n_cols, row_modulus).
/// verified_max_coincidence is filled when the constructor's exhaustive
/// scan fits the work budget (all desk-scale parameters do); larger
/// families use family_coincidence_max explicitly.
struct ShiftFamily {
  ShiftKind kind;
  long long p = 0;
  int m = 0;
  int n = 0;
  int r = 0;
  int generator = 0;  // primitive root used, when applicable
  std::vector<ShiftSequence> patterns;
  std::optional<int> verified_max_coincidence;
};

/// Family A: exponential quadratic shift sequences of length p-1 modulo p,
/// f_b(j) = b*g^{2j} + g^j with b in Z_p; p members, no blanks.
ShiftFamily family_a_shifts(long long p);

/// Family B: ratio map of theta^j over GF(p^2) (blank at the one power
/// lying in the base field) scaled by c in Z_p*; p-1 members of length p+1.
ShiftFamily family_b_shifts(long long p);

/// Family C: base h(k) = g^k mod q for q = 2^n + 1 prime (g the smallest
/// primitive root), length 2^n - 1, values mod q, no blanks; the family is
/// the 2^n - 1 cyclic column-translates of the base.
ShiftFamily family_c_shifts(int n);

/// The discrete-log form behind Family C: dot (log_g j, j) for j in Z_q*,
/// kept only when log_g(j) <= 2^n - 2. One dot per row, two blank columns.
DotGrid family_c_pregrid(int n);

/// Substitute a column into every pattern and unfold; lengths p(p-1),
/// p(p+1) and (2^n+1)(2^n-1) for families A, B, C.
SequenceFamily mt_sequence_family(const ShiftFamily& shifts, const BinarySequence& column,
                                  std::uint8_t fill = 0);

enum class ShiftSource { kKasami, kNoKumar };

/// Converse construction: fold each member of the source family and
/// extract its shift sequence against the detected base column, giving
/// 2^m hop patterns with 2^m+1 slots over 2^m-1 frequencies.
ShiftFamily kasami_hop_family(int m, ShiftSource source, int r = 1);

struct HammingMax {
  int count = -1;
  int time_shift = 0;
  int freq_shift = 0;
};

/// Doubly periodic Hamming coincidence: max over time shift s and
/// frequency offset d of the number of slots where both patterns are
/// defined and a[(j+s) mod n] = b[j] + d (mod m). Blanks never match.
/// For a self scan with exclude_trivial, (s, d) = (0, 0) is skipped.
HammingMax hop_hamming_max(const HopPattern& a, const HopPattern& b, bool exclude_trivial);

/// Max coincidence over all unordered member pairs (self pairs off-peak).
int family_coincidence_max(const ShiftFamily& fam);
/// Off-peak auto-coincidence of a single pattern.
int pattern_auto_coincidence_max(const ShiftSequence& s);

}  // namespace seqkit

#endif  // SEQKIT_SHIFTSEQ_HPP
