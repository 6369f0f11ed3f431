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

#ifndef SEQKIT_SEQGEN_HPP
#define SEQKIT_SEQGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "seqkit/poly2.hpp"
#include "seqkit/sequence.hpp"

namespace seqkit {

enum class FamilyKind {
  kMSeq,
  kLegendre,
  kHall,
  kGold,
  kKasami,
  kNoKumar,
  kGeneralizedNK,
  kMtA,
  kMtB,
  kMtC,
};

std::string family_kind_name(FamilyKind kind);

struct FamilyParams {
  int m = 0;
  int n = 0;
  long long p = 0;
  int r = 0;
  long long decimation = 0;
  std::string column;   // description of a substituted column, if any
  std::string variant;  // e.g. "gold-like" for n = 0 (mod 4)
};

/// A named set of equal-length sequences. Member order is fixed by the
/// construction (parent first, then shift index ascending).
struct SequenceFamily {
  FamilyKind kind;
  FamilyParams params;
  std::vector<BinarySequence> members;

  std::size_t length() const { return members.empty() ? 0 : members[0].size(); }
};

/// Maximal-length LFSR sequence: s_{i+k} = sum_{j<k} c_j s_{i+j} from the
/// modulus coefficients; period 2^k - 1. Default seed is 0...01.
BinarySequence m_sequence(const Poly2& modulus, const BinarySequence& seed);
BinarySequence m_sequence(const Poly2& modulus);
BinarySequence m_sequence(int k);  // built-in primitive polynomial

/// Legendre sequence: s_0 = 0, s_i = 1 iff i is a nonzero quadratic
/// residue mod p.
BinarySequence legendre(long long p);
/// Same, but with s_0 = 1 when p = 3 (mod 4) so the weight is always even
/// and the bipolar sum is -1 (matching an m-sequence column's imbalance).
BinarySequence balanced_legendre(long long p);

/// Hall sextic-residue sequence for p = 4a^2 + 27: ones on the cyclotomic
/// classes C0, C1, C3 numbered by the first primitive root that yields a
/// two-valued autocorrelation.
BinarySequence hall(long long p);

/// Gold family of size 2^n + 1 from a preferred pair (n odd or n = 2 mod 4)
/// or a "gold-like" coprime-decimation pair (n = 0 mod 4, measured
/// correlation reported rather than guaranteed).
SequenceFamily gold_family(int n);

/// Small Kasami set of size 2^m: the parent m-sequence of length 2^{2m}-1
/// plus the arrays obtained by adding every cyclic shift of the detected
/// base column to all columns of the parent array.
SequenceFamily kasami_family(int m);

/// No-Kumar set of size 2^m: the Kasami member arrays with every defined
/// column shift multiplied by r mod 2^m-1 (raising the column constants to
/// the r-th power), then substituted and unfolded. Requires
/// gcd(r, 2^m - 1) = 1; r = 1 reproduces the small Kasami set.
SequenceFamily no_kumar_family(int m, int r);

/// No-Kumar shifts with the short m-sequence column replaced by another
/// pseudonoise column of length 2^m - 1 at identical shifts.
SequenceFamily generalized_nk_family(int m, int r, const BinarySequence& column,
                                     std::uint8_t fill = 0);

}  // namespace seqkit

#endif  // SEQKIT_SEQGEN_HPP
