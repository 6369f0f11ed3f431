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

#ifndef SEQKIT_ANALYSIS_HPP
#define SEQKIT_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "seqkit/arrays.hpp"
#include "seqkit/poly2.hpp"
#include "seqkit/seqgen.hpp"
#include "seqkit/sequence.hpp"

namespace seqkit {

/// Threads used by exhaustive pair/shift scans. 0 restores the default
/// (available parallelism). Results are identical for any setting.
void set_scan_threads(int n);
int scan_threads();

/// Periodic bipolar autocorrelation of s at shift tau; equals size() at 0.
long long autocorrelation(const BinarySequence& s, long long tau);
/// Periodic bipolar cross-correlation of a with shift(b, tau).
long long crosscorrelation(const BinarySequence& a, const BinarySequence& b, long long tau);
/// Two-dimensional periodic cross-correlation of equal-size arrays:
/// sum over cells of a(i, j) * b(i + h, j + v), bipolar, indices cyclic
/// (h applies to rows, v to columns, matching the correlation sums).
long long crosscorrelation_2d(const BinaryArray& a, const BinaryArray& b, long long h,
                              long long v);

struct CorrelationArgmax {
  std::size_t member_a = 0;
  std::size_t member_b = 0;
  long long shift = 0;
};

/// Exhaustive correlation scan over all unordered member pairs and all
/// shifts; self pairs contribute off-peak shifts only. Histogram counts
/// therefore sum to N*(L-1) + C(N,2)*L.
struct CorrelationReport {
  long long peak = 0;              // sequence length
  long long max_offpeak_auto = 0;  // absolute value
  long long max_cross = 0;         // absolute value
  std::map<long long, long long> histogram;
  CorrelationArgmax auto_argmax;
  CorrelationArgmax cross_argmax;
};

CorrelationReport family_correlation_report(const std::vector<BinarySequence>& members);
CorrelationReport family_correlation_report(const SequenceFamily& fam);
/// Same scan through the two-dimensional correlation sums over all (h, v);
/// for coprime foldings it must match the sequence-domain report.
CorrelationReport array_family_correlation_report(const std::vector<BinaryArray>& members);

struct BmResult {
  long long l = 0;
  Poly2 feedback;  // characteristic form: s_{i+l} = sum_{j<l} f_j s_{i+j}
};

/// Shortest LFSR for the given prefix (Berlekamp-Massey over GF(2)).
BmResult berlekamp_massey(const BinarySequence& prefix);

/// True when the LFSR (l, feedback) regenerates bits from its first l terms.
bool lfsr_regenerates(const BinarySequence& bits, long long l, const Poly2& feedback);

struct ComplexityReport {
  long long l = 0;
  Poly2 feedback;
  long long length = 0;
  long long oracle_l = 0;  // L - deg gcd(x^L + 1, S(x)); always equals l
  double normalized() const { return length ? double(l) / double(length) : 0.0; }
};

/// Linear complexity of one full period: Berlekamp-Massey on two
/// concatenated periods, cross-checked against the gcd oracle.
/// Throws OracleDisagreement if the two ever differ.
ComplexityReport linear_complexity_periodic(const BinarySequence& period);

struct ConjectureResult {
  bool match = false;
  int n_cols = 0;
  Poly2 long_feedback;
  Poly2 column_feedback;
};

/// Checks feedback_long(x) == feedback_column(x^{n_cols}).
ConjectureResult conjecture_check(const BinarySequence& long_seq, const BinarySequence& column,
                                  int n_cols);

}  // namespace seqkit

#endif  // SEQKIT_ANALYSIS_HPP
