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

#include "seqkit/shiftseq.hpp"

#include <numeric>
#include <string>

#include "seqkit/errors.hpp"
#include "seqkit/fields.hpp"

namespace seqkit {

namespace {

// Exhaustive pair verification is run at construction only while the scan
// stays below this many slot comparisons; criterion-scale parameters all
// fit, larger families are checked on demand.
constexpr long long kVerifyBudget = 20'000'000;

long long pair_scan_cost(std::size_t members, int n_cols, int row_modulus) {
  long long pairs = (long long)members * (long long)(members + 1) / 2;
  return pairs * n_cols * row_modulus * n_cols;
}

void maybe_verify(ShiftFamily& fam) {
  if (fam.patterns.empty()) return;
  const auto& first = fam.patterns[0];
  if (pair_scan_cost(fam.patterns.size(), first.n_cols, first.row_modulus) > kVerifyBudget) {
    return;
  }
  fam.verified_max_coincidence = family_coincidence_max(fam);
}

}  // namespace

std::string shift_kind_name(ShiftKind kind) {
  switch (kind) {
    case ShiftKind::kMtA: return "mt-a";
    case ShiftKind::kMtB: return "mt-b";
    case ShiftKind::kMtC: return "mt-c";
    case ShiftKind::kKasamiHop: return "kasami-hop";
    case ShiftKind::kNoKumarHop: return "nokumar-hop";
  }
  return "?";
}

ShiftFamily family_a_shifts(long long p) {
  if (p < 5 || !is_prime(p)) {
    throw DomainError("family A requires an odd prime p >= 5");
  }
  PrimeField field(p);
  ShiftFamily fam;
  fam.kind = ShiftKind::kMtA;
  fam.p = p;
  fam.generator = field.g();
  fam.patterns.reserve(std::size_t(p));
  for (long long b = 0; b < p; ++b) {
    ShiftSequence s;
    s.n_cols = int(p - 1);
    s.row_modulus = int(p);
    s.values.reserve(std::size_t(p - 1));
    for (long long j = 0; j < p - 1; ++j) {
      long long gj = field.pow_g(j);
      s.values.push_back(int((b % p * (gj * gj % p) + gj) % p));
    }
    fam.patterns.push_back(std::move(s));
  }
  maybe_verify(fam);
  if (fam.verified_max_coincidence && *fam.verified_max_coincidence > 2) {
    throw InternalError("family A coincidence bound exceeded");
  }
  return fam;
}

ShiftFamily family_b_shifts(long long p) {
  if (p < 3 || !is_prime(p)) throw DomainError("family B requires an odd prime");
  QuadExtField field(p);
  // Base pattern: theta^j = a + b*x; slot j carries a/b mod p, blank at the
  // single power lying in the base field (j = 0).
  std::vector<int> base;
  base.reserve(std::size_t(p + 1));
  QuadElem e{1, 0};
  for (long long j = 0; j <= p; ++j) {
    if (e.b == 0) {
      base.push_back(ShiftSequence::kBlank);
    } else {
      base.push_back(int(e.a * inverse_mod(e.b, p) % p));
    }
    e = field.mul(e, field.theta());
  }
  ShiftFamily fam;
  fam.kind = ShiftKind::kMtB;
  fam.p = p;
  fam.patterns.reserve(std::size_t(p - 1));
  for (long long c = 1; c < p; ++c) {
    ShiftSequence s;
    s.n_cols = int(p + 1);
    s.row_modulus = int(p);
    s.values.reserve(base.size());
    for (int v : base) {
      s.values.push_back(v == ShiftSequence::kBlank ? v : int(c * v % p));
    }
    fam.patterns.push_back(std::move(s));
  }
  maybe_verify(fam);
  if (fam.verified_max_coincidence && *fam.verified_max_coincidence > 2) {
    throw InternalError("family B coincidence bound exceeded");
  }
  return fam;
}

DotGrid family_c_pregrid(int n) {
  if (n < 1 || n > 16) throw DomainError("family C requires n in [1, 16]");
  long long q = (1LL << n) + 1;
  if (!is_prime(q)) {
    throw FermatPrimeRequired("2^" + std::to_string(n) + "+1 = " + std::to_string(q) +
                              " is not prime");
  }
  PrimeField field(q);
  DotGrid g;
  g.rows = (1 << n) - 1;
  g.cols = int(q);
  long long x = 1;
  for (long long e = 0; e < q - 1; ++e) {
    if (e <= (1LL << n) - 2) g.add(int(e), int(x));
    x = x * field.g() % q;
  }
  return g;
}

ShiftFamily family_c_shifts(int n) {
  if (n < 1 || n > 16) throw DomainError("family C requires n in [1, 16]");
  long long q = (1LL << n) + 1;
  if (!is_prime(q)) {
    throw FermatPrimeRequired("2^" + std::to_string(n) + "+1 = " + std::to_string(q) +
                              " is not prime");
  }
  PrimeField field(q);
  int n_cols = (1 << n) - 1;
  ShiftSequence base;
  base.n_cols = n_cols;
  base.row_modulus = int(q);
  base.values.reserve(std::size_t(n_cols));
  for (int k = 0; k < n_cols; ++k) base.values.push_back(int(field.pow_g(k)));

  ShiftFamily fam;
  fam.kind = ShiftKind::kMtC;
  fam.n = n;
  fam.generator = field.g();
  fam.patterns.reserve(std::size_t(n_cols));
  for (int s = 0; s < n_cols; ++s) {
    ShiftSequence pat;
    pat.n_cols = n_cols;
    pat.row_modulus = int(q);
    pat.values.reserve(std::size_t(n_cols));
    for (int k = 0; k < n_cols; ++k) pat.values.push_back(base.values[std::size_t((k + s) % n_cols)]);
    fam.patterns.push_back(std::move(pat));
  }
  // Members are column translates of one another, so only the base pattern's
  // off-peak auto-coincidence is a meaningful bound.
  long long cost = (long long)n_cols * q * n_cols;
  if (cost <= kVerifyBudget) {
    fam.verified_max_coincidence = pattern_auto_coincidence_max(fam.patterns[0]);
    if (*fam.verified_max_coincidence > 2) {
      throw InternalError("family C base coincidence bound exceeded");
    }
  }
  return fam;
}

SequenceFamily mt_sequence_family(const ShiftFamily& shifts, const BinarySequence& column,
                                  std::uint8_t fill) {
  if (shifts.patterns.empty()) throw DomainError("empty shift family");
  int rows = shifts.patterns[0].row_modulus;
  int cols = shifts.patterns[0].n_cols;
  if ((int)column.size() != rows) {
    throw DimensionMismatch("column length must equal the shift family's row modulus");
  }
  if (std::gcd(rows, cols) != 1) {
    throw NotCoprime("row modulus and column count must be coprime to unfold");
  }
  SequenceFamily fam;
  switch (shifts.kind) {
    case ShiftKind::kMtA: fam.kind = FamilyKind::kMtA; break;
    case ShiftKind::kMtB: fam.kind = FamilyKind::kMtB; break;
    case ShiftKind::kMtC: fam.kind = FamilyKind::kMtC; break;
    case ShiftKind::kKasamiHop: fam.kind = FamilyKind::kKasami; break;
    case ShiftKind::kNoKumarHop: fam.kind = FamilyKind::kNoKumar; break;
  }
  fam.params.p = shifts.p;
  fam.params.n = shifts.n;
  fam.params.m = shifts.m;
  fam.params.r = shifts.r;
  fam.members.reserve(shifts.patterns.size());
  for (const auto& pat : shifts.patterns) {
    fam.members.push_back(unfold(substitute_columns(pat, column, fill)));
  }
  return fam;
}

ShiftFamily kasami_hop_family(int m, ShiftSource source, int r) {
  SequenceFamily src =
      source == ShiftSource::kKasami ? kasami_family(m) : no_kumar_family(m, r);
  std::size_t rows = (std::size_t(1) << m) - 1;
  std::size_t cols = (std::size_t(1) << m) + 1;
  std::vector<BinaryArray> arrays;
  arrays.reserve(src.members.size());
  for (const auto& member : src.members) arrays.push_back(fold(member, rows, cols));
  BinarySequence base;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!arrays[0].column(j).is_constant()) {
      base = arrays[0].column(j);
      break;
    }
  }
  if (base.empty()) throw InternalError("source family has no non-constant column");
  ShiftFamily fam;
  fam.kind = source == ShiftSource::kKasami ? ShiftKind::kKasamiHop : ShiftKind::kNoKumarHop;
  fam.m = m;
  fam.r = source == ShiftSource::kKasami ? 1 : r;
  fam.patterns.reserve(arrays.size());
  for (const auto& a : arrays) fam.patterns.push_back(extract_shift_sequence(a, base));
  maybe_verify(fam);
  return fam;
}

HammingMax hop_hamming_max(const HopPattern& a, const HopPattern& b, bool exclude_trivial) {
  if (a.n_cols != b.n_cols || a.row_modulus != b.row_modulus) {
    throw DimensionMismatch("hop patterns differ in slots or frequency modulus");
  }
  int n = a.n_cols, m = a.row_modulus;
  HammingMax best;
  for (int s = 0; s < n; ++s) {
    for (int d = 0; d < m; ++d) {
      if (exclude_trivial && s == 0 && d == 0) continue;
      int count = 0;
      for (int j = 0; j < n; ++j) {
        int av = a.values[std::size_t((j + s) % n)];
        int bv = b.values[std::size_t(j)];
        if (av != ShiftSequence::kBlank && bv != ShiftSequence::kBlank &&
            av % m == (bv + d) % m) {
          ++count;
        }
      }
      if (count > best.count) best = {count, s, d};
    }
  }
  return best;
}

int family_coincidence_max(const ShiftFamily& fam) {
  int best = 0;
  for (std::size_t i = 0; i < fam.patterns.size(); ++i) {
    for (std::size_t j = i; j < fam.patterns.size(); ++j) {
      HammingMax h = hop_hamming_max(fam.patterns[i], fam.patterns[j], i == j);
      if (h.count > best) best = h.count;
    }
  }
  return best;
}

int pattern_auto_coincidence_max(const ShiftSequence& s) {
  return hop_hamming_max(s, s, true).count;
}

}  // namespace seqkit
