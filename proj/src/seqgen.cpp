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

#include "seqkit/seqgen.hpp"

#include <numeric>
#include <string>

#include "seqkit/arrays.hpp"
#include "seqkit/errors.hpp"
#include "seqkit/fields.hpp"

namespace seqkit {

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kMSeq: return "mseq";
    case FamilyKind::kLegendre: return "legendre";
    case FamilyKind::kHall: return "hall";
    case FamilyKind::kGold: return "gold";
    case FamilyKind::kKasami: return "kasami";
    case FamilyKind::kNoKumar: return "nokumar";
    case FamilyKind::kGeneralizedNK: return "gnk";
    case FamilyKind::kMtA: return "mt-a";
    case FamilyKind::kMtB: return "mt-b";
    case FamilyKind::kMtC: return "mt-c";
  }
  return "?";
}

BinarySequence m_sequence(const Poly2& modulus, const BinarySequence& seed) {
  int k = modulus.degree();
  if (k < 2) throw DomainError("modulus degree must be at least 2");
  BinaryField field(k, modulus);  // validates primitivity
  if (seed.size() != std::size_t(k)) throw DomainError("seed length must equal the degree");
  if (seed.weight() == 0) throw DomainError("seed must be nonzero");
  std::size_t L = (std::size_t(1) << k) - 1;
  std::vector<std::uint8_t> s(L);
  for (int i = 0; i < k; ++i) s[std::size_t(i)] = seed[std::size_t(i)];
  for (std::size_t i = 0; i + std::size_t(k) < L; ++i) {
    std::uint8_t next = 0;
    for (int j = 0; j < k; ++j) {
      if (modulus.coeff(j)) next ^= s[i + std::size_t(j)];
    }
    s[i + std::size_t(k)] = next;
  }
  return BinarySequence(std::move(s));
}

BinarySequence m_sequence(const Poly2& modulus) {
  int k = modulus.degree();
  if (k < 2) throw DomainError("modulus degree must be at least 2");
  BinarySequence seed(std::size_t(k));
  seed.set(std::size_t(k) - 1, 1);
  return m_sequence(modulus, seed);
}

BinarySequence m_sequence(int k) { return m_sequence(default_primitive_poly(k)); }

BinarySequence legendre(long long p) {
  if (p < 3 || !is_prime(p)) throw DomainError("Legendre sequence requires an odd prime");
  std::vector<std::uint8_t> bits(std::size_t(p), 0);
  for (long long i = 1; i < p; ++i) {
    if (pow_mod(i, (p - 1) / 2, p) == 1) bits[std::size_t(i)] = 1;
  }
  return BinarySequence(std::move(bits));
}

BinarySequence balanced_legendre(long long p) {
  BinarySequence s = legendre(p);
  if (p % 4 == 3) s.set(0, 1);
  return s;
}

BinarySequence hall(long long p) {
  bool hall_prime = false;
  for (long long a = 0; 4 * a * a + 27 <= p; ++a) {
    if (4 * a * a + 27 == p) hall_prime = true;
  }
  if (!hall_prime || !is_prime(p)) {
    throw HallNotDefined(std::to_string(p) + " is not a prime of the form 4a^2+27");
  }
  // Sextic classes depend on the primitive root; take the first root for
  // which C0 u C1 u C3 has two-valued autocorrelation.
  auto factors = distinct_prime_factors(p - 1);
  for (long long g = 2; g < p; ++g) {
    bool primitive = true;
    for (long long q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    std::vector<std::uint8_t> bits(std::size_t(p), 0);
    long long x = 1;
    for (long long t = 0; t < p - 1; ++t) {
      long long cls = t % 6;
      if (cls == 0 || cls == 1 || cls == 3) bits[std::size_t(x)] = 1;
      x = x * g % p;
    }
    BinarySequence s(bits);
    bool pn = true;
    for (long long tau = 1; tau < p && pn; ++tau) {
      long long acc = 0;
      for (long long i = 0; i < p; ++i) {
        acc += s.bipolar(std::size_t(i)) * s.bipolar(std::size_t((i + tau) % p));
      }
      pn = (acc == -1);
    }
    if (pn) return s;
  }
  throw InternalError("no Hall difference set found for p = " + std::to_string(p));
}

namespace {

// First column of the folded parent that is not constant.
std::size_t detect_base_column(const BinaryArray& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!a.column(j).is_constant()) return j;
  }
  throw InternalError("array has no non-constant column");
}

struct KasamiParts {
  BinaryArray parent_array;
  BinarySequence base;
  std::vector<ShiftSequence> member_shifts;  // parent first, then k ascending
};

KasamiParts kasami_parts(int m) {
  if (m < 2 || m > 8) throw DomainError("kasami parameter m must be in [2, 8]");
  std::size_t rows = (std::size_t(1) << m) - 1;
  std::size_t cols = (std::size_t(1) << m) + 1;
  BinarySequence parent = m_sequence(2 * m);
  BinaryArray a = fold(parent, rows, cols);
  BinarySequence base = a.column(detect_base_column(a));
  KasamiParts parts{a, base, {}};
  parts.member_shifts.push_back(extract_shift_sequence(a, base));
  for (std::size_t k = 0; k < rows; ++k) {
    BinarySequence add = shift(base, (long long)k);
    BinaryArray member(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) member.set(i, j, a.at(i, j) ^ add[i]);
    }
    parts.member_shifts.push_back(extract_shift_sequence(member, base));
  }
  return parts;
}

}  // namespace

SequenceFamily kasami_family(int m) {
  KasamiParts parts = kasami_parts(m);
  SequenceFamily fam;
  fam.kind = FamilyKind::kKasami;
  fam.params.m = m;
  fam.members.reserve(parts.member_shifts.size());
  for (const auto& sh : parts.member_shifts) {
    fam.members.push_back(unfold(substitute_columns(sh, parts.base, 0)));
  }
  return fam;
}

SequenceFamily no_kumar_family(int m, int r) {
  if (m < 2 || m > 8) throw DomainError("no-kumar parameter m must be in [2, 8]");
  int order = (1 << m) - 1;
  if (std::gcd(r, order) != 1) {
    throw GcdNotOne("exponent r = " + std::to_string(r) + " shares a factor with " +
                    std::to_string(order));
  }
  KasamiParts parts = kasami_parts(m);
  SequenceFamily fam;
  fam.kind = FamilyKind::kNoKumar;
  fam.params.m = m;
  fam.params.r = r;
  fam.members.reserve(parts.member_shifts.size());
  for (auto sh : parts.member_shifts) {
    // Exponentiation step: raising the column constants to the r-th power
    // multiplies every defined shift by r.
    for (auto& v : sh.values) {
      if (v != ShiftSequence::kBlank) v = int((long long)v * r % order);
    }
    fam.members.push_back(unfold(substitute_columns(sh, parts.base, 0)));
  }
  return fam;
}

SequenceFamily generalized_nk_family(int m, int r, const BinarySequence& column,
                                     std::uint8_t fill) {
  if (m < 2 || m > 8) throw DomainError("parameter m must be in [2, 8]");
  int order = (1 << m) - 1;
  if (std::gcd(r, order) != 1) {
    throw GcdNotOne("exponent r = " + std::to_string(r) + " shares a factor with " +
                    std::to_string(order));
  }
  if ((int)column.size() != order) {
    throw DimensionMismatch("substituted column length must be 2^m - 1");
  }
  KasamiParts parts = kasami_parts(m);
  SequenceFamily fam;
  fam.kind = FamilyKind::kGeneralizedNK;
  fam.params.m = m;
  fam.params.r = r;
  fam.members.reserve(parts.member_shifts.size());
  for (auto sh : parts.member_shifts) {
    for (auto& v : sh.values) {
      if (v != ShiftSequence::kBlank) v = int((long long)v * r % order);
    }
    fam.members.push_back(unfold(substitute_columns(sh, column, fill)));
  }
  return fam;
}

SequenceFamily gold_family(int n) {
  if (n < 3) throw DomainError("gold parameter n must be at least 3");
  std::size_t L = (std::size_t(1) << n) - 1;
  BinarySequence u = m_sequence(n);
  long long d;
  SequenceFamily fam;
  fam.kind = FamilyKind::kGold;
  fam.params.n = n;
  if (n % 2 == 1) {
    d = 3;  // 2^1 + 1, preferred pair
  } else if (n % 4 == 2) {
    d = 5;  // 2^2 + 1, preferred pair
  } else {
    // No preferred pair exists; take the smallest odd decimation coprime to
    // 2^n - 1 outside the cyclotomic coset of 1.
    std::vector<bool> coset1(L, false);
    for (int e = 0; e < n; ++e) coset1[(std::size_t(1) << e) % L] = true;
    d = 3;
    while (std::gcd((std::size_t)d, L) != 1 || coset1[std::size_t(d)]) d += 2;
    fam.params.variant = "gold-like";
  }
  fam.params.decimation = d;
  BinarySequence v = decimate(u, (std::uint64_t)d);
  fam.members.reserve(L + 2);
  fam.members.push_back(u);
  fam.members.push_back(v);
  for (std::size_t tau = 0; tau < L; ++tau) {
    fam.members.push_back(u ^ shift(v, (long long)tau));
  }
  return fam;
}

}  // namespace seqkit
