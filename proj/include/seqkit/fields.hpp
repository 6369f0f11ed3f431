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

#ifndef SEQKIT_FIELDS_HPP
#define SEQKIT_FIELDS_HPP

#include <cstdint>
#include <vector>

#include "seqkit/poly2.hpp"

namespace seqkit {

bool is_prime(long long n);
std::vector<long long> distinct_prime_factors(long long n);
/// Smallest primitive root modulo an odd prime p.
int primitive_root(long long p);
long long pow_mod(long long base, long long exp, long long mod);
long long inverse_mod(long long a, long long p);

/// GF(2^k) in polynomial basis with full exp/log tables, 2 <= k <= 24.
/// Elements are packed coefficient vectors in a uint32. Immutable after
/// construction and safe to share across threads.
class BinaryField {
 public:
  using Elem = std::uint32_t;

  explicit BinaryField(int k);  // built-in primitive modulus for this degree
  BinaryField(int k, const Poly2& modulus);

  int k() const { return k_; }
  std::uint32_t order() const { return order_; }  // 2^k - 1
  const Poly2& modulus() const { return modulus_; }

  Elem exp(std::uint64_t i) const { return exp_[i % order_]; }
  std::uint32_t log(Elem x) const;  // throws LogOfZero on x == 0

  static Elem add(Elem a, Elem b) { return a ^ b; }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inverse(Elem a) const;

  /// tr^k_{sub_k}(x) = sum_{i<k/sub_k} x^{2^{sub_k*i}}; sub_k must divide k.
  Elem trace_to_subfield(Elem x, int sub_k) const;
  /// Absolute trace of an element of the 2^{sub_k} subfield down to GF(2):
  /// sum_{i<sub_k} x^{2^i}. x must lie in that subfield; result is 0 or 1.
  Elem subfield_absolute_trace(Elem x, int sub_k) const;

 private:
  int k_ = 0;
  std::uint32_t order_ = 0;
  Poly2 modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  void build();
};

/// One primitive polynomial per degree 2..24 (standard low-weight choices);
/// verified primitive when a BinaryField is built from it.
const Poly2& default_primitive_poly(int k);

/// Z_p with its smallest primitive root.
class PrimeField {
 public:
  explicit PrimeField(long long p);  // p must be an odd prime
  long long p() const { return p_; }
  int g() const { return g_; }
  long long pow_g(long long e) const;  // g^e mod p
  bool is_quadratic_residue(long long x) const;

 private:
  long long p_;
  int g_;
};

/// Element of GF(p^2) represented as a + b*x modulo x^2 - t.
struct QuadElem {
  long long a = 0;
  long long b = 0;
  bool operator==(const QuadElem&) const = default;
};

/// GF(p^2) as pairs modulo x^2 - t with t the smallest quadratic non-residue;
/// theta is a primitive element found by bounded search over a + b*x.
class QuadExtField {
 public:
  explicit QuadExtField(long long p);

  long long p() const { return p_; }
  long long t() const { return t_; }
  QuadElem theta() const { return theta_; }

  QuadElem mul(QuadElem u, QuadElem v) const;
  QuadElem pow(QuadElem u, long long e) const;
  static bool is_one(QuadElem u) { return u.a == 1 && u.b == 0; }

 private:
  long long p_;
  long long t_;
  QuadElem theta_;
};

}  // namespace seqkit

#endif  // SEQKIT_FIELDS_HPP
