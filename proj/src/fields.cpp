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

#include "seqkit/fields.hpp"

#include <array>
#include <numeric>
#include <string>

#include "seqkit/errors.hpp"

namespace seqkit {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
  unsigned __int128 r = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % (unsigned long long)mod;
    b = b * b % (unsigned long long)mod;
    exp >>= 1;
  }
  return (long long)r;
}

long long inverse_mod(long long a, long long p) { return pow_mod(a, p - 2, p); }

std::vector<long long> distinct_prime_factors(long long n) {
  std::vector<long long> fs;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

int primitive_root(long long p) {
  if (p < 3 || !is_prime(p)) throw DomainError("primitive root requires an odd prime");
  auto fs = distinct_prime_factors(p - 1);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : fs) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return int(g);
  }
  throw InternalError("no primitive root found");
}

// Standard low-weight primitive polynomials, degree 2..24; each is
// re-verified by the order check whenever a field is built from it.
const Poly2& default_primitive_poly(int k) {
  static const std::array<std::uint32_t, 25> kBits = {
      0,         0,
      0x7,       // x^2+x+1
      0xB,       // x^3+x+1
      0x13,      // x^4+x+1
      0x25,      // x^5+x^2+1
      0x43,      // x^6+x+1
      0x83,      // x^7+x+1
      0x11D,     // x^8+x^4+x^3+x^2+1
      0x211,     // x^9+x^4+1
      0x409,     // x^10+x^3+1
      0x805,     // x^11+x^2+1
      0x1053,    // x^12+x^6+x^4+x+1
      0x201B,    // x^13+x^4+x^3+x+1
      0x4443,    // x^14+x^10+x^6+x+1
      0x8003,    // x^15+x+1
      0x1100B,   // x^16+x^12+x^3+x+1
      0x20009,   // x^17+x^3+1
      0x40081,   // x^18+x^7+1
      0x80027,   // x^19+x^5+x^2+x+1
      0x100009,  // x^20+x^3+1
      0x200005,  // x^21+x^2+1
      0x400003,  // x^22+x+1
      0x800021,  // x^23+x^5+1
      0x1000087  // x^24+x^7+x^2+x+1
  };
  static std::array<Poly2, 25> polys = [] {
    std::array<Poly2, 25> out;
    for (int d = 2; d <= 24; ++d) {
      Poly2 p;
      for (int i = 0; i <= d; ++i) {
        if ((kBits[std::size_t(d)] >> i) & 1u) p.set_coeff(i, true);
      }
      out[std::size_t(d)] = p;
    }
    return out;
  }();
  if (k < 2 || k > 24) throw DomainError("no built-in primitive polynomial for degree " +
                                         std::to_string(k));
  return polys[std::size_t(k)];
}

BinaryField::BinaryField(int k) : BinaryField(k, default_primitive_poly(k)) {}

BinaryField::BinaryField(int k, const Poly2& modulus) : k_(k), modulus_(modulus) {
  if (k < 2 || k > 24) throw DomainError("field degree must be in [2, 24]");
  if (modulus.degree() != k) throw DomainError("modulus degree does not match field degree");
  order_ = (std::uint32_t(1) << k) - 1;
  build();
}

void BinaryField::build() {
  if (!modulus_.coeff(0)) {
    throw NonPrimitiveModulus("modulus " + modulus_.to_human() + " is divisible by x");
  }
  std::uint32_t mod_bits = 0;
  for (int i = 0; i <= k_; ++i) {
    if (modulus_.coeff(i)) mod_bits |= std::uint32_t(1) << i;
  }
  exp_.assign(order_, 0);
  log_.assign(std::size_t(order_) + 1, 0);
  std::vector<bool> seen(std::size_t(order_) + 1, false);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (x == 1 && i > 0) {
      throw NonPrimitiveModulus("modulus " + modulus_.to_human() + " has a root of order " +
                                std::to_string(i));
    }
    if (x > order_ || seen[x]) {
      throw NonPrimitiveModulus("modulus " + modulus_.to_human() + " is not primitive");
    }
    seen[x] = true;
    exp_[i] = x;
    log_[x] = i;
    x <<= 1;
    if (x >> k_) x ^= mod_bits;
  }
  if (x != 1) {
    throw NonPrimitiveModulus("modulus " + modulus_.to_human() + " is not primitive");
  }
}

std::uint32_t BinaryField::log(Elem x) const {
  if (x == 0) throw LogOfZero{};
  return log_[x];
}

BinaryField::Elem BinaryField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) + log_[b]) % order_];
}

BinaryField::Elem BinaryField::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return 0;
  return exp_[std::uint64_t(log_[a]) % order_ * (e % order_) % order_];
}

BinaryField::Elem BinaryField::inverse(Elem a) const {
  if (a == 0) throw LogOfZero{};
  return exp_[(order_ - log_[a]) % order_];
}

BinaryField::Elem BinaryField::trace_to_subfield(Elem x, int sub_k) const {
  if (sub_k < 1 || k_ % sub_k != 0) {
    throw DomainError("trace target degree " + std::to_string(sub_k) + " does not divide " +
                      std::to_string(k_));
  }
  Elem acc = 0, y = x;
  for (int i = 0; i < k_ / sub_k; ++i) {
    acc ^= y;
    for (int s = 0; s < sub_k; ++s) y = mul(y, y);
  }
  return acc;
}

BinaryField::Elem BinaryField::subfield_absolute_trace(Elem x, int sub_k) const {
  Elem acc = 0, y = x;
  for (int i = 0; i < sub_k; ++i) {
    acc ^= y;
    y = mul(y, y);
  }
  return acc;
}

PrimeField::PrimeField(long long p) : p_(p), g_(primitive_root(p)) {}

long long PrimeField::pow_g(long long e) const {
  long long m = p_ - 1;
  return pow_mod(g_, ((e % m) + m) % m, p_);
}

bool PrimeField::is_quadratic_residue(long long x) const {
  long long r = ((x % p_) + p_) % p_;
  if (r == 0) return false;
  return pow_mod(r, (p_ - 1) / 2, p_) == 1;
}

QuadExtField::QuadExtField(long long p) : p_(p) {
  if (p < 3 || !is_prime(p)) throw DomainError("quadratic extension requires an odd prime");
  t_ = 0;
  for (long long c = 1; c < p; ++c) {
    if (pow_mod(c, (p - 1) / 2, p) != 1) {
      t_ = c;
      break;
    }
  }
  if (t_ == 0) throw InternalError("no quadratic non-residue found");
  long long order = p * p - 1;
  auto fs = distinct_prime_factors(order);
  for (long long a = 0; a < p; ++a) {
    for (long long b = 1; b < p; ++b) {
      QuadElem cand{a, b};
      bool primitive = true;
      for (long long q : fs) {
        if (is_one(pow(cand, order / q))) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        theta_ = cand;
        return;
      }
    }
  }
  throw InternalError("no primitive element found in GF(p^2)");
}

QuadElem QuadExtField::mul(QuadElem u, QuadElem v) const {
  // (a1 + b1 x)(a2 + b2 x) mod (x^2 - t)
  unsigned __int128 a =
      (unsigned __int128)(unsigned long long)(u.a) * (unsigned long long)(v.a) +
      (unsigned __int128)(unsigned long long)(t_) * (unsigned long long)(u.b) %
          (unsigned long long)p_ * (unsigned long long)(v.b);
  unsigned __int128 b =
      (unsigned __int128)(unsigned long long)(u.a) * (unsigned long long)(v.b) +
      (unsigned __int128)(unsigned long long)(u.b) * (unsigned long long)(v.a);
  return {(long long)(a % (unsigned long long)p_), (long long)(b % (unsigned long long)p_)};
}

QuadElem QuadExtField::pow(QuadElem u, long long e) const {
  QuadElem r{1, 0};
  long long order = p_ * p_ - 1;
  e = ((e % order) + order) % order;
  while (e > 0) {
    if (e & 1) r = mul(r, u);
    u = mul(u, u);
    e >>= 1;
  }
  return r;
}

}  // namespace seqkit
