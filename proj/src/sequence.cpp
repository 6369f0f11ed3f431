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

#include "seqkit/sequence.hpp"

#include <algorithm>

#include "seqkit/errors.hpp"

namespace seqkit {

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

BinarySequence BinarySequence::from_string(std::string_view zeros_ones) {
  std::vector<std::uint8_t> bits;
  bits.reserve(zeros_ones.size());
  for (char c : zeros_ones) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else {
      throw DomainError("sequence text may contain only '0'/'1'");
    }
  }
  return BinarySequence(std::move(bits));
}

std::size_t BinarySequence::weight() const {
  return std::size_t(std::count(bits_.begin(), bits_.end(), std::uint8_t(1)));
}

bool BinarySequence::is_constant() const {
  if (bits_.empty()) return true;
  return std::all_of(bits_.begin(), bits_.end(), [&](std::uint8_t b) { return b == bits_[0]; });
}

std::string BinarySequence::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

BinarySequence shift(const BinarySequence& s, long long tau) {
  if (s.empty()) return s;
  long long L = (long long)s.size();
  long long t = ((tau % L) + L) % L;
  std::vector<std::uint8_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[std::size_t((long long(i) + t) % L)];
  return BinarySequence(std::move(out));
}

BinarySequence decimate(const BinarySequence& s, std::uint64_t n) {
  if (n < 1) throw DomainError("decimation step must be >= 1");
  if (s.empty()) return s;
  std::uint64_t L = s.size();
  std::vector<std::uint8_t> out(s.size());
  for (std::uint64_t i = 0; i < L; ++i) out[i] = s[std::size_t(n % L * i % L)];
  return BinarySequence(std::move(out));
}

BinarySequence operator^(const BinarySequence& a, const BinarySequence& b) {
  if (a.size() != b.size()) throw DimensionMismatch("xor of sequences of different lengths");
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return BinarySequence(std::move(out));
}

BinarySequence complement(const BinarySequence& s) {
  std::vector<std::uint8_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] ^ 1;
  return BinarySequence(std::move(out));
}

bool is_cyclic_shift(const BinarySequence& a, const BinarySequence& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (shift(a, (long long)t) == b) return true;
  }
  return a.empty();
}

}  // namespace seqkit
