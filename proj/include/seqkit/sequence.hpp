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

#ifndef SEQKIT_SEQUENCE_HPP
#define SEQKIT_SEQUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqkit {

/// Periodic binary sequence over GF(2). The bipolar view maps bit s to
/// (-1)^s, so correlations are integer dot products.
class BinarySequence {
 public:
  BinarySequence() = default;
  explicit BinarySequence(std::vector<std::uint8_t> bits);
  explicit BinarySequence(std::size_t n) : bits_(n, 0) {}
  static BinarySequence from_string(std::string_view zeros_ones);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, std::uint8_t v) { bits_[i] = v ? 1 : 0; }
  int bipolar(std::size_t i) const { return 1 - 2 * int(bits_[i]); }

  std::size_t weight() const;
  bool is_constant() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const;
  bool operator==(const BinarySequence&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Left cyclic shift by tau places: result[i] = s[(i + tau) mod L].
BinarySequence shift(const BinarySequence& s, long long tau);
/// n-th decimation: result[i] = s[(n*i) mod L], same length. n >= 1.
BinarySequence decimate(const BinarySequence& s, std::uint64_t n);
BinarySequence operator^(const BinarySequence& a, const BinarySequence& b);
BinarySequence complement(const BinarySequence& s);
/// True when b is shift(a, tau) for some tau.
bool is_cyclic_shift(const BinarySequence& a, const BinarySequence& b);

}  // namespace seqkit

#endif  // SEQKIT_SEQUENCE_HPP
