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

#include "seqkit/analysis.hpp"

#include <atomic>
#include <bit>
#include <future>
#include <thread>

#include "seqkit/errors.hpp"

namespace seqkit {

namespace {

std::atomic<int> g_scan_threads{0};

int effective_threads() {
  int n = g_scan_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// Bits packed LSB-first, padded with one extra zero word for window reads.
struct Packed {
  std::size_t n = 0;
  std::vector<std::uint64_t> w;
};

Packed pack(const BinarySequence& s, bool doubled) {
  Packed p;
  p.n = s.size();
  std::size_t total = doubled ? 2 * s.size() : s.size();
  p.w.assign(total / 64 + 2, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i]) continue;
    p.w[i >> 6] |= std::uint64_t(1) << (i & 63);
    if (doubled) p.w[(i + s.size()) >> 6] |= std::uint64_t(1) << ((i + s.size()) & 63);
  }
  return p;
}

inline std::uint64_t window64(const std::vector<std::uint64_t>& w, std::size_t pos) {
  std::size_t q = pos >> 6;
  unsigned r = unsigned(pos & 63);
  std::uint64_t lo = w[q] >> r;
  if (r != 0) lo |= w[q + 1] << (64 - r);
  return lo;
}

// theta = L - 2 * wt(a ^ shift(b, tau)) from a packed a and a doubled
// packed b.
long long packed_corr(const Packed& a, const Packed& b2, std::size_t tau) {
  std::size_t L = a.n;
  std::size_t full = L / 64, rem = L % 64;
  long long wt = 0;
  for (std::size_t wi = 0; wi < full; ++wi) {
    wt += std::popcount(a.w[wi] ^ window64(b2.w, tau + 64 * wi));
  }
  if (rem != 0) {
    std::uint64_t mask = (std::uint64_t(1) << rem) - 1;
    wt += std::popcount((a.w[full] ^ window64(b2.w, tau + 64 * full)) & mask);
  }
  return (long long)L - 2 * wt;
}

struct Partial {
  long long max_auto = 0, max_cross = 0;
  bool has_auto = false, has_cross = false;
  CorrelationArgmax auto_arg, cross_arg;
  std::map<long long, long long> hist;
};

}  // namespace

void set_scan_threads(int n) { g_scan_threads.store(n < 0 ? 0 : n); }
int scan_threads() { return effective_threads(); }

long long autocorrelation(const BinarySequence& s, long long tau) {
  return crosscorrelation(s, s, tau);
}

long long crosscorrelation(const BinarySequence& a, const BinarySequence& b, long long tau) {
  if (a.size() != b.size()) throw DimensionMismatch("correlation of different lengths");
  if (a.empty()) return 0;
  long long L = (long long)a.size();
  long long t = ((tau % L) + L) % L;
  long long acc = 0;
  for (long long i = 0; i < L; ++i) {
    acc += a.bipolar(std::size_t(i)) * b.bipolar(std::size_t((i + t) % L));
  }
  return acc;
}

long long crosscorrelation_2d(const BinaryArray& a, const BinaryArray& b, long long h,
                              long long v) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("correlation of different array dimensions");
  }
  long long R = (long long)a.rows(), C = (long long)a.cols();
  long long dh = ((h % R) + R) % R;  // h advances the row index in the sums
  long long dv = ((v % C) + C) % C;
  long long acc = 0;
  for (long long i = 0; i < R; ++i) {
    for (long long j = 0; j < C; ++j) {
      acc += a.bipolar(std::size_t(i), std::size_t(j)) *
             b.bipolar(std::size_t((i + dh) % R), std::size_t((j + dv) % C));
    }
  }
  return acc;
}

CorrelationReport family_correlation_report(const std::vector<BinarySequence>& members) {
  if (members.empty()) throw DomainError("correlation report of an empty family");
  std::size_t L = members[0].size();
  for (const auto& m : members) {
    if (m.size() != L) throw DimensionMismatch("family members differ in length");
  }

  std::vector<Packed> packed, packed2;
  packed.reserve(members.size());
  packed2.reserve(members.size());
  for (const auto& m : members) {
    packed.push_back(pack(m, false));
    packed2.push_back(pack(m, true));
  }

  struct PairRange {
    std::size_t i, j;
  };
  std::vector<PairRange> pairs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) pairs.push_back({i, j});
  }

  auto scan_chunk = [&](std::size_t begin, std::size_t end) {
    Partial part;
    for (std::size_t pi = begin; pi < end; ++pi) {
      auto [i, j] = pairs[pi];
      std::size_t tau0 = (i == j) ? 1 : 0;
      for (std::size_t tau = tau0; tau < L; ++tau) {
        long long v = packed_corr(packed[i], packed2[j], tau);
        ++part.hist[v];
        long long av = v < 0 ? -v : v;
        if (i == j) {
          if (!part.has_auto || av > part.max_auto) {
            part.max_auto = av;
            part.auto_arg = {i, j, (long long)tau};
            part.has_auto = true;
          }
        } else if (!part.has_cross || av > part.max_cross) {
          part.max_cross = av;
          part.cross_arg = {i, j, (long long)tau};
          part.has_cross = true;
        }
      }
    }
    return part;
  };

  int threads = effective_threads();
  std::size_t chunks = std::min<std::size_t>(std::size_t(threads), pairs.size());
  std::vector<Partial> parts;
  if (chunks <= 1) {
    parts.push_back(scan_chunk(0, pairs.size()));
  } else {
    std::vector<std::future<Partial>> futures;
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t begin = pairs.size() * c / chunks;
      std::size_t end = pairs.size() * (c + 1) / chunks;
      futures.push_back(std::async(std::launch::async, scan_chunk, begin, end));
    }
    for (auto& f : futures) parts.push_back(f.get());
  }

  CorrelationReport rep;
  rep.peak = (long long)L;
  bool has_auto = false, has_cross = false;
  for (const auto& part : parts) {  // merged in chunk order: deterministic
    for (auto [v, c] : part.hist) rep.histogram[v] += c;
    if (part.has_auto && (!has_auto || part.max_auto > rep.max_offpeak_auto)) {
      rep.max_offpeak_auto = part.max_auto;
      rep.auto_argmax = part.auto_arg;
      has_auto = true;
    }
    if (part.has_cross && (!has_cross || part.max_cross > rep.max_cross)) {
      rep.max_cross = part.max_cross;
      rep.cross_argmax = part.cross_arg;
      has_cross = true;
    }
  }
  return rep;
}

CorrelationReport family_correlation_report(const SequenceFamily& fam) {
  return family_correlation_report(fam.members);
}

CorrelationReport array_family_correlation_report(const std::vector<BinaryArray>& members) {
  if (members.empty()) throw DomainError("correlation report of an empty family");
  std::size_t R = members[0].rows(), C = members[0].cols();
  for (const auto& m : members) {
    if (m.rows() != R || m.cols() != C) {
      throw DimensionMismatch("family members differ in dimensions");
    }
  }
  CorrelationReport rep;
  rep.peak = (long long)(R * C);
  bool has_auto = false, has_cross = false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      for (std::size_t h = 0; h < R; ++h) {
        for (std::size_t v = 0; v < C; ++v) {
          if (i == j && h == 0 && v == 0) continue;
          long long val = crosscorrelation_2d(members[i], members[j], (long long)h, (long long)v);
          ++rep.histogram[val];
          long long av = val < 0 ? -val : val;
          if (i == j) {
            if (!has_auto || av > rep.max_offpeak_auto) {
              rep.max_offpeak_auto = av;
              rep.auto_argmax = {i, j, (long long)(h * C + v)};
              has_auto = true;
            }
          } else if (!has_cross || av > rep.max_cross) {
            rep.max_cross = av;
            rep.cross_argmax = {i, j, (long long)(h * C + v)};
            has_cross = true;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace seqkit
