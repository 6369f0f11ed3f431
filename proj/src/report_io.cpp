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

#include "seqkit/report_io.hpp"

#include <map>
#include <sstream>

#include "seqkit/errors.hpp"

namespace seqkit {

namespace {

OrderedJson params_json(const FamilyParams& p) {
  OrderedJson j = OrderedJson::object();
  if (p.m) j["m"] = p.m;
  if (p.n) j["n"] = p.n;
  if (p.p) j["p"] = p.p;
  if (p.r) j["r"] = p.r;
  if (p.decimation) j["decimation"] = p.decimation;
  if (!p.column.empty()) j["column"] = p.column;
  if (!p.variant.empty()) j["variant"] = p.variant;
  return j;
}

std::map<std::string, std::string> parse_header(std::string_view line) {
  std::map<std::string, std::string> kv;
  std::istringstream is{std::string(line.substr(1))};  // skip '#'
  std::string token;
  while (is >> token) {
    auto eq = token.find('=');
    if (eq != std::string::npos) kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return kv;
}

FamilyKind kind_from_name(const std::string& name) {
  for (FamilyKind k :
       {FamilyKind::kMSeq, FamilyKind::kLegendre, FamilyKind::kHall, FamilyKind::kGold,
        FamilyKind::kKasami, FamilyKind::kNoKumar, FamilyKind::kGeneralizedNK, FamilyKind::kMtA,
        FamilyKind::kMtB, FamilyKind::kMtC}) {
    if (family_kind_name(k) == name) return k;
  }
  throw DomainError("unknown family kind: " + name);
}

}  // namespace

OrderedJson correlation_report_json(const CorrelationReport& report) {
  OrderedJson j = OrderedJson::object();
  j["peak"] = report.peak;
  j["max_offpeak_auto"] = report.max_offpeak_auto;
  j["max_cross"] = report.max_cross;
  OrderedJson hist = OrderedJson::object();
  for (auto [v, c] : report.histogram) hist[std::to_string(v)] = c;
  j["histogram"] = hist;
  j["argmax_auto"] = {{"member", report.auto_argmax.member_a}, {"shift", report.auto_argmax.shift}};
  j["argmax_cross"] = {{"member_a", report.cross_argmax.member_a},
                       {"member_b", report.cross_argmax.member_b},
                       {"shift", report.cross_argmax.shift}};
  return j;
}

OrderedJson complexity_report_json(const ComplexityReport& report) {
  OrderedJson j = OrderedJson::object();
  j["l"] = report.l;
  j["length"] = report.length;
  j["normalized"] = report.normalized();
  j["oracle_l"] = report.oracle_l;
  j["feedback_polynomial"] = {{"bits", report.feedback.to_bits()},
                              {"human", report.feedback.to_human()}};
  return j;
}

OrderedJson family_report_json(const SequenceFamily& fam, const CorrelationReport& corr,
                               const std::vector<ComplexityReport>& complexities) {
  OrderedJson j = OrderedJson::object();
  j["kind"] = family_kind_name(fam.kind);
  j["params"] = params_json(fam.params);
  j["members"] = fam.members.size();
  j["length"] = fam.length();
  j["correlation"] = correlation_report_json(corr);
  if (!complexities.empty()) {
    long long max_l = 0;
    std::size_t arg = 0;
    OrderedJson per = OrderedJson::array();
    for (std::size_t i = 0; i < complexities.size(); ++i) {
      per.push_back(complexities[i].l);
      if (complexities[i].l > max_l) {
        max_l = complexities[i].l;
        arg = i;
      }
    }
    OrderedJson c = complexity_report_json(complexities[arg]);
    c["per_member_l"] = per;
    j["complexity"] = c;
  }
  return j;
}

std::string family_to_text(const SequenceFamily& fam, std::string_view stamp) {
  std::ostringstream os;
  if (!stamp.empty()) os << "# generated " << stamp << "\n";
  os << "# kind=" << family_kind_name(fam.kind);
  if (fam.params.m) os << " m=" << fam.params.m;
  if (fam.params.n) os << " n=" << fam.params.n;
  if (fam.params.p) os << " p=" << fam.params.p;
  if (fam.params.r) os << " r=" << fam.params.r;
  if (fam.params.decimation) os << " decimation=" << fam.params.decimation;
  if (!fam.params.column.empty()) os << " column=" << fam.params.column;
  if (!fam.params.variant.empty()) os << " variant=" << fam.params.variant;
  os << " members=" << fam.members.size() << " length=" << fam.length() << "\n";
  for (const auto& m : fam.members) os << m.to_string() << "\n";
  return os.str();
}

SequenceFamily family_from_text(std::string_view text) {
  SequenceFamily fam;
  fam.kind = FamilyKind::kMSeq;
  bool kind_seen = false;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto kv = parse_header(line);
      if (kv.count("kind")) {
        fam.kind = kind_from_name(kv["kind"]);
        kind_seen = true;
      }
      if (kv.count("m")) fam.params.m = std::stoi(kv["m"]);
      if (kv.count("n")) fam.params.n = std::stoi(kv["n"]);
      if (kv.count("p")) fam.params.p = std::stoll(kv["p"]);
      if (kv.count("r")) fam.params.r = std::stoi(kv["r"]);
      if (kv.count("decimation")) fam.params.decimation = std::stoll(kv["decimation"]);
      if (kv.count("column")) fam.params.column = kv["column"];
      if (kv.count("variant")) fam.params.variant = kv["variant"];
      continue;
    }
    fam.members.push_back(BinarySequence::from_string(line));
  }
  if (fam.members.empty()) throw DomainError("family text holds no sequences");
  for (const auto& m : fam.members) {
    if (m.size() != fam.members[0].size()) {
      throw DimensionMismatch("family text has members of different lengths");
    }
  }
  (void)kind_seen;
  return fam;
}

std::string shift_family_to_text(const ShiftFamily& fam, std::string_view stamp) {
  std::ostringstream os;
  if (!stamp.empty()) os << "# generated " << stamp << "\n";
  os << "# kind=" << shift_kind_name(fam.kind);
  if (fam.p) os << " p=" << fam.p;
  if (fam.m) os << " m=" << fam.m;
  if (fam.n) os << " n=" << fam.n;
  if (fam.r) os << " r=" << fam.r;
  if (fam.generator) os << " generator=" << fam.generator;
  if (!fam.patterns.empty()) {
    os << " slots=" << fam.patterns[0].n_cols << " freqs=" << fam.patterns[0].row_modulus;
  }
  os << " patterns=" << fam.patterns.size() << "\n";
  for (const auto& p : fam.patterns) os << p.to_csv() << "\n";
  return os.str();
}

ShiftFamily shift_family_from_text(std::string_view text) {
  ShiftFamily fam;
  fam.kind = ShiftKind::kKasamiHop;
  int modulus = 0;
  std::vector<std::string> rows;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto kv = parse_header(line);
      if (kv.count("kind")) {
        std::string name = kv["kind"];
        for (ShiftKind k : {ShiftKind::kMtA, ShiftKind::kMtB, ShiftKind::kMtC,
                            ShiftKind::kKasamiHop, ShiftKind::kNoKumarHop}) {
          if (shift_kind_name(k) == name) fam.kind = k;
        }
      }
      if (kv.count("p")) fam.p = std::stoll(kv["p"]);
      if (kv.count("m")) fam.m = std::stoi(kv["m"]);
      if (kv.count("n")) fam.n = std::stoi(kv["n"]);
      if (kv.count("r")) fam.r = std::stoi(kv["r"]);
      if (kv.count("generator")) fam.generator = std::stoi(kv["generator"]);
      if (kv.count("freqs")) modulus = std::stoi(kv["freqs"]);
      continue;
    }
    rows.push_back(line);
  }
  if (rows.empty()) throw DomainError("pattern text holds no patterns");
  if (modulus == 0) {
    // No header: infer the modulus from the largest defined value.
    int mx = 0;
    for (const auto& r : rows) {
      ShiftSequence s = ShiftSequence::from_csv(r, std::numeric_limits<int>::max());
      for (int v : s.values) {
        if (v != ShiftSequence::kBlank && v > mx) mx = v;
      }
    }
    modulus = mx + 1;
  }
  for (const auto& r : rows) fam.patterns.push_back(ShiftSequence::from_csv(r, modulus));
  for (const auto& p : fam.patterns) {
    if (p.n_cols != fam.patterns[0].n_cols) {
      throw DimensionMismatch("pattern text has rows of different lengths");
    }
  }
  return fam;
}

}  // namespace seqkit
