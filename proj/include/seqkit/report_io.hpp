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

#ifndef SEQKIT_REPORT_IO_HPP
#define SEQKIT_REPORT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "seqkit/analysis.hpp"
#include "seqkit/seqgen.hpp"
#include "seqkit/shiftseq.hpp"

namespace seqkit {

using OrderedJson = nlohmann::ordered_json;

OrderedJson correlation_report_json(const CorrelationReport& report);
OrderedJson complexity_report_json(const ComplexityReport& report);
OrderedJson family_report_json(const SequenceFamily& fam, const CorrelationReport& corr,
                               const std::vector<ComplexityReport>& complexities);

/// Family text format: '# key=value ...' header comment, one ASCII bit
/// line per member. When stamp is nonempty it is emitted as an extra
/// leading comment line.
std::string family_to_text(const SequenceFamily& fam, std::string_view stamp = {});
SequenceFamily family_from_text(std::string_view text);

/// One pattern per line, comma separated with '-' for blanks, plus a
/// '# key=value ...' header comment carrying the modulus.
std::string shift_family_to_text(const ShiftFamily& fam, std::string_view stamp = {});
ShiftFamily shift_family_from_text(std::string_view text);

}  // namespace seqkit

#endif  // SEQKIT_REPORT_IO_HPP
