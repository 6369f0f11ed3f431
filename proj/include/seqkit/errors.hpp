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

#ifndef SEQKIT_ERRORS_HPP
#define SEQKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seqkit {

/* Invalid parameters or inputs; the CLI maps these to exit code 2. */
class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/* Internal consistency failures; the CLI maps these to exit code 1. */
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

struct NonPrimitiveModulus : DomainError {
  explicit NonPrimitiveModulus(const std::string& what) : DomainError(what) {}
};

struct LogOfZero : DomainError {
  LogOfZero() : DomainError("discrete log of zero is undefined") {}
};

struct GcdNotOne : DomainError {
  explicit GcdNotOne(const std::string& what) : DomainError(what) {}
};

struct HallNotDefined : DomainError {
  explicit HallNotDefined(const std::string& what) : DomainError(what) {}
};

struct NotCoprime : DomainError {
  explicit NotCoprime(const std::string& what) : DomainError(what) {}
};

struct DimensionMismatch : DomainError {
  explicit DimensionMismatch(const std::string& what) : DomainError(what) {}
};

struct ColumnNotAShift : DomainError {
  explicit ColumnNotAShift(const std::string& what) : DomainError(what) {}
};

struct MultipleDotsInColumn : DomainError {
  explicit MultipleDotsInColumn(const std::string& what) : DomainError(what) {}
};

struct FermatPrimeRequired : DomainError {
  explicit FermatPrimeRequired(const std::string& what) : DomainError(what) {}
};

struct OracleDisagreement : InternalError {
  explicit OracleDisagreement(const std::string& what) : InternalError(what) {}
};

}  // namespace seqkit

#endif  // SEQKIT_ERRORS_HPP
