// Copyright 2026 The isg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISG_ERROR_HPP_
#define ISG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace isg {

  enum class ErrorCode {
    // construction and validation of semigroups
    NotAssociative,
    NoZero,
    ZeroNotAbsorbing,
    InverseNotUnique,
    InverseMissing,
    NotInjective,
    DegreeMismatch,
    CapExceeded,
    // order and ideals
    NotIdempotent,
    NotAnIdeal,
    // spectrum
    ZeroGeneratesNoFilter,
    NotAFilter,
    NotACharacter,
    EmptySpectrum,
    // actions and groupoids
    NotInDomain,
    InvalidAction,
    DomainViolation,
    // criteria
    PreconditionViolated,
    TheoremViolation,
    // input format
    SyntaxError,
    RangeError,
    DuplicateName,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  //! Raised when an algebraic criterion and the corresponding groupoid-level
  //! predicate disagree. Carries a textual dump of the offending instance.
  class TheoremViolation : public Error {
   public:
    TheoremViolation(std::string property, std::string detail, std::string dump)
        : Error(ErrorCode::TheoremViolation, property + ": " + detail),
          _property(std::move(property)),
          _dump(std::move(dump)) {}

    std::string const& property() const noexcept {
      return _property;
    }
    std::string const& dump() const noexcept {
      return _dump;
    }

   private:
    std::string _property;
    std::string _dump;
  };

  //! Input-format errors carry a 1-based line and column.
  class ParseError : public Error {
   public:
    ParseError(ErrorCode code,
               std::size_t line,
               std::size_t column,
               std::string const& message)
        : Error(code,
                std::to_string(line) + ":" + std::to_string(column) + ": "
                    + message),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace isg

#endif  // ISG_ERROR_HPP_
