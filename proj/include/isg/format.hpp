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

// The .isg text format.
//
//   # comment
//   semigroup <name>
//   table <n> zero <k>
//   <n rows of n element indices>
//
// or, for a semigroup generated by partial injections of m points,
//
//   semigroup <name>
//   points <m>
//   gen <name> = <m tokens>
//
// where token i is the image of point i, or _ when i is not in the domain.

#ifndef ISG_FORMAT_HPP_
#define ISG_FORMAT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semigroup.hpp"

namespace isg {

  struct GeneratorSpec {
    std::string               name;
    std::vector<std::int32_t> images;  // kUndefined for _

    bool operator==(GeneratorSpec const&) const = default;
  };

  struct SemigroupSpec {
    enum class Mode { Table, Generators };

    Mode        mode = Mode::Table;
    std::string name;

    // Mode::Table
    Table   rows;
    Element zero = 0;

    // Mode::Generators
    std::size_t                degree = 0;
    std::vector<GeneratorSpec> generators;

    bool operator==(SemigroupSpec const&) const = default;
  };

  //! Throws ParseError with code SyntaxError, RangeError or DuplicateName.
  //! Partial maps are not checked for injectivity here; see build_semigroup.
  SemigroupSpec parse_spec(std::string_view text);

  //! Canonical text for \p spec; parse_spec(print_spec(s)) == s.
  std::string print_spec(SemigroupSpec const& spec);

  //! Validates and builds the semigroup. Generator mode closes the
  //! generators under composition and inversion, with at most \p max_size
  //! elements.
  InverseSemigroup build_semigroup(SemigroupSpec const& spec,
                                   std::size_t          max_size = 100000);

}  // namespace isg

#endif  // ISG_FORMAT_HPP_
