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

// JSON and DOT output.

#ifndef ISG_REPORT_HPP_
#define ISG_REPORT_HPP_

#include <optional>
#include <string>

#include "json.hpp"

#include "criteria.hpp"
#include "error.hpp"
#include "germs.hpp"

namespace isg {

  inline constexpr int kSchemaVersion = 1;

  using Json = nlohmann::ordered_json;

  //! The report document. Keys appear in a fixed order, and nothing in it
  //! depends on timing, so equal inputs give byte-identical output.
  Json report_json(std::string const&      name,
                   InverseSemigroup const& S,
                   PropertyReport const&   report);

  //! The document written instead of a report when analysis fails.
  Json error_json(std::string const& name, Error const& error);

  //! \p doc as text with two-space indentation and a trailing newline.
  std::string emit_report(Json const& doc);

  //! One node per unit and one edge src -> rng per arrow that is not a
  //! unit, labelled by the canonical representative of the germ.
  std::string emit_dot(GermGroupoid const& g, std::string const& name);

}  // namespace isg

#endif  // ISG_REPORT_HPP_
