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

#ifndef ISG_PARTIAL_MAP_HPP_
#define ISG_PARTIAL_MAP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "element_set.hpp"

namespace isg {

  //! A partial map of {0, ..., degree - 1} into itself, stored as an image
  //! vector with kUndefined marking points outside the domain.
  class PartialMap {
   public:
    PartialMap() = default;
    explicit PartialMap(std::vector<std::int32_t> images)
        : _images(std::move(images)) {}

    static PartialMap identity(std::size_t degree);
    static PartialMap empty(std::size_t degree);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    std::int32_t operator()(std::size_t x) const {
      return _images[x];
    }

    std::vector<std::int32_t> const& images() const noexcept {
      return _images;
    }

    bool is_injective() const;
    bool is_empty() const;
    bool is_idempotent() const;

    IndexSet domain() const;
    IndexSet range() const;

    //! The inverse partial map. Requires is_injective().
    PartialMap inverse() const;

    //! Space separated images, `_` for undefined, e.g. "1 0" or "0 _".
    std::string to_string() const;

    auto operator<=>(PartialMap const&) const = default;
    bool operator==(PartialMap const&) const  = default;

   private:
    std::vector<std::int32_t> _images;
  };

  //! The composite "apply q, then p" on the largest domain where it is
  //! defined. This is the product p * q of the symmetric inverse monoid.
  PartialMap compose(PartialMap const& p, PartialMap const& q);

}  // namespace isg

#endif  // ISG_PARTIAL_MAP_HPP_
