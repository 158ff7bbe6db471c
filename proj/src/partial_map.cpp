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

#include "isg/partial_map.hpp"

#include <algorithm>
#include <cassert>

namespace isg {

  PartialMap PartialMap::identity(std::size_t degree) {
    std::vector<std::int32_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<std::int32_t>(i);
    }
    return PartialMap(std::move(images));
  }

  PartialMap PartialMap::empty(std::size_t degree) {
    return PartialMap(std::vector<std::int32_t>(degree, kUndefined));
  }

  bool PartialMap::is_injective() const {
    std::vector<bool> seen(_images.size(), false);
    for (auto y : _images) {
      if (y == kUndefined) {
        continue;
      }
      if (y < 0 || static_cast<std::size_t>(y) >= _images.size() || seen[y]) {
        return false;
      }
      seen[y] = true;
    }
    return true;
  }

  bool PartialMap::is_empty() const {
    return std::all_of(_images.begin(), _images.end(), [](auto y) {
      return y == kUndefined;
    });
  }

  bool PartialMap::is_idempotent() const {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined && _images[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  IndexSet PartialMap::domain() const {
    IndexSet result(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined) {
        result.set(i);
      }
    }
    return result;
  }

  IndexSet PartialMap::range() const {
    IndexSet result(_images.size());
    for (auto y : _images) {
      if (y != kUndefined) {
        result.set(y);
      }
    }
    return result;
  }

  PartialMap PartialMap::inverse() const {
    assert(is_injective());
    std::vector<std::int32_t> images(_images.size(), kUndefined);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined) {
        images[_images[i]] = static_cast<std::int32_t>(i);
      }
    }
    return PartialMap(std::move(images));
  }

  std::string PartialMap::to_string() const {
    std::string result;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (i != 0) {
        result += ' ';
      }
      result += _images[i] == kUndefined ? std::string("_")
                                         : std::to_string(_images[i]);
    }
    return result;
  }

  PartialMap compose(PartialMap const& p, PartialMap const& q) {
    assert(p.degree() == q.degree());
    std::vector<std::int32_t> images(q.degree(), kUndefined);
    for (std::size_t x = 0; x < q.degree(); ++x) {
      auto y = q(x);
      if (y != kUndefined) {
        images[x] = p(y);
      }
    }
    return PartialMap(std::move(images));
  }

}  // namespace isg
