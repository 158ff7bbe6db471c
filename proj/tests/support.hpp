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

#ifndef ISG_TESTS_SUPPORT_HPP_
#define ISG_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>

#include "isg/semigroup.hpp"

namespace isg::test {

  //! The element labelled \p label.
  inline Element el(InverseSemigroup const& S, std::string const& label) {
    auto const& L  = S.labels();
    auto        it = std::find(L.begin(), L.end(), label);
    if (it == L.end()) {
      throw std::invalid_argument("no element labelled " + label);
    }
    return static_cast<Element>(it - L.begin());
  }

  inline IndexSet set_of(InverseSemigroup const& S, std::initializer_list<char const*> labels) {
    IndexSet result(S.size());
    for (auto const* l : labels) {
      result.set(el(S, l));
    }
    return result;
  }

  inline std::shared_ptr<InverseSemigroup const> share(InverseSemigroup const& S) {
    return std::make_shared<InverseSemigroup const>(S);
  }

}  // namespace isg::test

#endif  // ISG_TESTS_SUPPORT_HPP_
