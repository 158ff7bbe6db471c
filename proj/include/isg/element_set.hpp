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

// Dense index sets used for subsets of a semigroup (indexed by element) and
// for subsets of a finite carrier (indexed by point).

#ifndef ISG_ELEMENT_SET_HPP_
#define ISG_ELEMENT_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace isg {

  using Element = std::uint32_t;
  using Point   = std::uint32_t;

  inline constexpr std::int32_t kUndefined = -1;

  using IndexSet = boost::dynamic_bitset<>;

  //! Forward range over the set bits of an IndexSet, in increasing order.
  class SetBits {
   public:
    class iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = std::size_t;
      using difference_type   = std::ptrdiff_t;
      using pointer           = void;
      using reference         = std::size_t;

      iterator() = default;
      iterator(IndexSet const* set, std::size_t pos) : _set(set), _pos(pos) {}

      std::size_t operator*() const noexcept {
        return _pos;
      }
      iterator& operator++() {
        _pos = _set->find_next(_pos);
        return *this;
      }
      iterator operator++(int) {
        iterator tmp = *this;
        ++*this;
        return tmp;
      }
      bool operator==(iterator const& that) const noexcept {
        return _pos == that._pos;
      }
      bool operator!=(iterator const& that) const noexcept {
        return _pos != that._pos;
      }

     private:
      IndexSet const* _set = nullptr;
      std::size_t     _pos = IndexSet::npos;
    };

    explicit SetBits(IndexSet const& set) : _set(&set) {}

    iterator begin() const {
      return iterator(_set, _set->find_first());
    }
    iterator end() const {
      return iterator(_set, IndexSet::npos);
    }

   private:
    IndexSet const* _set;
  };

  inline SetBits bits(IndexSet const& set) {
    return SetBits(set);
  }
  //! The range would outlive a temporary set.
  SetBits bits(IndexSet&&) = delete;

  inline IndexSet make_set(std::size_t universe,
                           std::initializer_list<std::size_t> members = {}) {
    IndexSet result(universe);
    for (auto m : members) {
      result.set(m);
    }
    return result;
  }

  template <typename Container>
  IndexSet make_set_from(std::size_t universe, Container const& members) {
    IndexSet result(universe);
    for (auto m : members) {
      result.set(static_cast<std::size_t>(m));
    }
    return result;
  }

  template <typename T = std::size_t>
  std::vector<T> to_vector(IndexSet const& set) {
    std::vector<T> result;
    result.reserve(set.count());
    for (auto i : bits(set)) {
      result.push_back(static_cast<T>(i));
    }
    return result;
  }

}  // namespace isg

#endif  // ISG_ELEMENT_SET_HPP_
