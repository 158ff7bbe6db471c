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

// Finite inverse semigroups with zero, backed by a full multiplication table.

#ifndef ISG_SEMIGROUP_HPP_
#define ISG_SEMIGROUP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "partial_map.hpp"

namespace isg {

  using Table = std::vector<std::vector<Element>>;

  //! A validated finite inverse semigroup with zero.
  //!
  //! Elements are the dense indices 0, ..., size() - 1. The involution s -> s*
  //! is not supplied: it is computed at construction as the unique t with
  //! sts = s and tst = t, and construction fails if it is missing or not
  //! unique. Instances are immutable.
  class InverseSemigroup {
   public:
    //! Validates \p table (row a, column b holds a * b) and \p zero.
    //!
    //! Checks, in this order: shape and ranges, associativity, existence and
    //! uniqueness of inverses, and that \p zero is absorbing.
    //! Throws isg::Error with NotAssociative, InverseMissing,
    //! InverseNotUnique, NoZero, ZeroNotAbsorbing or RangeError.
    static InverseSemigroup from_table(Table const&             table,
                                       Element                  zero,
                                       std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return _size;
    }
    Element zero() const noexcept {
      return _zero;
    }

    Element product(Element a, Element b) const noexcept {
      return _table[a * _size + b];
    }
    Element product(Element a, Element b, Element c) const noexcept {
      return product(product(a, b), c);
    }
    Element star(Element s) const noexcept {
      return _star[s];
    }

    //! s f s*
    Element conjugate(Element s, Element f) const noexcept {
      return product(product(s, f), _star[s]);
    }
    //! s* s
    Element source_idempotent(Element s) const noexcept {
      return product(_star[s], s);
    }
    //! s s*
    Element range_idempotent(Element s) const noexcept {
      return product(s, _star[s]);
    }

    bool is_idempotent(Element s) const noexcept {
      return _idempotent_set.test(s);
    }
    //! Idempotents in increasing index order; always contains zero().
    std::vector<Element> const& idempotents() const noexcept {
      return _idempotents;
    }
    IndexSet const& idempotent_set() const noexcept {
      return _idempotent_set;
    }

    std::string const& label(Element s) const {
      return _labels[s];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    Table table() const;

    //! Natural partial order: s <= t iff s = t s* s.
    bool nat_leq(Element s, Element t) const noexcept {
      return s == product(t, _star[s], s);
    }

    //! Greatest lower bound of two idempotents. Throws NotIdempotent.
    Element meet(Element e, Element f) const;
    //! ef = 0. Throws NotIdempotent.
    bool orthogonal(Element e, Element f) const;
    //! ef != 0. Throws NotIdempotent.
    bool intersects(Element e, Element f) const;

    //! Throws NotIdempotent unless \p e is idempotent.
    void require_idempotent(Element e) const;

   private:
    InverseSemigroup() = default;

    std::size_t              _size = 0;
    Element                  _zero = 0;
    std::vector<Element>     _table;
    std::vector<Element>     _star;
    std::vector<Element>     _idempotents;
    IndexSet                 _idempotent_set;
    std::vector<std::string> _labels;
  };

  //! An inverse semigroup generated by partial injections, together with the
  //! partial map realising each element.
  struct ConcreteSemigroup {
    InverseSemigroup        semigroup;
    std::vector<PartialMap> maps;
  };

  //! The closure of \p generators under composition and inversion, with the
  //! empty map adjoined as zero. The empty map is always element 0, the
  //! remaining elements appear in breadth-first discovery order.
  //!
  //! Throws NotInjective, DegreeMismatch, or CapExceeded when the closure has
  //! more than \p max_size elements.
  ConcreteSemigroup from_partial_maps(std::size_t                    degree,
                                      std::vector<PartialMap> const& generators,
                                      std::size_t max_size = 100000);

}  // namespace isg

#endif  // ISG_SEMIGROUP_HPP_
