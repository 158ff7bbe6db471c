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

// Filters, characters, ultrafilters and tight filters on the idempotent
// semilattice of a finite inverse semigroup.
//
// In a finite semilattice every filter is the up-set of its meet, so a
// filter is stored as that minimum together with the derived member set.
// Filters compare and order by their minimum.

#ifndef ISG_SPECTRUM_HPP_
#define ISG_SPECTRUM_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "element_set.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"

namespace isg {

  class Filter {
   public:
    //! The up-set of \p e. Throws ZeroGeneratesNoFilter if e is zero and
    //! NotIdempotent if e is not idempotent.
    static Filter from_min(InverseSemigroup const& S, Element e);

    //! Validates that \p members is a filter (nonempty, zero-free, closed
    //! under meets, up-closed). Throws NotAFilter otherwise.
    static Filter from_members(InverseSemigroup const& S, IndexSet members);

    Element min() const noexcept {
      return _min;
    }
    IndexSet const& members() const noexcept {
      return _members;
    }
    bool contains(Element e) const {
      return _members.test(e);
    }

    bool operator==(Filter const& that) const noexcept {
      return _min == that._min;
    }
    auto operator<=>(Filter const& that) const noexcept {
      return _min <=> that._min;
    }

   private:
    Filter(Element min, IndexSet members)
        : _min(min), _members(std::move(members)) {}

    Element  _min;
    IndexSet _members;
  };

  bool is_filter(InverseSemigroup const& S, IndexSet const& members);

  //! A {0,1}-valued map on the idempotents, stored as the set where it is 1.
  class Character {
   public:
    explicit Character(IndexSet ones) : _ones(std::move(ones)) {}

    int operator()(Element e) const {
      return _ones.test(e) ? 1 : 0;
    }
    IndexSet const& ones() const noexcept {
      return _ones;
    }

    bool operator==(Character const&) const = default;

   private:
    IndexSet _ones;
  };

  //! Nonzero, vanishes at zero, multiplicative on idempotents.
  bool is_character(InverseSemigroup const& S, Character const& c);

  //! The indicator function of \p f.
  Character char_of(InverseSemigroup const& S, Filter const& f);

  //! The filter where \p c is 1. Throws NotACharacter.
  Filter filter_of(InverseSemigroup const& S, Character const& c);

  //! One filter per nonzero idempotent, ordered by minimum. Throws
  //! EmptySpectrum when zero is the only idempotent.
  std::vector<Filter> all_filters(InverseSemigroup const& S);

  //! No filter properly contains \p f.
  bool is_ultrafilter(InverseSemigroup const& S, Filter const& f);

  std::vector<Filter> ultrafilters(InverseSemigroup const& S);

  //! U(X, Y): the filters containing X and disjoint from Y.
  std::vector<Filter> basic_open(InverseSemigroup const& S,
                                 IndexSet const&         X,
                                 IndexSet const&         Y);

  //! For an ultrafilter xi in U(X, Y), an idempotent e in xi whose basic
  //! neighbourhood U({e}, {}) lies inside U(X, Y): the meet of X with, for
  //! each y in Y, some member of xi orthogonal to y. Throws
  //! PreconditionViolated if xi is not an ultrafilter in U(X, Y).
  Element neighbourhood_idempotent(InverseSemigroup const& S,
                                   Filter const&           xi,
                                   IndexSet const&         X,
                                   IndexSet const&         Y);

  //! A choice of X contained in xi, Y disjoint from xi and a finite cover Z
  //! of E^{X,Y} disjoint from xi. Any such triple shows xi is not tight.
  struct TightnessViolation {
    IndexSet X;
    IndexSet Y;
    IndexSet Z;
  };

  //! Searches for a TightnessViolation.
  //!
  //! For fixed X and Y the only candidate Z that needs testing is
  //! Z* = (nonzero members of E^{X,Y}) \ xi, since outer covers are
  //! monotone and any admissible Z lies inside Z*. X ranges over the empty
  //! set and the singletons {x} with x in xi, since E^{X,Y} = E^{{meet X},Y}.
  //! Y ranges over the empty set and the singletons {y} with y not in xi:
  //! Z* covers E^{X,Y} exactly when either min(xi) is not in E^{X,Y} or
  //! min(xi) has a nonzero idempotent strictly below it, and min(xi) fails
  //! to lie in an intersection of ideals iff it fails to lie in one of them.
  std::optional<TightnessViolation> tightness_violation(InverseSemigroup const& S,
                                                        Filter const& xi);

  bool is_tight_filter(InverseSemigroup const& S, Filter const& xi);

  //! The tight filters, ordered by minimum, as the points of a finite space.
  class TightSpectrum {
   public:
    explicit TightSpectrum(std::vector<Filter> points);

    std::vector<Filter> const& points() const noexcept {
      return _points;
    }
    std::size_t size() const noexcept {
      return _points.size();
    }
    Filter const& operator[](Point x) const {
      return _points[x];
    }
    //! The point whose filter is \p f, if \p f is tight.
    std::optional<Point> index_of(Filter const& f) const;
    std::optional<Point> index_of_min(Element min) const;

   private:
    std::vector<Filter>  _points;
    std::vector<Element> _mins;
  };

  //! Throws EmptySpectrum when zero is the only idempotent.
  TightSpectrum tight_spectrum(InverseSemigroup const& S);

}  // namespace isg

#endif  // ISG_SPECTRUM_HPP_
