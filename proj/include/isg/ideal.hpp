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

// Ideals of the idempotent semilattice and (outer) covers.

#ifndef ISG_IDEAL_HPP_
#define ISG_IDEAL_HPP_

#include <optional>
#include <vector>

#include "element_set.hpp"
#include "semigroup.hpp"

namespace isg {

  //! A nonempty hereditary subset of the idempotents: contains zero and is
  //! closed downwards under the idempotent order. Members are indexed by
  //! semigroup element.
  class Ideal {
   public:
    //! Throws NotAnIdeal if \p members is not an ideal of S's idempotents.
    static Ideal from_members(InverseSemigroup const& S, IndexSet members);

    //! Every idempotent of S.
    static Ideal whole(InverseSemigroup const& S);

    bool contains(Element e) const {
      return _members.test(e);
    }
    IndexSet const& members() const noexcept {
      return _members;
    }
    //! Members other than zero.
    IndexSet nonzero_members(InverseSemigroup const& S) const;

    std::size_t size() const noexcept {
      return _members.count();
    }

    bool operator==(Ideal const&) const = default;

   private:
    explicit Ideal(IndexSet members) : _members(std::move(members)) {}

    friend Ideal unchecked_ideal(IndexSet);

    IndexSet _members;
  };

  //! A finite set of idempotents offered as a (possibly outer) cover.
  struct CoverCandidate {
    IndexSet members;

    bool operator==(CoverCandidate const&) const = default;
  };

  bool is_ideal(InverseSemigroup const& S, IndexSet const& members);

  //! J_e = { f in E : f <= e }.
  Ideal principal_ideal(InverseSemigroup const& S, Element e);

  //! J^perp = { f in E : fe = 0 for all e in J }.
  Ideal ideal_perp(InverseSemigroup const& S, Ideal const& J);

  //! The intersection of the J_x (x in X) and of the J_y^perp (y in Y). An
  //! empty family intersects to all of E. Throws NotIdempotent if X or Y
  //! contains a non-idempotent.
  Ideal exy_ideal(InverseSemigroup const& S, IndexSet const& X, IndexSet const& Y);

  //! J_s = { e in E : e <= s } = { e in E : e = se }.
  Ideal j_s(InverseSemigroup const& S, Element s);

  Ideal ideal_union(Ideal const& I, Ideal const& J);
  Ideal ideal_intersection(Ideal const& I, Ideal const& J);

  //! The meet of a nonempty set of idempotents, or nullopt when X is empty.
  std::optional<Element> meet_of(InverseSemigroup const& S, IndexSet const& X);

  //! Every nonzero f in J intersects some member of C.
  bool is_outer_cover(InverseSemigroup const& S,
                      CoverCandidate const&   C,
                      Ideal const&            J);

  //! An outer cover contained in J.
  bool is_cover(InverseSemigroup const& S,
                CoverCandidate const&   C,
                Ideal const&            J);

  //! A nonzero member of J meeting no member of C, if there is one.
  std::optional<Element> uncovered_witness(InverseSemigroup const& S,
                                           CoverCandidate const&   C,
                                           Ideal const&            J);

  //! The maximal nonzero members of J. Always a cover of J; empty iff
  //! J = {0}.
  CoverCandidate canonical_cover(InverseSemigroup const& S, Ideal const& J);

  //! Precomputed order data on the idempotents of one semigroup, as index
  //! sets over the elements. Used by the scans that run once per pair or
  //! triple of idempotents.
  class IdempotentTables {
   public:
    explicit IdempotentTables(InverseSemigroup const& S);

    //! J_e
    IndexSet const& below(Element e) const {
      return _below[e];
    }
    //! the up-set of e within E
    IndexSet const& above(Element e) const {
      return _above[e];
    }
    //! J_e^perp
    IndexSet const& perp(Element e) const {
      return _perp[e];
    }
    //! nonzero idempotents f with ef != 0
    IndexSet const& meets(Element e) const {
      return _meets[e];
    }
    //! minimal nonzero idempotents
    IndexSet const& atoms() const noexcept {
      return _atoms;
    }

   private:
    std::vector<IndexSet> _below;
    std::vector<IndexSet> _above;
    std::vector<IndexSet> _perp;
    std::vector<IndexSet> _meets;
    IndexSet              _atoms;
  };

  //! No non-idempotent dominates a nonzero idempotent, i.e. J_s = {0} for
  //! every non-idempotent s.
  bool is_e_star_unitary(InverseSemigroup const& S);

}  // namespace isg

#endif  // ISG_IDEAL_HPP_
