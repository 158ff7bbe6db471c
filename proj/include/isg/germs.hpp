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

// The groupoid of germs of a finite action.
//
// Pairs (s, x) with x in dom(s) are identified when s e = t e for some
// idempotent e with x in D_e. Every germ class is represented by its
// lexicographically smallest pair (s, x), and arrows are numbered in
// increasing order of that representative. The carrier is discrete, so every
// singleton {[s, x]} = Theta(s, {x}) is open and every set of arrows is open.

#ifndef ISG_GERMS_HPP_
#define ISG_GERMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "action.hpp"
#include "element_set.hpp"

namespace isg {

  using Arrow = std::uint32_t;

  inline constexpr Arrow kNoArrow = static_cast<Arrow>(-1);

  struct Germ {
    Element     rep_s;
    Point       rep_x;
    std::size_t class_id;

    bool operator==(Germ const&) const = default;
  };

  class GermGroupoid {
   public:
    std::size_t size() const noexcept {
      return _arrows.size();
    }
    std::vector<Germ> const& arrows() const noexcept {
      return _arrows;
    }
    Germ const& operator[](Arrow a) const {
      return _arrows[a];
    }

    Point src(Arrow a) const {
      return _src[a];
    }
    Point rng(Arrow a) const {
      return _rng[a];
    }

    //! Number of units, equal to the carrier size.
    std::size_t unit_count() const noexcept {
      return _unit_of.size();
    }
    //! The unit [e, x] over the point x.
    Arrow unit(Point x) const {
      return _unit_of[x];
    }
    IndexSet const& units() const noexcept {
      return _units;
    }
    bool is_unit(Arrow a) const {
      return _units.test(a);
    }

    //! [s, x], or nullopt when x is not in dom(s).
    std::optional<Arrow> germ_of(Element s, Point x) const;

    //! a b, defined iff src(a) = rng(b).
    std::optional<Arrow> compose(Arrow a, Arrow b) const;
    Arrow                inv(Arrow a) const {
      return _inv[a];
    }

    FiniteAction const& action() const noexcept {
      return _action;
    }

    //! "[s,x]" using the semigroup labels.
    std::string label(Arrow a) const;

   private:
    friend GermGroupoid build_germ_groupoid(FiniteAction const& a);

    explicit GermGroupoid(FiniteAction const& a) : _action(a) {}

    FiniteAction              _action;
    std::vector<Germ>         _arrows;
    std::vector<Point>        _src;
    std::vector<Point>        _rng;
    std::vector<Arrow>        _inv;
    std::vector<Arrow>        _unit_of;
    IndexSet                  _units;
    // _class[s * carrier + x] is the arrow [s, x], or kNoArrow if x is not
    // in dom(s)
    std::vector<Arrow>         _class;
  };

  //! Throws InvalidAction if \p a fails validate_action.
  GermGroupoid build_germ_groupoid(FiniteAction const& a);

  //! Theta(s, U) = { [s, x] : x in U }, as a set of arrows. Throws
  //! DomainViolation unless U is contained in dom(s).
  IndexSet theta_slice(GermGroupoid const& g, Element s, IndexSet const& U);

  //! src and rng are both injective on \p arrows.
  bool is_bisection(GermGroupoid const& g, IndexSet const& arrows);

  //! The arrows with src = rng.
  IndexSet isotropy_bundle(GermGroupoid const& g);
  //! The arrows with src = rng = x.
  IndexSet isotropy_group(GermGroupoid const& g, Point x);

  //! The isotropy bundle is the unit space.
  bool is_principal(GermGroupoid const& g);
  //! The interior of the isotropy bundle is the unit space. Every set of
  //! arrows is open here, so this computes the same set as is_principal.
  bool is_essentially_principal(GermGroupoid const& g);

  //! The unit space is closed, which always holds for a discrete space,
  //! and for every s the slice identity
  //!   Theta(s, D_{s*s}) meet units = Theta(s, X_s)
  //! holds arrow for arrow, X_s being the union of D_e over e in J_s.
  //! Returns false if the identity fails for some s.
  bool is_hausdorff_direct(GermGroupoid const& g);

  //! The first s at which the slice identity fails, if any.
  std::optional<Element> slice_identity_failure(GermGroupoid const& g);

  //! The only invariant sets of units are the empty set and all units; that
  //! is, there is at most one orbit of units.
  bool is_minimal_groupoid(GermGroupoid const& g);

  //! Largest groupoid for which is_locally_contracting_groupoid also runs the
  //! exhaustive search over bisections.
  inline constexpr std::size_t kGroupoidSearchLimit = 10;

  //! Always false on a nonempty finite unit space: a bisection carrying V
  //! into a proper subset of V would be an injection of a finite set into a
  //! proper subset. Groupoids with at most kGroupoidSearchLimit arrows are
  //! also searched (every nonempty U, every nonempty V inside U, every
  //! bisection); disagreement throws TheoremViolation.
  LocalContractionVerdict is_locally_contracting_groupoid(GermGroupoid const& g);

  //! The search over U, V and bisections, regardless of size.
  bool search_locally_contracting_groupoid(GermGroupoid const& g);

  //! Exhaustive check of the groupoid laws and of the germ constructions:
  //! associativity where defined, inverse and unit laws, independence of
  //! the product and inverse from the representatives, and that equivalent
  //! pairs have the same image. Returns a description of the first failure.
  std::optional<std::string> check_groupoid_axioms(GermGroupoid const& g);

}  // namespace isg

#endif  // ISG_GERMS_HPP_
