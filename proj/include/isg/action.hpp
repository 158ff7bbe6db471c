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

// Actions of finite inverse semigroups on finite sets by partial bijections.
//
// A finite carrier is treated as a discrete space throughout: it is a finite
// Hausdorff space, so every subset is open and closed. The topological
// notions of the theory specialise as follows, and each predicate below
// states the form it computes.
//
//   interior(A) = closure(A) = A
//   "topologically free"  == "free"
//   "irreducible"         == a single trajectory class
//   "locally contracting" requires an injection of a finite set V into a
//                         proper subset of V, which cannot exist.

#ifndef ISG_ACTION_HPP_
#define ISG_ACTION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "semigroup.hpp"
#include "spectrum.hpp"

namespace isg {

  //! A family of partial maps alpha_s of {0, ..., carrier_size() - 1},
  //! one per semigroup element. Construction only checks shapes and ranges;
  //! validate_action checks the action axioms.
  class FiniteAction {
   public:
    //! maps[s][x] is alpha_s(x), or kUndefined. Throws InvalidAction on a
    //! shape or range error.
    FiniteAction(std::shared_ptr<InverseSemigroup const> S,
                 std::size_t                             carrier_size,
                 std::vector<std::vector<std::int32_t>>  maps);

    InverseSemigroup const& semigroup() const noexcept {
      return *_semigroup;
    }
    std::shared_ptr<InverseSemigroup const> const& semigroup_ptr() const noexcept {
      return _semigroup;
    }
    std::size_t carrier_size() const noexcept {
      return _carrier_size;
    }

    std::int32_t image(Element s, Point x) const {
      return _maps[s][x];
    }
    bool in_domain(Element s, Point x) const {
      return _maps[s][x] != kUndefined;
    }
    //! The domain of alpha_s.
    IndexSet const& domain(Element s) const {
      return _domains[s];
    }
    //! D_e, the set on which alpha_e is defined, for an idempotent e.
    IndexSet const& edomain(Element e) const {
      return _domains[e];
    }
    //! alpha_s(A intersected with dom(s)).
    IndexSet image_of(Element s, IndexSet const& A) const;

    //! Every subset of the carrier is open.
    IndexSet interior(IndexSet const& A) const {
      return A;
    }

    std::vector<std::vector<std::int32_t>> const& maps() const noexcept {
      return _maps;
    }

   private:
    std::shared_ptr<InverseSemigroup const> _semigroup;
    std::size_t                             _carrier_size;
    std::vector<std::vector<std::int32_t>>  _maps;
    std::vector<IndexSet>                   _domains;
  };

  enum class ActionViolationKind {
    CompositionMismatch,
    InverseMismatch,
    DomainMismatch,
    IdempotentNotIdentity,
    ZeroNotEmpty,
    DomainNotCovering,
    NotInjective,
  };

  std::string_view to_string(ActionViolationKind kind) noexcept;

  struct ActionViolation {
    ActionViolationKind kind;
    Element             s = 0;
    Element             t = 0;
    Point               x = 0;
    std::string         message;
  };

  //! Checks, exhaustively: each alpha_s injective; alpha_s o alpha_t =
  //! alpha_st on the largest domain where the composite is defined;
  //! alpha_{s*} the inverse of alpha_s; dom(s) = D_{s*s} and
  //! range(s) = D_{ss*}; alpha_e the identity on D_e; alpha_0 empty; the D_e
  //! cover the carrier. Returns the first violation found.
  std::optional<ActionViolation> validate_action(FiniteAction const& a);

  //! Throws InvalidAction if validate_action reports a violation.
  void require_valid_action(FiniteAction const& a);

  //! beta_s(xi) = { f : f >= s e s* for some e in xi }. Throws NotInDomain
  //! unless s*s is in xi.
  Filter beta_on_filter(InverseSemigroup const& S, Element s, Filter const& xi);

  //! The character e -> c(s* e s). Throws NotInDomain unless c(s*s) = 1.
  Character beta_on_character(InverseSemigroup const& S,
                              Element                 s,
                              Character const&        c);

  //! The action theta of S on its tight spectrum: D_e is the set of points
  //! containing e and theta_s acts by beta_s. Throws EmptySpectrum.
  FiniteAction standard_action(std::shared_ptr<InverseSemigroup const> S,
                               TightSpectrum const&                    spectrum);

  //! Each point x has an idempotent e with D_e = {x}, so the basic open
  //! sets D_e generate the discrete topology.
  bool has_discrete_basis(FiniteAction const& a);

  //! The union of D_e over e in J_s.
  IndexSet x_alpha_s(FiniteAction const& a, Element s);

  //! F_s: the x in dom(s) with alpha_s(x) = x.
  IndexSet fixed_points(FiniteAction const& a, Element s);

  //! TF_s: the x lying in some D_e with e <= s; equal to x_alpha_s(a, s).
  IndexSet trivial_fixed_points(FiniteAction const& a, Element s);

  struct FreenessVerdict {
    bool                   holds = true;
    std::optional<Element> witness;  // an s with a nontrivial fixed point
    std::optional<Point>   point;
  };

  //! Every fixed point of every s is trivial.
  FreenessVerdict is_free(FiniteAction const& a);

  //! interior(F_s) is contained in TF_s for every s. With the discrete
  //! topology interior(F_s) = F_s and this coincides with is_free.
  FreenessVerdict is_topologically_free(FiniteAction const& a);

  //! The trajectory classes of the carrier, ordered by smallest point.
  struct OrbitPartition {
    std::vector<IndexSet> classes;
    std::vector<std::size_t> class_of;  // point -> index into classes
  };

  OrbitPartition orbit_partition(FiniteAction const& a);

  //! The trajectory class of x.
  IndexSet orbit(FiniteAction const& a, Point x);

  //! Orb(V): the union of alpha_s(V intersected with dom(s)) over all s.
  IndexSet orb(FiniteAction const& a, IndexSet const& V);

  //! No invariant subsets besides the empty set and the carrier, i.e. a
  //! single trajectory class. An empty carrier counts as irreducible.
  bool is_irreducible(FiniteAction const& a);

  enum class ContractionReason {
    CardinalityObstruction,
    EmptySpectrum,
    Witness,
  };

  std::string_view to_string(ContractionReason reason) noexcept;

  struct LocalContractionVerdict {
    bool              holds  = false;
    ContractionReason reason = ContractionReason::CardinalityObstruction;
    //! Set when the exhaustive search ran, holding its answer.
    std::optional<bool> search;
  };

  //! Largest carrier for which is_locally_contracting_action also runs the
  //! exhaustive search.
  inline constexpr std::size_t kActionSearchLimit = 6;

  //! On a nonempty finite carrier the answer is always false: alpha_s is
  //! injective, so |alpha_s(V)| = |V| and alpha_s(V) cannot be a proper
  //! subset of V. For carriers of at most kActionSearchLimit points the
  //! definition is also searched directly (every nonempty U, every nonempty
  //! V inside U, every s), and the two answers must agree; disagreement
  //! throws TheoremViolation.
  LocalContractionVerdict is_locally_contracting_action(FiniteAction const& a);

  //! The direct search over U, V and s, regardless of carrier size.
  bool search_locally_contracting_action(FiniteAction const& a);

}  // namespace isg

#endif  // ISG_ACTION_HPP_
