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

#include "isg/action.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include "isg/error.hpp"
#include "isg/ideal.hpp"

namespace isg {

  std::string_view to_string(ActionViolationKind kind) noexcept {
    switch (kind) {
      case ActionViolationKind::CompositionMismatch: return "CompositionMismatch";
      case ActionViolationKind::InverseMismatch: return "InverseMismatch";
      case ActionViolationKind::DomainMismatch: return "DomainMismatch";
      case ActionViolationKind::IdempotentNotIdentity:
        return "IdempotentNotIdentity";
      case ActionViolationKind::ZeroNotEmpty: return "ZeroNotEmpty";
      case ActionViolationKind::DomainNotCovering: return "DomainNotCovering";
      case ActionViolationKind::NotInjective: return "NotInjective";
    }
    return "Unknown";
  }

  std::string_view to_string(ContractionReason reason) noexcept {
    switch (reason) {
      case ContractionReason::CardinalityObstruction:
        return "CardinalityObstruction";
      case ContractionReason::EmptySpectrum: return "EmptySpectrum";
      case ContractionReason::Witness: return "Witness";
    }
    return "Unknown";
  }

  FiniteAction::FiniteAction(std::shared_ptr<InverseSemigroup const> S,
                             std::size_t                             carrier_size,
                             std::vector<std::vector<std::int32_t>>  maps)
      : _semigroup(std::move(S)),
        _carrier_size(carrier_size),
        _maps(std::move(maps)) {
    if (!_semigroup || _maps.size() != _semigroup->size()) {
      throw Error(ErrorCode::InvalidAction,
                  "expected one partial map per semigroup element");
    }
    _domains.reserve(_maps.size());
    for (std::size_t s = 0; s < _maps.size(); ++s) {
      if (_maps[s].size() != carrier_size) {
        throw Error(ErrorCode::InvalidAction,
                    "map " + std::to_string(s) + " has the wrong length");
      }
      IndexSet dom(carrier_size);
      for (std::size_t x = 0; x < carrier_size; ++x) {
        auto y = _maps[s][x];
        if (y == kUndefined) {
          continue;
        }
        if (y < 0 || static_cast<std::size_t>(y) >= carrier_size) {
          throw Error(ErrorCode::InvalidAction,
                      "map " + std::to_string(s) + " leaves the carrier");
        }
        dom.set(x);
      }
      _domains.push_back(std::move(dom));
    }
  }

  IndexSet FiniteAction::image_of(Element s, IndexSet const& A) const {
    IndexSet result(_carrier_size);
    for (auto x : bits(A)) {
      if (_maps[s][x] != kUndefined) {
        result.set(_maps[s][x]);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  std::optional<ActionViolation> validate_action(FiniteAction const& a) {
    auto const& S = a.semigroup();
    auto const  N = a.carrier_size();
    auto violation
        = [](ActionViolationKind kind, Element s, Element t, Point x, std::string m) {
            return ActionViolation{kind, s, t, x, std::move(m)};
          };

    if (a.domain(S.zero()).any()) {
      return violation(ActionViolationKind::ZeroNotEmpty,
                       S.zero(),
                       S.zero(),
                       static_cast<Point>(a.domain(S.zero()).find_first()),
                       "alpha_0 is not the empty map");
    }

    IndexSet covered(N);
    for (auto e : S.idempotents()) {
      covered |= a.edomain(e);
    }
    if (covered.count() != N) {
      covered.flip();
      auto x = static_cast<Point>(covered.find_first());
      return violation(ActionViolationKind::DomainNotCovering,
                       0,
                       0,
                       x,
                       "point " + std::to_string(x) + " lies in no D_e");
    }

    for (Element s = 0; s < S.size(); ++s) {
      IndexSet seen(N);
      for (Point x = 0; x < N; ++x) {
        auto y = a.image(s, x);
        if (y == kUndefined) {
          continue;
        }
        if (seen.test(y)) {
          return violation(ActionViolationKind::NotInjective,
                           s,
                           s,
                           x,
                           "alpha_" + S.label(s) + " is not injective");
        }
        seen.set(y);
      }
    }

    for (auto e : S.idempotents()) {
      for (auto x : bits(a.edomain(e))) {
        if (a.image(e, static_cast<Point>(x)) != static_cast<std::int32_t>(x)) {
          return violation(ActionViolationKind::IdempotentNotIdentity,
                           e,
                           e,
                           static_cast<Point>(x),
                           "alpha_" + S.label(e) + " moves a point");
        }
      }
    }

    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        Element const st = S.product(s, t);
        for (Point x = 0; x < N; ++x) {
          std::int32_t composite = kUndefined;
          auto         y         = a.image(t, x);
          if (y != kUndefined) {
            composite = a.image(s, static_cast<Point>(y));
          }
          if (composite != a.image(st, x)) {
            return violation(ActionViolationKind::CompositionMismatch,
                             s,
                             t,
                             x,
                             "alpha_" + S.label(s) + " o alpha_" + S.label(t)
                                 + " differs from alpha_" + S.label(st)
                                 + " at point " + std::to_string(x));
          }
        }
      }
    }

    for (Element s = 0; s < S.size(); ++s) {
      Element const s_star = S.star(s);
      IndexSet      range  = a.image_of(s, a.domain(s));
      if (range != a.domain(s_star)) {
        return violation(ActionViolationKind::InverseMismatch,
                         s,
                         s_star,
                         0,
                         "the domain of alpha_{s*} is not the range of alpha_s");
      }
      for (auto x : bits(a.domain(s))) {
        auto y = a.image(s, static_cast<Point>(x));
        if (a.image(s_star, static_cast<Point>(y)) != static_cast<std::int32_t>(x)) {
          return violation(ActionViolationKind::InverseMismatch,
                           s,
                           s_star,
                           static_cast<Point>(x),
                           "alpha_{s*} does not invert alpha_s");
        }
      }
      if (a.domain(s) != a.edomain(S.source_idempotent(s))
          || range != a.edomain(S.range_idempotent(s))) {
        return violation(ActionViolationKind::DomainMismatch,
                         s,
                         s,
                         0,
                         "dom(s) != D_{s*s} or range(s) != D_{ss*} for s = "
                             + S.label(s));
      }
    }
    return std::nullopt;
  }

  void require_valid_action(FiniteAction const& a) {
    if (auto v = validate_action(a)) {
      throw Error(ErrorCode::InvalidAction,
                  std::string(to_string(v->kind)) + ": " + v->message);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // The action on filters and characters
  ////////////////////////////////////////////////////////////////////////

  Filter beta_on_filter(InverseSemigroup const& S, Element s, Filter const& xi) {
    if (!xi.contains(S.source_idempotent(s))) {
      throw Error(ErrorCode::NotInDomain,
                  "s*s is not in the filter, s = " + S.label(s));
    }
    IndexSet members(S.size());
    for (auto e : bits(xi.members())) {
      Element const ses = S.conjugate(s, static_cast<Element>(e));
      for (auto f : S.idempotents()) {
        if (S.product(ses, f) == ses) {
          members.set(f);
        }
      }
    }
    return Filter::from_members(S, std::move(members));
  }

  Character beta_on_character(InverseSemigroup const& S,
                              Element                 s,
                              Character const&        c) {
    if (c(S.source_idempotent(s)) != 1) {
      throw Error(ErrorCode::NotInDomain,
                  "the character vanishes at s*s, s = " + S.label(s));
    }
    IndexSet ones(S.size());
    for (auto e : S.idempotents()) {
      if (c(S.product(S.star(s), e, s)) == 1) {
        ones.set(e);
      }
    }
    return Character(std::move(ones));
  }

  FiniteAction standard_action(std::shared_ptr<InverseSemigroup const> S,
                               TightSpectrum const&                    spectrum) {
    if (spectrum.size() == 0) {
      throw Error(ErrorCode::EmptySpectrum, "the tight spectrum is empty");
    }
    auto const                             N = spectrum.size();
    std::vector<std::vector<std::int32_t>> maps(
        S->size(), std::vector<std::int32_t>(N, kUndefined));
    for (Element s = 0; s < S->size(); ++s) {
      Element const ss = S->source_idempotent(s);
      for (Point x = 0; x < N; ++x) {
        if (!spectrum[x].contains(ss)) {
          continue;
        }
        Filter image = beta_on_filter(*S, s, spectrum[x]);
        auto   y     = spectrum.index_of(image);
        if (!y) {
          throw TheoremViolation("tight spectrum invariance",
                                 "theta_" + S->label(s)
                                     + " maps a tight filter outside the "
                                       "tight spectrum",
                                 "");
        }
        maps[s][x] = static_cast<std::int32_t>(*y);
      }
    }
    return FiniteAction(std::move(S), N, std::move(maps));
  }

  bool has_discrete_basis(FiniteAction const& a) {
    for (Point x = 0; x < a.carrier_size(); ++x) {
      bool isolated = false;
      for (auto e : a.semigroup().idempotents()) {
        if (a.edomain(e).count() == 1 && a.edomain(e).test(x)) {
          isolated = true;
          break;
        }
      }
      if (!isolated) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixed points
  ////////////////////////////////////////////////////////////////////////

  IndexSet x_alpha_s(FiniteAction const& a, Element s) {
    IndexSet result(a.carrier_size());
    Ideal const below = j_s(a.semigroup(), s);
    for (auto e : bits(below.members())) {
      result |= a.edomain(static_cast<Element>(e));
    }
    return result;
  }

  IndexSet fixed_points(FiniteAction const& a, Element s) {
    IndexSet result(a.carrier_size());
    for (auto x : bits(a.domain(s))) {
      if (a.image(s, static_cast<Point>(x)) == static_cast<std::int32_t>(x)) {
        result.set(x);
      }
    }
    return result;
  }

  IndexSet trivial_fixed_points(FiniteAction const& a, Element s) {
    auto const& S = a.semigroup();
    IndexSet    result(a.carrier_size());
    for (auto x : bits(a.domain(s))) {
      for (auto e : S.idempotents()) {
        if (S.nat_leq(e, s) && a.edomain(e).test(x)) {
          result.set(x);
          break;
        }
      }
    }
    return result;
  }

  FreenessVerdict is_free(FiniteAction const& a) {
    for (Element s = 0; s < a.semigroup().size(); ++s) {
      IndexSet nontrivial = fixed_points(a, s) - trivial_fixed_points(a, s);
      if (nontrivial.any()) {
        return FreenessVerdict{
            false, s, static_cast<Point>(nontrivial.find_first())};
      }
    }
    return FreenessVerdict{};
  }

  FreenessVerdict is_topologically_free(FiniteAction const& a) {
    for (Element s = 0; s < a.semigroup().size(); ++s) {
      IndexSet nontrivial
          = a.interior(fixed_points(a, s)) - trivial_fixed_points(a, s);
      if (nontrivial.any()) {
        return FreenessVerdict{
            false, s, static_cast<Point>(nontrivial.find_first())};
      }
    }
    return FreenessVerdict{};
  }

  ////////////////////////////////////////////////////////////////////////
  // Orbits
  ////////////////////////////////////////////////////////////////////////

  OrbitPartition orbit_partition(FiniteAction const& a) {
    auto const                           N = a.carrier_size();
    boost::disjoint_sets_with_storage<> sets(N);
    for (Element s = 0; s < a.semigroup().size(); ++s) {
      for (auto x : bits(a.domain(s))) {
        sets.union_set(x, static_cast<std::size_t>(a.image(s, static_cast<Point>(x))));
      }
    }
    OrbitPartition           result;
    std::vector<std::size_t> class_of_root(N, N);
    result.class_of.resize(N);
    for (std::size_t x = 0; x < N; ++x) {
      auto root = sets.find_set(x);
      if (class_of_root[root] == N) {
        class_of_root[root] = result.classes.size();
        result.classes.emplace_back(N);
      }
      result.classes[class_of_root[root]].set(x);
      result.class_of[x] = class_of_root[root];
    }
    return result;
  }

  IndexSet orbit(FiniteAction const& a, Point x) {
    auto partition = orbit_partition(a);
    return partition.classes[partition.class_of[x]];
  }

  IndexSet orb(FiniteAction const& a, IndexSet const& V) {
    IndexSet result(a.carrier_size());
    for (Element s = 0; s < a.semigroup().size(); ++s) {
      result |= a.image_of(s, V);
    }
    return result;
  }

  bool is_irreducible(FiniteAction const& a) {
    return orbit_partition(a).classes.size() <= 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Local contraction
  ////////////////////////////////////////////////////////////////////////

  bool search_locally_contracting_action(FiniteAction const& a) {
    auto const N = a.carrier_size();
    if (N == 0) {
      return false;
    }
    if (N > 20) {
      throw Error(ErrorCode::CapExceeded,
                  "exhaustive search is limited to 20 points");
    }
    auto const&                S    = a.semigroup();
    std::uint64_t const        full = (std::uint64_t{1} << N) - 1;
    std::vector<std::uint64_t> dom(S.size(), 0);
    for (Element s = 0; s < S.size(); ++s) {
      for (auto x : bits(a.domain(s))) {
        dom[s] |= std::uint64_t{1} << x;
      }
    }
    auto image = [&](Element s, std::uint64_t V) {
      std::uint64_t result = 0;
      for (std::size_t x = 0; x < N; ++x) {
        if (V >> x & 1U) {
          result |= std::uint64_t{1} << a.image(s, static_cast<Point>(x));
        }
      }
      return result;
    };
    for (std::uint64_t U = 1; U <= full; ++U) {
      bool found = false;
      // nonempty V inside U; closure(V) = V
      for (std::uint64_t V = U; V != 0 && !found; V = (V - 1) & U) {
        for (Element s = 0; s < S.size() && !found; ++s) {
          if ((V & ~dom[s]) != 0) {
            continue;
          }
          std::uint64_t const W = image(s, V);
          found                 = (W & ~V) == 0 && W != V;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  LocalContractionVerdict is_locally_contracting_action(FiniteAction const& a) {
    if (a.carrier_size() == 0) {
      return LocalContractionVerdict{false, ContractionReason::EmptySpectrum, {}};
    }
    LocalContractionVerdict verdict{
        false, ContractionReason::CardinalityObstruction, {}};
    if (a.carrier_size() <= kActionSearchLimit) {
      verdict.search = search_locally_contracting_action(a);
      if (*verdict.search) {
        throw TheoremViolation("local contraction (action)",
                               "the exhaustive search found a contraction on "
                               "a finite carrier",
                               "");
      }
    }
    return verdict;
  }

}  // namespace isg
