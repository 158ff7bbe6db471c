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

#include "isg/ideal.hpp"

#include "isg/error.hpp"

namespace isg {

  Ideal unchecked_ideal(IndexSet members) {
    return Ideal(std::move(members));
  }

  bool is_ideal(InverseSemigroup const& S, IndexSet const& members) {
    if (members.size() != S.size() || !members.test(S.zero())
        || !members.is_subset_of(S.idempotent_set())) {
      return false;
    }
    for (auto e : bits(members)) {
      for (auto f : S.idempotents()) {
        if (!members.test(S.product(static_cast<Element>(e), f))) {
          return false;
        }
      }
    }
    return true;
  }

  Ideal Ideal::from_members(InverseSemigroup const& S, IndexSet members) {
    if (!is_ideal(S, members)) {
      throw Error(ErrorCode::NotAnIdeal,
                  "the given set is not a hereditary set of idempotents "
                  "containing zero");
    }
    return Ideal(std::move(members));
  }

  Ideal Ideal::whole(InverseSemigroup const& S) {
    return Ideal(S.idempotent_set());
  }

  IndexSet Ideal::nonzero_members(InverseSemigroup const& S) const {
    IndexSet result = _members;
    result.reset(S.zero());
    return result;
  }

  Ideal principal_ideal(InverseSemigroup const& S, Element e) {
    S.require_idempotent(e);
    IndexSet members(S.size());
    for (auto f : S.idempotents()) {
      if (S.product(e, f) == f) {
        members.set(f);
      }
    }
    return unchecked_ideal(std::move(members));
  }

  Ideal ideal_perp(InverseSemigroup const& S, Ideal const& J) {
    if (!is_ideal(S, J.members())) {
      throw Error(ErrorCode::NotAnIdeal, "argument of ideal_perp");
    }
    IndexSet members(S.size());
    for (auto f : S.idempotents()) {
      bool perp = true;
      for (auto e : bits(J.members())) {
        if (S.product(f, static_cast<Element>(e)) != S.zero()) {
          perp = false;
          break;
        }
      }
      if (perp) {
        members.set(f);
      }
    }
    return unchecked_ideal(std::move(members));
  }

  Ideal exy_ideal(InverseSemigroup const& S, IndexSet const& X, IndexSet const& Y) {
    IndexSet members = S.idempotent_set();
    for (auto x : bits(X)) {
      members &= principal_ideal(S, static_cast<Element>(x)).members();
    }
    for (auto y : bits(Y)) {
      S.require_idempotent(static_cast<Element>(y));
      for (auto f : S.idempotents()) {
        if (S.product(f, static_cast<Element>(y)) != S.zero()) {
          members.reset(f);
        }
      }
    }
    return unchecked_ideal(std::move(members));
  }

  Ideal j_s(InverseSemigroup const& S, Element s) {
    IndexSet members(S.size());
    for (auto e : S.idempotents()) {
      if (S.product(s, e) == e) {
        members.set(e);
      }
    }
    return unchecked_ideal(std::move(members));
  }

  Ideal ideal_union(Ideal const& I, Ideal const& J) {
    return unchecked_ideal(I.members() | J.members());
  }

  Ideal ideal_intersection(Ideal const& I, Ideal const& J) {
    return unchecked_ideal(I.members() & J.members());
  }

  std::optional<Element> meet_of(InverseSemigroup const& S, IndexSet const& X) {
    std::optional<Element> result;
    for (auto x : bits(X)) {
      S.require_idempotent(static_cast<Element>(x));
      result = result ? S.product(*result, static_cast<Element>(x))
                      : static_cast<Element>(x);
    }
    return result;
  }

  std::optional<Element> uncovered_witness(InverseSemigroup const& S,
                                           CoverCandidate const&   C,
                                           Ideal const&            J) {
    for (auto f : bits(J.members())) {
      if (f == S.zero()) {
        continue;
      }
      bool met = false;
      for (auto c : bits(C.members)) {
        if (S.product(static_cast<Element>(c), static_cast<Element>(f))
            != S.zero()) {
          met = true;
          break;
        }
      }
      if (!met) {
        return static_cast<Element>(f);
      }
    }
    return std::nullopt;
  }

  bool is_outer_cover(InverseSemigroup const& S,
                      CoverCandidate const&   C,
                      Ideal const&            J) {
    return !uncovered_witness(S, C, J).has_value();
  }

  bool is_cover(InverseSemigroup const& S,
                CoverCandidate const&   C,
                Ideal const&            J) {
    return C.members.is_subset_of(J.members()) && is_outer_cover(S, C, J);
  }

  CoverCandidate canonical_cover(InverseSemigroup const& S, Ideal const& J) {
    IndexSet maximal(S.size());
    for (auto f : bits(J.members())) {
      if (f == S.zero()) {
        continue;
      }
      bool is_max = true;
      for (auto g : bits(J.members())) {
        // f < g strictly
        if (g != f && S.product(static_cast<Element>(f), static_cast<Element>(g))
                          == f) {
          is_max = false;
          break;
        }
      }
      if (is_max) {
        maximal.set(f);
      }
    }
    return CoverCandidate{std::move(maximal)};
  }

  IdempotentTables::IdempotentTables(InverseSemigroup const& S)
      : _below(S.size()),
        _above(S.size()),
        _perp(S.size()),
        _meets(S.size()),
        _atoms(S.size()) {
    auto const n = S.size();
    for (auto e : S.idempotents()) {
      _below[e] = IndexSet(n);
      _above[e] = IndexSet(n);
      _perp[e]  = IndexSet(n);
      _meets[e] = IndexSet(n);
      for (auto f : S.idempotents()) {
        Element const ef = S.product(e, f);
        if (ef == f) {
          _below[e].set(f);
        }
        if (ef == e) {
          _above[e].set(f);
        }
        if (ef == S.zero()) {
          _perp[e].set(f);
        } else {
          _meets[e].set(f);
        }
      }
    }
    for (auto e : S.idempotents()) {
      if (e != S.zero() && _below[e].count() == 2) {
        _atoms.set(e);
      }
    }
  }

  bool is_e_star_unitary(InverseSemigroup const& S) {
    for (Element s = 0; s < S.size(); ++s) {
      if (!S.is_idempotent(s) && j_s(S, s).size() != 1) {
        return false;
      }
    }
    return true;
  }

}  // namespace isg
