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

#include "isg/spectrum.hpp"

#include <algorithm>

#include "isg/error.hpp"

namespace isg {

  namespace {
    void require_nonempty_spectrum(InverseSemigroup const& S) {
      if (S.idempotents().size() < 2) {
        throw Error(ErrorCode::EmptySpectrum,
                    "zero is the only idempotent, so there are no filters");
      }
    }

    bool covers(IndexSet const&         nonzero_ideal,
                IndexSet const&         Z,
                IdempotentTables const& tables) {
      for (auto f : bits(nonzero_ideal)) {
        if (!tables.meets(static_cast<Element>(f)).intersects(Z)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Filters and characters
  ////////////////////////////////////////////////////////////////////////

  Filter Filter::from_min(InverseSemigroup const& S, Element e) {
    S.require_idempotent(e);
    if (e == S.zero()) {
      throw Error(ErrorCode::ZeroGeneratesNoFilter,
                  "the up-set of zero contains zero");
    }
    IndexSet members(S.size());
    for (auto f : S.idempotents()) {
      if (S.product(e, f) == e) {
        members.set(f);
      }
    }
    return Filter(e, std::move(members));
  }

  bool is_filter(InverseSemigroup const& S, IndexSet const& members) {
    if (members.size() != S.size() || members.none() || members.test(S.zero())
        || !members.is_subset_of(S.idempotent_set())) {
      return false;
    }
    for (auto e : bits(members)) {
      for (auto f : bits(members)) {
        if (!members.test(
                S.product(static_cast<Element>(e), static_cast<Element>(f)))) {
          return false;
        }
      }
      for (auto f : S.idempotents()) {
        if (S.product(static_cast<Element>(e), f) == e && !members.test(f)) {
          return false;
        }
      }
    }
    return true;
  }

  Filter Filter::from_members(InverseSemigroup const& S, IndexSet members) {
    if (!is_filter(S, members)) {
      throw Error(ErrorCode::NotAFilter,
                  "the given set is not a filter of the idempotents");
    }
    auto min = meet_of(S, members);
    return Filter(*min, std::move(members));
  }

  bool is_character(InverseSemigroup const& S, Character const& c) {
    IndexSet const& ones = c.ones();
    if (ones.size() != S.size() || ones.none() || ones.test(S.zero())
        || !ones.is_subset_of(S.idempotent_set())) {
      return false;
    }
    for (auto e : S.idempotents()) {
      for (auto f : S.idempotents()) {
        if (c(S.product(e, f)) != c(e) * c(f)) {
          return false;
        }
      }
    }
    return true;
  }

  Character char_of(InverseSemigroup const&, Filter const& f) {
    return Character(f.members());
  }

  Filter filter_of(InverseSemigroup const& S, Character const& c) {
    if (!is_character(S, c)) {
      throw Error(ErrorCode::NotACharacter,
                  "the map is zero, nonzero at 0, or not multiplicative");
    }
    return Filter::from_members(S, c.ones());
  }

  std::vector<Filter> all_filters(InverseSemigroup const& S) {
    require_nonempty_spectrum(S);
    std::vector<Filter> result;
    for (auto e : S.idempotents()) {
      if (e != S.zero()) {
        result.push_back(Filter::from_min(S, e));
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ultrafilters and the basic open sets
  ////////////////////////////////////////////////////////////////////////

  bool is_ultrafilter(InverseSemigroup const& S, Filter const& f) {
    for (auto const& g : all_filters(S)) {
      if (f.members().is_proper_subset_of(g.members())) {
        return false;
      }
    }
    return true;
  }

  std::vector<Filter> ultrafilters(InverseSemigroup const& S) {
    std::vector<Filter> result;
    for (auto& f : all_filters(S)) {
      if (is_ultrafilter(S, f)) {
        result.push_back(std::move(f));
      }
    }
    return result;
  }

  std::vector<Filter> basic_open(InverseSemigroup const& S,
                                 IndexSet const&         X,
                                 IndexSet const&         Y) {
    std::vector<Filter> result;
    if (S.idempotents().size() < 2) {
      return result;
    }
    for (auto& f : all_filters(S)) {
      if (X.is_subset_of(f.members()) && !Y.intersects(f.members())) {
        result.push_back(std::move(f));
      }
    }
    return result;
  }

  Element neighbourhood_idempotent(InverseSemigroup const& S,
                                   Filter const&           xi,
                                   IndexSet const&         X,
                                   IndexSet const&         Y) {
    if (!is_ultrafilter(S, xi) || !X.is_subset_of(xi.members())
        || Y.intersects(xi.members())) {
      throw Error(ErrorCode::PreconditionViolated,
                  "expected an ultrafilter lying in U(X, Y)");
    }
    Element e = xi.min();
    if (auto x0 = meet_of(S, X)) {
      e = *x0;
    }
    for (auto y : bits(Y)) {
      auto const& m = xi.members();
      // an ultrafilter misses y only because one of its members is
      // orthogonal to y
      auto it = std::find_if(bits(m).begin(), bits(m).end(), [&](auto f) {
        return S.product(static_cast<Element>(f), static_cast<Element>(y))
               == S.zero();
      });
      if (it == bits(m).end()) {
        throw Error(ErrorCode::PreconditionViolated,
                    "no member of the filter is orthogonal to "
                        + S.label(static_cast<Element>(y)));
      }
      e = S.product(e, static_cast<Element>(*it));
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tightness
  ////////////////////////////////////////////////////////////////////////

  std::optional<TightnessViolation> tightness_violation(InverseSemigroup const& S,
                                                        Filter const& xi) {
    IdempotentTables const tables(S);
    std::size_t const      n = S.size();

    std::vector<std::optional<Element>> xs;
    for (auto x : bits(xi.members())) {
      xs.emplace_back(static_cast<Element>(x));
    }
    xs.emplace_back(std::nullopt);

    std::vector<std::optional<Element>> ys{std::nullopt};
    for (auto y : S.idempotents()) {
      if (!xi.contains(y)) {
        ys.emplace_back(y);
      }
    }

    for (auto const& x : xs) {
      IndexSet const& base = x ? tables.below(*x) : S.idempotent_set();
      for (auto const& y : ys) {
        IndexSet ideal = y ? (base & tables.perp(*y)) : base;
        ideal.reset(S.zero());
        IndexSet Z = ideal - xi.members();
        if (covers(ideal, Z, tables)) {
          return TightnessViolation{x ? make_set(n, {*x}) : IndexSet(n),
                                    y ? make_set(n, {*y}) : IndexSet(n),
                                    std::move(Z)};
        }
      }
    }
    return std::nullopt;
  }

  bool is_tight_filter(InverseSemigroup const& S, Filter const& xi) {
    return !tightness_violation(S, xi).has_value();
  }

  TightSpectrum::TightSpectrum(std::vector<Filter> points)
      : _points(std::move(points)) {
    std::sort(_points.begin(), _points.end());
    _points.erase(std::unique(_points.begin(), _points.end()), _points.end());
    for (auto const& f : _points) {
      _mins.push_back(f.min());
    }
  }

  std::optional<Point> TightSpectrum::index_of_min(Element min) const {
    auto it = std::lower_bound(_mins.begin(), _mins.end(), min);
    if (it == _mins.end() || *it != min) {
      return std::nullopt;
    }
    return static_cast<Point>(it - _mins.begin());
  }

  std::optional<Point> TightSpectrum::index_of(Filter const& f) const {
    return index_of_min(f.min());
  }

  TightSpectrum tight_spectrum(InverseSemigroup const& S) {
    std::vector<Filter> points;
    for (auto& f : all_filters(S)) {
      if (is_tight_filter(S, f)) {
        points.push_back(std::move(f));
      }
    }
    return TightSpectrum(std::move(points));
  }

}  // namespace isg
