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

#include "isg/germs.hpp"

#include <unordered_map>

#include <boost/pending/disjoint_sets.hpp>

#include "isg/error.hpp"

namespace isg {

  std::optional<Arrow> GermGroupoid::germ_of(Element s, Point x) const {
    Arrow a = _class[s * unit_count() + x];
    if (a == kNoArrow) {
      return std::nullopt;
    }
    return a;
  }

  std::optional<Arrow> GermGroupoid::compose(Arrow a, Arrow b) const {
    if (_src[a] != _rng[b]) {
      return std::nullopt;
    }
    Element const st
        = _action.semigroup().product(_arrows[a].rep_s, _arrows[b].rep_s);
    return germ_of(st, _arrows[b].rep_x);
  }

  std::string GermGroupoid::label(Arrow a) const {
    return "[" + _action.semigroup().label(_arrows[a].rep_s) + ","
           + std::to_string(_arrows[a].rep_x) + "]";
  }

  GermGroupoid build_germ_groupoid(FiniteAction const& a) {
    if (auto v = validate_action(a)) {
      throw Error(ErrorCode::InvalidAction,
                  std::string(to_string(v->kind)) + ": " + v->message);
    }
    auto const& S = a.semigroup();
    auto const  n = S.size();
    auto const  N = a.carrier_size();

    // (s, x) and (t, x) are equivalent when s e = t e for some e with x in
    // D_e. For fixed (x, e) this groups the s with x in dom(s) by s e.
    boost::disjoint_sets_with_storage<> sets(n * N);
    std::unordered_map<Element, std::size_t> bucket;
    for (Point x = 0; x < N; ++x) {
      for (auto e : S.idempotents()) {
        if (!a.edomain(e).test(x)) {
          continue;
        }
        bucket.clear();
        for (Element s = 0; s < n; ++s) {
          if (!a.in_domain(s, x)) {
            continue;
          }
          auto [it, inserted] = bucket.emplace(S.product(s, e), s * N + x);
          if (!inserted) {
            sets.union_set(it->second, s * N + x);
          }
        }
      }
    }

    GermGroupoid g(a);
    g._class.assign(n * N, kNoArrow);
    std::vector<Arrow> arrow_of_root(n * N, kNoArrow);
    for (Element s = 0; s < n; ++s) {
      for (Point x = 0; x < N; ++x) {
        if (!a.in_domain(s, x)) {
          continue;
        }
        auto root = sets.find_set(s * N + x);
        if (arrow_of_root[root] == kNoArrow) {
          arrow_of_root[root] = static_cast<Arrow>(g._arrows.size());
          g._arrows.push_back(Germ{s, x, g._arrows.size()});
        }
        g._class[s * N + x] = arrow_of_root[root];
      }
    }
    // the loop visits s in increasing order, so class ids follow the order
    // of the smallest representatives

    auto const m = g._arrows.size();
    g._src.resize(m);
    g._rng.resize(m);
    g._inv.resize(m);
    for (Arrow i = 0; i < m; ++i) {
      auto const [s, x, id] = g._arrows[i];
      g._src[i]             = x;
      g._rng[i]             = static_cast<Point>(a.image(s, x));
      g._inv[i]             = g._class[S.star(s) * N + g._rng[i]];
    }

    g._units.resize(m);
    g._unit_of.assign(N, kNoArrow);
    for (auto e : S.idempotents()) {
      for (auto x : bits(a.edomain(e))) {
        Arrow u = g._class[e * N + x];
        if (g._unit_of[x] == kNoArrow) {
          g._unit_of[x] = u;
        } else if (g._unit_of[x] != u) {
          throw TheoremViolation(
              "unit space",
              "the unit over point " + std::to_string(x)
                  + " depends on the idempotent chosen",
              "");
        }
        g._units.set(u);
      }
    }
    return g;
  }

  IndexSet theta_slice(GermGroupoid const& g, Element s, IndexSet const& U) {
    auto const& a = g.action();
    if (!U.is_subset_of(a.domain(s))) {
      throw Error(ErrorCode::DomainViolation,
                  "U is not contained in the domain of "
                      + a.semigroup().label(s));
    }
    IndexSet result(g.size());
    for (auto x : bits(U)) {
      result.set(*g.germ_of(s, static_cast<Point>(x)));
    }
    return result;
  }

  bool is_bisection(GermGroupoid const& g, IndexSet const& arrows) {
    IndexSet srcs(g.unit_count());
    IndexSet rngs(g.unit_count());
    for (auto i : bits(arrows)) {
      auto const a = static_cast<Arrow>(i);
      if (srcs.test(g.src(a)) || rngs.test(g.rng(a))) {
        return false;
      }
      srcs.set(g.src(a));
      rngs.set(g.rng(a));
    }
    return true;
  }

  IndexSet isotropy_bundle(GermGroupoid const& g) {
    IndexSet result(g.size());
    for (Arrow a = 0; a < g.size(); ++a) {
      if (g.src(a) == g.rng(a)) {
        result.set(a);
      }
    }
    return result;
  }

  IndexSet isotropy_group(GermGroupoid const& g, Point x) {
    IndexSet result(g.size());
    for (Arrow a = 0; a < g.size(); ++a) {
      if (g.src(a) == x && g.rng(a) == x) {
        result.set(a);
      }
    }
    return result;
  }

  bool is_principal(GermGroupoid const& g) {
    return isotropy_bundle(g) == g.units();
  }

  bool is_essentially_principal(GermGroupoid const& g) {
    // the interior of a set of arrows is the set itself
    IndexSet const interior = isotropy_bundle(g);
    return interior == g.units();
  }

  std::optional<Element> slice_identity_failure(GermGroupoid const& g) {
    auto const& a = g.action();
    auto const& S = a.semigroup();
    for (Element s = 0; s < S.size(); ++s) {
      IndexSet lhs
          = theta_slice(g, s, a.edomain(S.source_idempotent(s))) & g.units();
      IndexSet rhs = theta_slice(g, s, x_alpha_s(a, s));
      if (lhs != rhs) {
        return s;
      }
    }
    return std::nullopt;
  }

  bool is_hausdorff_direct(GermGroupoid const& g) {
    // The complement of the units is a union of singletons, hence open, so
    // the unit space is closed.
    bool const unit_space_closed = true;
    return unit_space_closed && !slice_identity_failure(g).has_value();
  }

  bool is_minimal_groupoid(GermGroupoid const& g) {
    if (g.unit_count() <= 1) {
      return true;
    }
    boost::disjoint_sets_with_storage<> sets(g.unit_count());
    for (Arrow a = 0; a < g.size(); ++a) {
      sets.union_set(g.src(a), g.rng(a));
    }
    auto root = sets.find_set(std::size_t{0});
    for (Point x = 1; x < g.unit_count(); ++x) {
      if (sets.find_set(std::size_t{x}) != root) {
        return false;
      }
    }
    return true;
  }

  bool search_locally_contracting_groupoid(GermGroupoid const& g) {
    auto const m = g.size();
    auto const N = g.unit_count();
    if (N == 0) {
      return false;
    }
    if (m > 20) {
      throw Error(ErrorCode::CapExceeded,
                  "exhaustive search is limited to 20 arrows");
    }
    struct Bisection {
      std::uint64_t src_mask;
      std::vector<std::pair<Point, Point>> pairs;
    };
    std::vector<Bisection> bisections;
    for (std::uint64_t B = 1; B < (std::uint64_t{1} << m); ++B) {
      IndexSet arrows(m, B);
      if (!is_bisection(g, arrows)) {
        continue;
      }
      Bisection b{0, {}};
      for (auto i : bits(arrows)) {
        auto const a = static_cast<Arrow>(i);
        b.src_mask |= std::uint64_t{1} << g.src(a);
        b.pairs.emplace_back(g.src(a), g.rng(a));
      }
      bisections.push_back(std::move(b));
    }
    std::uint64_t const full = (std::uint64_t{1} << N) - 1;
    for (std::uint64_t U = 1; U <= full; ++U) {
      bool found = false;
      for (std::uint64_t V = U; V != 0 && !found; V = (V - 1) & U) {
        for (auto const& b : bisections) {
          if ((V & ~b.src_mask) != 0) {
            continue;
          }
          std::uint64_t W = 0;
          for (auto [x, y] : b.pairs) {
            if (V >> x & 1U) {
              W |= std::uint64_t{1} << y;
            }
          }
          if ((W & ~V) == 0 && W != V) {
            found = true;
            break;
          }
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  LocalContractionVerdict is_locally_contracting_groupoid(GermGroupoid const& g) {
    if (g.unit_count() == 0) {
      return LocalContractionVerdict{false, ContractionReason::EmptySpectrum, {}};
    }
    LocalContractionVerdict verdict{
        false, ContractionReason::CardinalityObstruction, {}};
    if (g.size() <= kGroupoidSearchLimit) {
      verdict.search = search_locally_contracting_groupoid(g);
      if (*verdict.search) {
        throw TheoremViolation("local contraction (groupoid)",
                               "the exhaustive search found a contraction in "
                               "a finite groupoid",
                               "");
      }
    }
    return verdict;
  }

  std::optional<std::string> check_groupoid_axioms(GermGroupoid const& g) {
    auto const& a = g.action();
    auto const& S = a.semigroup();
    auto const  N = a.carrier_size();
    auto const  m = g.size();
    auto        name = [&](Arrow x) { return g.label(x); };

    for (Arrow x = 0; x < m; ++x) {
      Arrow const y = g.inv(x);
      if (g.inv(y) != x) {
        return "inv(inv(" + name(x) + ")) != " + name(x);
      }
      if (g.src(y) != g.rng(x) || g.rng(y) != g.src(x)) {
        return "inv(" + name(x) + ") has the wrong endpoints";
      }
      if (g.compose(x, y) != g.unit(g.rng(x))) {
        return name(x) + " inv(" + name(x) + ") is not the unit at its range";
      }
      if (g.compose(y, x) != g.unit(g.src(x))) {
        return "inv(" + name(x) + ") " + name(x) + " is not the unit at its source";
      }
      if (g.compose(g.unit(g.rng(x)), x) != x || g.compose(x, g.unit(g.src(x))) != x) {
        return "a unit law fails at " + name(x);
      }
    }

    // arrows grouped by range, for enumerating composable pairs
    std::vector<std::vector<Arrow>> into(N);
    for (Arrow x = 0; x < m; ++x) {
      into[g.rng(x)].push_back(x);
    }
    for (Arrow x = 0; x < m; ++x) {
      for (Arrow y : into[g.src(x)]) {
        auto xy = g.compose(x, y);
        if (!xy || g.src(*xy) != g.src(y) || g.rng(*xy) != g.rng(x)) {
          return "the product " + name(x) + " " + name(y) + " is malformed";
        }
        for (Arrow z : into[g.src(y)]) {
          auto lhs = g.compose(*xy, z);
          auto yz  = g.compose(y, z);
          if (!yz || lhs != g.compose(x, *yz)) {
            return "associativity fails at " + name(x) + ", " + name(y) + ", "
                   + name(z);
          }
        }
      }
    }

    // representatives: every pair in Omega, not just the canonical ones
    for (Element s = 0; s < S.size(); ++s) {
      for (auto x : bits(a.domain(s))) {
        auto const gx = *g.germ_of(s, static_cast<Point>(x));
        if (g.src(gx) != x
            || g.rng(gx) != static_cast<Point>(a.image(s, static_cast<Point>(x)))) {
          return "equivalent pairs have different images at " + name(gx);
        }
        auto const z = static_cast<Point>(a.image(s, static_cast<Point>(x)));
        if (g.germ_of(S.star(s), z) != g.inv(gx)) {
          return "the inverse depends on the representative of " + name(gx);
        }
        for (Element t = 0; t < S.size(); ++t) {
          if (!a.in_domain(t, z)) {
            continue;
          }
          auto const prod = g.germ_of(S.product(t, s), static_cast<Point>(x));
          if (prod != g.compose(*g.germ_of(t, z), gx)) {
            return "the product depends on the representatives of "
                   + name(*g.germ_of(t, z)) + " and " + name(gx);
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace isg
