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

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "isg/corpus.hpp"
#include "isg/fixtures.hpp"

namespace isg::oracle {

  std::vector<Element> idempotents(InverseSemigroup const& S) {
    std::vector<Element> result;
    for (Element s = 0; s < S.size(); ++s) {
      if (S.product(s, s) == s) {
        result.push_back(s);
      }
    }
    return result;
  }

  bool leq(InverseSemigroup const& S, Element e, Element f) {
    return S.product(e, f) == e;
  }

  namespace {
    IndexSet from_mask(InverseSemigroup const& S, std::vector<Element> const& E, std::uint64_t m) {
      IndexSet result(S.size());
      for (std::size_t i = 0; i < E.size(); ++i) {
        if (m >> i & 1U) {
          result.set(E[i]);
        }
      }
      return result;
    }

    std::vector<Element> members(IndexSet const& set) {
      std::vector<Element> result;
      for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) {
        result.push_back(static_cast<Element>(i));
      }
      return result;
    }

    bool is_filter(InverseSemigroup const& S, std::vector<Element> const& E, IndexSet const& F) {
      if (F.none() || F.test(S.zero())) {
        return false;
      }
      for (auto e : members(F)) {
        for (auto f : members(F)) {
          if (!F.test(S.product(e, f))) {
            return false;
          }
        }
        for (auto f : E) {
          if (leq(S, e, f) && !F.test(f)) {
            return false;
          }
        }
      }
      return true;
    }

    // nonzero members of E^{X,Y}
    std::vector<Element> exy(InverseSemigroup const&     S,
                             std::vector<Element> const& E,
                             std::vector<Element> const& X,
                             std::vector<Element> const& Y) {
      std::vector<Element> result;
      for (auto e : E) {
        if (e == S.zero()) {
          continue;
        }
        bool ok = std::all_of(X.begin(), X.end(), [&](auto x) { return leq(S, e, x); })
                  && std::all_of(Y.begin(), Y.end(),
                                 [&](auto y) { return S.product(e, y) == S.zero(); });
        if (ok) {
          result.push_back(e);
        }
      }
      return result;
    }

    std::vector<Element> pick(std::vector<Element> const& from, std::uint64_t mask) {
      std::vector<Element> result;
      for (std::size_t i = 0; i < from.size(); ++i) {
        if (mask >> i & 1U) {
          result.push_back(from[i]);
        }
      }
      return result;
    }

    bool meets_some(InverseSemigroup const& S, Element g, std::vector<Element> const& C) {
      return std::any_of(C.begin(), C.end(),
                         [&](auto c) { return S.product(g, c) != S.zero(); });
    }
  }  // namespace

  std::vector<IndexSet> filters(InverseSemigroup const& S) {
    auto const E = idempotents(S);
    if (E.size() > 16) {
      throw std::invalid_argument("oracle::filters needs |E| <= 16");
    }
    std::vector<IndexSet> result;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << E.size()); ++m) {
      auto F = from_mask(S, E, m);
      if (is_filter(S, E, F)) {
        result.push_back(std::move(F));
      }
    }
    return result;
  }

  bool literal_is_tight(InverseSemigroup const& S, IndexSet const& xi) {
    auto const E = idempotents(S);
    if (E.size() > 10) {
      throw std::invalid_argument("oracle::literal_is_tight needs |E| <= 10");
    }
    std::vector<Element> in, out;
    for (auto e : E) {
      (xi.test(e) ? in : out).push_back(e);
    }
    for (std::uint64_t mx = 0; mx < (std::uint64_t{1} << in.size()); ++mx) {
      auto const X = pick(in, mx);
      for (std::uint64_t my = 0; my < (std::uint64_t{1} << out.size()); ++my) {
        auto const Y     = pick(out, my);
        auto const ideal = exy(S, E, X, Y);
        // Z ranges over subsets of the ideal (zero adds nothing to a cover)
        for (std::uint64_t mz = 0; mz < (std::uint64_t{1} << ideal.size()); ++mz) {
          auto const Z = pick(ideal, mz);
          bool const cover = std::all_of(ideal.begin(), ideal.end(),
                                         [&](auto g) { return meets_some(S, g, Z); });
          if (cover && std::none_of(Z.begin(), Z.end(), [&](auto z) { return xi.test(z); })) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<IndexSet> ultrafilters_by_meets(InverseSemigroup const& S) {
    auto const            E = idempotents(S);
    std::vector<IndexSet> candidates;
    if (E.size() <= 16) {
      candidates = filters(S);
    } else {
      // every filter of a finite semilattice is the up-set of its meet
      for (auto e : E) {
        if (e == S.zero()) {
          continue;
        }
        IndexSet up(S.size());
        for (auto f : E) {
          if (leq(S, e, f)) {
            up.set(f);
          }
        }
        candidates.push_back(std::move(up));
      }
    }
    std::vector<IndexSet> result;
    for (auto const& F : candidates) {
      bool ultra = true;
      for (auto f : E) {
        if (f == S.zero() || F.test(f)) {
          continue;
        }
        auto const m = members(F);
        if (std::all_of(m.begin(), m.end(),
                        [&](auto e) { return S.product(e, f) != S.zero(); })) {
          ultra = false;
          break;
        }
      }
      if (ultra) {
        result.push_back(F);
      }
    }
    return result;
  }

  Element point_idempotent(FiniteAction const& a, Point x) {
    auto const& S      = a.semigroup();
    Element     result = S.zero();
    bool        first  = true;
    for (auto e : idempotents(S)) {
      if (a.in_domain(e, x)) {
        result = first ? e : S.product(result, e);
        first  = false;
      }
    }
    return result;
  }

  bool germ_equivalent(FiniteAction const& a, Element s, Element t, Point x) {
    auto const& S  = a.semigroup();
    Element     ex = point_idempotent(a, x);
    return S.product(s, ex) == S.product(t, ex);
  }

  bool literal_contraction_at(InverseSemigroup const& S, Element e) {
    auto E = idempotents(S);
    E.erase(std::remove(E.begin(), E.end(), S.zero()), E.end());
    if (E.size() > 10) {
      throw std::invalid_argument("oracle::literal_contraction_at needs |E| <= 10");
    }
    for (Element s = 0; s < S.size(); ++s) {
      Element const top = S.product(e, S.product(S.star(s), s));
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << E.size()); ++m) {
        auto const F = pick(E, m);
        if (!std::all_of(F.begin(), F.end(), [&](auto f) { return leq(S, f, top); })) {
          continue;
        }
        bool covers = std::all_of(F.begin(), F.end(), [&](auto f) {
          return outer_cover(S, F, S.product(S.product(s, f), S.star(s)));
        });
        if (!covers) {
          continue;
        }
        for (auto f0 : F) {
          if (std::all_of(F.begin(), F.end(), [&](auto f) {
                return S.product(S.product(f0, s), f) == S.zero();
              })) {
            return true;
          }
        }
      }
    }
    return false;
  }

  bool literal_fixed_cover(InverseSemigroup const& S, Element e, Element s) {
    std::vector<Element> fixed;
    for (auto f : idempotents(S)) {
      if (f != S.zero() && S.product(s, f) == f && leq(S, f, e)) {
        fixed.push_back(f);
      }
    }
    auto const below = exy(S, idempotents(S), {e}, {});
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << fixed.size()); ++m) {
      auto const C = pick(fixed, m);
      if (std::all_of(below.begin(), below.end(), [&](auto g) { return meets_some(S, g, C); })) {
        return true;
      }
    }
    return false;
  }

  bool outer_cover(InverseSemigroup const& S, std::vector<Element> const& C, Element e) {
    auto const below = exy(S, idempotents(S), {e}, {});
    return std::all_of(below.begin(), below.end(), [&](auto g) { return meets_some(S, g, C); });
  }

  std::vector<PartialMap> random_injections(std::mt19937_64& rng,
                                            std::size_t      degree,
                                            std::size_t      k) {
    std::vector<PartialMap> result;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::int32_t> perm(degree);
      for (std::size_t x = 0; x < degree; ++x) {
        perm[x] = static_cast<std::int32_t>(x);
      }
      for (std::size_t x = degree; x > 1; --x) {
        std::swap(perm[x - 1], perm[uniform_below(rng, x)]);
      }
      for (auto& y : perm) {
        if (uniform_below(rng, 4) == 0) {
          y = kUndefined;
        }
      }
      result.emplace_back(std::move(perm));
    }
    return result;
  }

  InverseSemigroup random_semilattice(std::mt19937_64& rng,
                                      std::size_t      points,
                                      std::size_t      generators) {
    std::set<std::uint32_t> family{0};
    for (std::size_t i = 0; i < generators; ++i) {
      family.insert(static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << points)));
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> current(family.begin(), family.end());
      for (auto a : current) {
        for (auto b : current) {
          grew = family.insert(a & b).second || grew;
        }
      }
    }
    std::vector<std::uint32_t>         sets(family.begin(), family.end());
    std::map<std::uint32_t, Element>   index;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      index[sets[i]] = static_cast<Element>(i);
    }
    Table table(sets.size(), std::vector<Element>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        table[i][j] = index[sets[i] & sets[j]];
      }
    }
    return InverseSemigroup::from_table(table, index[0]);
  }

  std::vector<InverseSemigroup> small_instances(std::uint64_t seed, std::size_t count) {
    std::vector<InverseSemigroup> result;
    for (auto const& name : fixture_names()) {
      result.push_back(build_fixture(name));
    }
    std::mt19937_64 rng(seed);
    while (result.size() < count) {
      if (result.size() % 3 == 2) {
        auto S = random_semilattice(rng, 3, 2 + uniform_below(rng, 4));
        if (S.idempotents().size() >= 2) {
          result.push_back(std::move(S));
        }
        continue;
      }
      std::size_t const degree = 2 + uniform_below(rng, 2);
      auto gens = random_injections(rng, degree, 1 + uniform_below(rng, 3));
      auto S    = from_partial_maps(degree, gens).semigroup;
      if (S.idempotents().size() >= 2) {
        result.push_back(std::move(S));
      }
    }
    return result;
  }

}  // namespace isg::oracle
