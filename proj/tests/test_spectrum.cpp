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

#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>

#include "isg/corpus.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/spectrum.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace isg;
using isg::test::el;
using isg::test::set_of;

namespace {
  std::vector<IndexSet> member_sets(std::vector<Filter> const& fs) {
    std::vector<IndexSet> result;
    for (auto const& f : fs) {
      result.push_back(f.members());
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<IndexSet> sorted(std::vector<IndexSet> v) {
    std::sort(v.begin(), v.end());
    return v;
  }
}  // namespace

TEST_CASE("filter_from_min", "[spectrum]") {
  auto E4 = build_fixture("E4");
  CHECK(Filter::from_min(E4, el(E4, "1")).members() == set_of(E4, {"1"}));
  CHECK(Filter::from_min(E4, el(E4, "a")).members() == set_of(E4, {"a", "1"}));
  CHECK(Filter::from_min(E4, el(E4, "a")).min() == el(E4, "a"));
  CHECK_THROWS_AS(Filter::from_min(E4, E4.zero()), Error);
  auto B2 = build_fixture("B2");
  CHECK_THROWS_AS(Filter::from_min(B2, el(B2, "e12")), Error);
}

TEST_CASE("all_filters", "[spectrum]") {
  auto E4 = build_fixture("E4");
  auto fs = all_filters(E4);
  REQUIRE(fs.size() == 3);
  CHECK(all_filters(build_fixture("B2")).size() == 2);
  auto Z = build_fixture("Z2z");
  REQUIRE(all_filters(Z).size() == 1);
  CHECK(all_filters(Z)[0].members() == set_of(Z, {"1"}));
  auto trivial = InverseSemigroup::from_table({{0}}, 0);
  try {
    all_filters(trivial);
    FAIL("expected EmptySpectrum");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::EmptySpectrum);
  }
}

TEST_CASE("characters", "[spectrum]") {
  auto E4 = build_fixture("E4");
  auto c  = char_of(E4, Filter::from_min(E4, el(E4, "a")));
  CHECK(c(el(E4, "a")) == 1);
  CHECK(c(el(E4, "1")) == 1);
  CHECK(c(el(E4, "b")) == 0);
  CHECK(c(E4.zero()) == 0);
  for (auto const& name : fixture_names()) {
    auto S = build_fixture(name);
    for (auto const& f : all_filters(S)) {
      CHECK(filter_of(S, char_of(S, f)) == f);
      CHECK(filter_of(S, char_of(S, f)).members() == f.members());
    }
  }
  CHECK_THROWS_AS(filter_of(E4, Character(set_of(E4, {"a", "b", "1"}))), Error);
  CHECK_THROWS_AS(filter_of(E4, Character(set_of(E4, {}))), Error);
  CHECK_FALSE(is_character(E4, Character(set_of(E4, {"0", "a", "1"}))));
}

TEST_CASE("ultrafilters", "[spectrum]") {
  auto E4 = build_fixture("E4");
  CHECK(is_ultrafilter(E4, Filter::from_min(E4, el(E4, "a"))));
  CHECK_FALSE(is_ultrafilter(E4, Filter::from_min(E4, el(E4, "1"))));
  auto Z = build_fixture("Z2z");
  CHECK(is_ultrafilter(Z, Filter::from_min(Z, el(Z, "1"))));
  auto I2 = build_fixture("I2");
  auto u  = ultrafilters(I2);
  REQUIRE(u.size() == 2);
  CHECK(member_sets(u)
        == sorted({Filter::from_min(I2, el(I2, "(0 _)")).members(),
                   Filter::from_min(I2, el(I2, "(_ 1)")).members()}));
}

TEST_CASE("basic_open", "[spectrum]") {
  auto     E4 = build_fixture("E4");
  IndexSet none(E4.size());
  CHECK(basic_open(E4, none, none).size() == 3);
  auto U = basic_open(E4, set_of(E4, {"1"}), set_of(E4, {"a"}));
  REQUIRE(U.size() == 2);
  CHECK(U[0].min() == el(E4, "b"));
  CHECK(U[1].min() == el(E4, "1"));
  CHECK(basic_open(E4, set_of(E4, {"a"}), set_of(E4, {"1"})).empty());
}

TEST_CASE("tight filters", "[spectrum]") {
  auto E4 = build_fixture("E4");
  auto v  = tightness_violation(E4, Filter::from_min(E4, el(E4, "1")));
  REQUIRE(v.has_value());
  CHECK(v->X == set_of(E4, {"1"}));
  CHECK(v->Y.none());
  CHECK(v->Z == set_of(E4, {"a", "b"}));
  auto Z = build_fixture("Z2z");
  CHECK(is_tight_filter(Z, Filter::from_min(Z, el(Z, "1"))));
  for (auto const& name : fixture_names()) {
    auto S = build_fixture(name);
    for (auto const& u : ultrafilters(S)) {
      CHECK(is_tight_filter(S, u));
    }
  }
}

TEST_CASE("tight spectrum of fixtures", "[spectrum]") {
  auto E4 = build_fixture("E4");
  auto T  = tight_spectrum(E4);
  REQUIRE(T.size() == 2);
  CHECK(T[0].min() == el(E4, "a"));
  CHECK(T[1].min() == el(E4, "b"));
  CHECK(T.index_of(Filter::from_min(E4, el(E4, "b"))) == Point{1});
  CHECK_FALSE(T.index_of(Filter::from_min(E4, el(E4, "1"))).has_value());
  auto I2 = build_fixture("I2");
  CHECK(member_sets(tight_spectrum(I2).points()) == member_sets(ultrafilters(I2)));
  auto B2 = build_fixture("B2");
  REQUIRE(tight_spectrum(B2).size() == 2);
  CHECK(tight_spectrum(B2)[0].min() == el(B2, "e11"));
  CHECK(tight_spectrum(B2)[1].min() == el(B2, "e22"));
}

TEST_CASE("filters agree with brute force", "[spectrum][oracle]") {
  for (auto const& S : oracle::small_instances(17, 80)) {
    REQUIRE(member_sets(all_filters(S)) == sorted(oracle::filters(S)));
    for (auto const& f : all_filters(S)) {
      REQUIRE(is_filter(S, f.members()));
      REQUIRE(filter_of(S, char_of(S, f)) == f);
      REQUIRE(is_character(S, char_of(S, f)));
    }
  }
}

TEST_CASE("tightness: reduced, literal and ultrafilter agree", "[spectrum][oracle]") {
  for (auto const& S : oracle::small_instances(19, 80)) {
    if (S.idempotents().size() > 8) {
      continue;
    }
    auto const ultra = sorted(oracle::ultrafilters_by_meets(S));
    REQUIRE(member_sets(ultrafilters(S)) == ultra);
    REQUIRE(member_sets(tight_spectrum(S).points()) == ultra);
    std::vector<IndexSet> literal;
    for (auto const& f : all_filters(S)) {
      bool const lit = oracle::literal_is_tight(S, f.members());
      REQUIRE(is_tight_filter(S, f) == lit);
      if (lit) {
        literal.push_back(f.members());
      }
    }
    REQUIRE(sorted(literal) == ultra);
  }
}

TEST_CASE("ultrafilter neighbourhood basis", "[spectrum][property]") {
  std::mt19937_64 rng(23);
  for (auto const& S : oracle::small_instances(29, 60)) {
    auto const& E = S.idempotents();
    for (auto const& xi : ultrafilters(S)) {
      for (int trial = 0; trial < 20; ++trial) {
        IndexSet X(S.size()), Y(S.size());
        for (auto e : E) {
          auto const r = uniform_below(rng, 4);
          if (r == 0 && xi.contains(e)) {
            X.set(e);
          } else if (r == 1 && !xi.contains(e)) {
            Y.set(e);
          }
        }
        Element const e = neighbourhood_idempotent(S, xi, X, Y);
        REQUIRE(xi.contains(e));
        auto const inside = basic_open(S, X, Y);
        for (auto const& eta : basic_open(S, make_set(S.size(), {e}), IndexSet(S.size()))) {
          REQUIRE(std::find(inside.begin(), inside.end(), eta) != inside.end());
        }
      }
    }
  }
}

TEST_CASE("neighbourhood_idempotent preconditions", "[spectrum]") {
  auto E4 = build_fixture("E4");
  auto up1 = Filter::from_min(E4, el(E4, "1"));
  CHECK_THROWS_AS(neighbourhood_idempotent(E4, up1, IndexSet(E4.size()), IndexSet(E4.size())),
                  Error);
  auto upa = Filter::from_min(E4, el(E4, "a"));
  CHECK(neighbourhood_idempotent(E4, upa, set_of(E4, {"1"}), set_of(E4, {"b"})) == el(E4, "a"));
  CHECK_THROWS_AS(neighbourhood_idempotent(E4, upa, set_of(E4, {"b"}), IndexSet(E4.size())),
                  Error);
}
