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

#include "isg/action.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/germs.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace isg;
using isg::test::el;
using isg::test::share;

namespace {
  GermGroupoid groupoid_of(InverseSemigroup const& S) {
    return build_germ_groupoid(standard_action(share(S), tight_spectrum(S)));
  }

  bool is_pair_groupoid(GermGroupoid const& g) {
    std::size_t const n = g.unit_count();
    if (g.size() != n * n) {
      return false;
    }
    std::vector<int> seen(n * n, 0);
    for (Arrow a = 0; a < g.size(); ++a) {
      ++seen[g.rng(a) * n + g.src(a)];
    }
    return std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
  }
}  // namespace

TEST_CASE("groupoids of the fixtures", "[germs]") {
  auto gI = groupoid_of(build_fixture("I2"));
  CHECK(gI.size() == 4);
  CHECK(gI.unit_count() == 2);
  CHECK(is_pair_groupoid(gI));

  auto gB = groupoid_of(build_fixture("B2"));
  CHECK(gB.size() == 4);
  CHECK(is_pair_groupoid(gB));

  auto Z  = build_fixture("Z2z");
  auto gZ = groupoid_of(Z);
  REQUIRE(gZ.size() == 2);
  CHECK(gZ.unit_count() == 1);
  auto g = *gZ.germ_of(el(Z, "g"), 0);
  CHECK(gZ.germ_of(el(Z, "1"), 0) != gZ.germ_of(el(Z, "g"), 0));
  CHECK(gZ.compose(g, g) == gZ.unit(0));
  CHECK(gZ.inv(g) == g);
  CHECK(gZ.label(g) == "[g,0]");

  auto gE = groupoid_of(build_fixture("E4"));
  CHECK(gE.size() == 2);
  CHECK(gE.unit_count() == 2);
}

TEST_CASE("germ canonical representatives", "[germs]") {
  auto B2 = build_fixture("B2");
  auto g  = groupoid_of(B2);
  for (Arrow a = 0; a < g.size(); ++a) {
    auto const& germ = g[a];
    CHECK(germ.class_id == a);
    CHECK(g.germ_of(germ.rep_s, germ.rep_x) == a);
    // no smaller pair lies in the class
    for (Element s = 0; s < B2.size(); ++s) {
      for (Point x = 0; x < g.unit_count(); ++x) {
        if (std::pair{s, x} < std::pair{germ.rep_s, germ.rep_x}) {
          CHECK(g.germ_of(s, x) != std::optional<Arrow>(a));
        }
      }
    }
  }
  CHECK_FALSE(g.germ_of(B2.zero(), 0).has_value());
}

TEST_CASE("theta slices", "[germs]") {
  auto I2    = build_fixture("I2");
  auto g     = groupoid_of(I2);
  auto swap  = el(I2, "(1 0)");
  auto slice = theta_slice(g, swap, g.action().domain(swap));
  CHECK(slice.count() == 2);
  CHECK_FALSE(slice.intersects(g.units()));
  CHECK(is_bisection(g, slice));
  CHECK(theta_slice(g, swap, IndexSet(2)).none());
  auto id0 = el(I2, "(0 _)");
  try {
    theta_slice(g, id0, g.action().domain(swap));
    FAIL("expected DomainViolation");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::DomainViolation);
  }
  IndexSet everything(g.size());
  everything.set();
  CHECK_FALSE(is_bisection(g, everything));
}

TEST_CASE("isotropy and principality", "[germs]") {
  auto gI = groupoid_of(build_fixture("I2"));
  CHECK(isotropy_bundle(gI) == gI.units());
  CHECK(is_essentially_principal(gI));
  auto gZ = groupoid_of(build_fixture("Z2z"));
  CHECK(isotropy_bundle(gZ).count() == 2);
  CHECK(isotropy_group(gZ, 0).count() == 2);
  CHECK_FALSE(is_essentially_principal(gZ));
  CHECK_FALSE(is_principal(gZ));
  CHECK(is_principal(groupoid_of(build_fixture("B2"))));
}

TEST_CASE("Hausdorff and minimality of fixture groupoids", "[germs]") {
  for (auto const& name : fixture_names()) {
    auto g = groupoid_of(build_fixture(name));
    CHECK(is_hausdorff_direct(g));
    CHECK_FALSE(slice_identity_failure(g).has_value());
    CHECK_FALSE(check_groupoid_axioms(g).has_value());
    auto v = is_locally_contracting_groupoid(g);
    CHECK_FALSE(v.holds);
    CHECK(v.reason == ContractionReason::CardinalityObstruction);
    REQUIRE(v.search.has_value());
    CHECK_FALSE(*v.search);
  }
  CHECK(is_minimal_groupoid(groupoid_of(build_fixture("I2"))));
  CHECK(is_minimal_groupoid(groupoid_of(build_fixture("B2"))));
  CHECK(is_minimal_groupoid(groupoid_of(build_fixture("Z2z"))));
  CHECK_FALSE(is_minimal_groupoid(groupoid_of(build_fixture("E4"))));
  CHECK_FALSE(is_minimal_groupoid(
      groupoid_of(zero_direct_union(build_fixture("I2"), build_fixture("B2")))));
}

TEST_CASE("build_germ_groupoid rejects invalid actions", "[germs]") {
  auto Z = share(build_fixture("Z2z"));
  FiniteAction bad(Z, 1, {{0}, {0}, {0}});
  try {
    build_germ_groupoid(bad);
    FAIL("expected InvalidAction");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::InvalidAction);
  }
}

TEST_CASE("germ groupoid laws on random instances", "[germs][property]") {
  for (auto const& S : oracle::small_instances(37, 70)) {
    auto const theta = standard_action(share(S), tight_spectrum(S));
    auto const g     = build_germ_groupoid(theta);
    auto const N     = theta.carrier_size();
    REQUIRE_FALSE(check_groupoid_axioms(g).has_value());
    REQUIRE(g.unit_count() == N);
    REQUIRE(g.units().count() == N);

    for (Point x = 0; x < N; ++x) {
      Arrow const u = g.unit(x);
      REQUIRE(g.src(u) == x);
      REQUIRE(g.rng(u) == x);
      for (auto e : S.idempotents()) {
        if (theta.edomain(e).test(x)) {
          REQUIRE(g.germ_of(e, x) == u);
        }
      }
    }

    for (Element s = 0; s < S.size(); ++s) {
      for (Point x = 0; x < N; ++x) {
        if (!theta.in_domain(s, x)) {
          REQUIRE_FALSE(g.germ_of(s, x).has_value());
          continue;
        }
        Arrow const a = *g.germ_of(s, x);
        Point const y = static_cast<Point>(theta.image(s, x));
        REQUIRE(g.src(a) == x);
        REQUIRE(g.rng(a) == y);
        REQUIRE(g.inv(a) == g.germ_of(S.star(s), y));
        for (Element t = 0; t < S.size(); ++t) {
          if (theta.in_domain(t, x)) {
            bool const same = g.germ_of(t, x) == a;
            REQUIRE(same == oracle::germ_equivalent(theta, s, t, x));
            if (same) {
              REQUIRE(theta.image(t, x) == theta.image(s, x));
            }
          }
          if (theta.in_domain(t, y)) {
            Arrow const b = *g.germ_of(t, y);
            REQUIRE(g.compose(b, a) == g.germ_of(S.product(t, s), x));
          }
        }
      }
      auto const slice = theta_slice(g, s, theta.domain(s));
      REQUIRE(is_bisection(g, slice));
      REQUIRE(slice.count() == theta.domain(s).count());
    }

    REQUIRE(is_essentially_principal(g) == is_topologically_free(theta).holds);
    REQUIRE(is_principal(g) == is_essentially_principal(g));
    REQUIRE(is_minimal_groupoid(g) == is_irreducible(theta));
    REQUIRE(is_hausdorff_direct(g));
    if (g.size() <= kGroupoidSearchLimit) {
      REQUIRE_FALSE(search_locally_contracting_groupoid(g));
    }
  }
}
