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

// Prints one PASS or FAIL line per acceptance criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "isg/action.hpp"
#include "isg/corpus.hpp"
#include "isg/criteria.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/format.hpp"
#include "isg/germs.hpp"
#include "isg/ideal.hpp"
#include "isg/report.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace isg;
using isg::test::share;

namespace {

  constexpr std::uint64_t kCorpusSeed  = 7;
  constexpr std::size_t   kCorpusCount = 100;

  struct Named {
    std::string      name;
    InverseSemigroup S;
  };

  //! The four fixtures followed by the seeded corpus.
  std::vector<Named> const& instances() {
    static std::vector<Named> const all = [] {
      std::vector<Named> result;
      for (auto const& name : fixture_names()) {
        result.push_back({name, build_fixture(name)});
      }
      for (std::size_t i = 0; i < kCorpusCount; ++i) {
        auto inst = corpus_instance(kCorpusSeed, i);
        result.push_back({inst.spec.name, std::move(inst.semigroup)});
      }
      return result;
    }();
    return all;
  }

  class Check {
   public:
    void expect(bool ok, std::string const& what) {
      ++_count;
      if (!ok && _failures.size() < 5) {
        _failures.push_back(what);
      }
      _failed = _failed || !ok;
    }
    bool failed() const {
      return _failed;
    }
    std::size_t count() const {
      return _count;
    }
    std::vector<std::string> const& failures() const {
      return _failures;
    }

   private:
    bool                     _failed = false;
    std::size_t              _count  = 0;
    std::vector<std::string> _failures;
  };

  std::vector<IndexSet> sorted(std::vector<IndexSet> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // AC1
  ////////////////////////////////////////////////////////////////////////

  void fixture_ground_truth(Check& c) {
    struct Expect {
      char const* name;
      std::size_t size, idempotents, spectrum, arrows, units;
      bool        pair_groupoid;
      bool        a, b, c, d;
    };
    // each count is recomputed below by the brute-force oracles
    std::vector<Expect> const expected{
        {"I2", 7, 4, 2, 4, 2, true, true, true, true, false},
        {"B2", 5, 3, 2, 4, 2, true, true, true, true, false},
        {"Z2z", 3, 2, 1, 2, 1, false, true, false, true, false},
        {"E4", 4, 4, 2, 2, 2, false, true, true, false, false},
    };
    for (auto const& x : expected) {
      auto const S     = build_fixture(x.name);
      auto const r     = full_report(S);
      auto const theta = standard_action(share(S), tight_spectrum(S));
      auto const g     = build_germ_groupoid(theta);
      std::string const n = x.name;
      c.expect(S.size() == x.size, n + " size");
      c.expect(oracle::idempotents(S).size() == x.idempotents, n + " idempotents");
      c.expect(r.spectrum_size == x.spectrum, n + " spectrum");
      c.expect(oracle::ultrafilters_by_meets(S).size() == x.spectrum, n + " oracle spectrum");
      c.expect(r.arrow_count == x.arrows && r.unit_count == x.units, n + " groupoid size");

      // arrows counted as classes of the oracle germ relation
      std::size_t classes = 0;
      for (Point p = 0; p < theta.carrier_size(); ++p) {
        std::vector<Element> reps;
        for (Element s = 0; s < S.size(); ++s) {
          if (!theta.in_domain(s, p)) {
            continue;
          }
          bool fresh = std::none_of(reps.begin(), reps.end(), [&](Element t) {
            return oracle::germ_equivalent(theta, s, t, p);
          });
          if (fresh) {
            reps.push_back(s);
          }
        }
        classes += reps.size();
      }
      c.expect(classes == x.arrows, n + " oracle arrow count");

      bool pair = g.size() == g.unit_count() * g.unit_count();
      for (Arrow a = 0; a < g.size() && pair; ++a) {
        for (Arrow b = a + 1; b < g.size(); ++b) {
          pair = pair && !(g.src(a) == g.src(b) && g.rng(a) == g.rng(b));
        }
      }
      c.expect(pair == x.pair_groupoid, n + " pair groupoid");
      c.expect(r.flags.a == x.a && r.flags.b == x.b && r.flags.c == x.c && r.flags.d == x.d,
               n + " flags");
    }
    auto const Z = build_fixture("Z2z");
    auto const t = top_free_criterion(Z);
    c.expect(t.witness && Z.label(t.witness->first) == "g" && Z.label(t.witness->second) == "1",
             "Z2z witness (s=g, e=1)");
    auto const E4 = build_fixture("E4");
    auto const m  = minimal_criterion(E4);
    c.expect(m.witness && E4.label(m.witness->first) == "a" && E4.label(m.witness->second) == "b",
             "E4 witness (e=a, f=b)");
  }

  ////////////////////////////////////////////////////////////////////////
  // AC2
  ////////////////////////////////////////////////////////////////////////

  void equivalence_harness(Check& c) {
    std::vector<std::string> const required{
        "weakly fixed idempotents vs fixed tight filters",
        "outer covers vs unions of domains",
        "trivial germs in a slice",
        "image of an intersection of domains",
        "ultrafilters are preserved",
        "three forms of topological freeness",
    };
    for (auto const& [name, S] : instances()) {
      c.expect(S.size() <= kCorpusCap && S.idempotents().size() <= 40, name + " bounds");
      try {
        auto const r = full_report(S);
        c.expect(r.hausdorff.agree(), name + " hausdorff pair");
        c.expect(r.essentially_principal.agree(), name + " essentially principal pair");
        c.expect(r.minimal.agree(), name + " minimal pair");
        c.expect(r.locally_contracting.agree(), name + " locally contracting pair");
        for (auto const& id : required) {
          auto it = std::find_if(r.identities.begin(), r.identities.end(),
                                 [&](auto const& x) { return x.name == id; });
          c.expect(it != r.identities.end() && it->passed, name + " " + id);
        }
      } catch (Error const& e) {
        c.expect(false, name + ": " + e.what());
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // AC3
  ////////////////////////////////////////////////////////////////////////

  void tightness_triple(Check& c, std::size_t& checked) {
    std::vector<InverseSemigroup> pool;
    for (auto const& x : instances()) {
      pool.push_back(x.S);
    }
    for (auto& S : oracle::small_instances(3, 100)) {
      pool.push_back(std::move(S));
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      auto const& S = pool[i];
      if (S.idempotents().size() > 8) {
        continue;
      }
      ++checked;
      std::vector<IndexSet> reduced, literal;
      for (auto const& f : all_filters(S)) {
        if (is_tight_filter(S, f)) {
          reduced.push_back(f.members());
        }
        if (oracle::literal_is_tight(S, f.members())) {
          literal.push_back(f.members());
        }
      }
      auto const ultra = sorted(oracle::ultrafilters_by_meets(S));
      c.expect(sorted(reduced) == ultra && sorted(literal) == ultra,
               "instance " + std::to_string(i));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // AC4
  ////////////////////////////////////////////////////////////////////////

  void finite_impossibility(Check& c, std::size_t& searched) {
    for (auto const& [name, S] : instances()) {
      auto const theta = standard_action(share(S), tight_spectrum(S));
      auto const g     = build_germ_groupoid(theta);
      auto const va    = is_locally_contracting_action(theta);
      auto const vg    = is_locally_contracting_groupoid(g);
      c.expect(!va.holds && va.reason == ContractionReason::CardinalityObstruction,
               name + " action obstruction");
      c.expect(!vg.holds && vg.reason == ContractionReason::CardinalityObstruction,
               name + " groupoid obstruction");
      bool const action_small   = theta.carrier_size() <= kActionSearchLimit;
      bool const groupoid_small = g.size() <= kGroupoidSearchLimit;
      c.expect(va.search.has_value() == action_small, name + " action search ran");
      c.expect(vg.search.has_value() == groupoid_small, name + " groupoid search ran");
      c.expect(!va.search.value_or(false) && !vg.search.value_or(false), name + " search");
      searched += (action_small ? 1 : 0) + (groupoid_small ? 1 : 0);
      auto const lc = locally_contracting_criterion(S);
      c.expect(lc.verdict == SearchVerdict::False, name + " criterion");
      c.expect(!locally_contracting_exact(S), name + " exact criterion");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // AC5
  ////////////////////////////////////////////////////////////////////////

  void implications(Check& c) {
    for (auto const& [name, S] : instances()) {
      auto const theta = standard_action(share(S), tight_spectrum(S));
      if (is_e_star_unitary(S)) {
        c.expect(hausdorff_criterion(S).holds, name + " E*-unitary => Hausdorff");
      }
      for (Element s = 0; s < S.size(); ++s) {
        c.expect(trivial_fixed_points(theta, s).is_subset_of(fixed_points(theta, s)),
                 name + " TF_s in F_s");
        for (auto e : S.idempotents()) {
          if (e != S.zero() && S.nat_leq(e, S.source_idempotent(s))
              && is_fixed_idempotent(S, e, s)) {
            c.expect(weakly_fixed(S, e, s), name + " fixed => weakly fixed");
          }
        }
      }
      if (easier_loc_contr_criterion(S).holds) {
        c.expect(locally_contracting_criterion(S).verdict == SearchVerdict::True,
                 name + " easier => main");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // AC6
  ////////////////////////////////////////////////////////////////////////

  void groupoid_axioms(Check& c, std::size_t& checked) {
    for (auto const& [name, S] : instances()) {
      auto const g = build_germ_groupoid(standard_action(share(S), tight_spectrum(S)));
      if (g.size() > 2000) {
        continue;
      }
      ++checked;
      auto const failure = check_groupoid_axioms(g);
      c.expect(!failure, name + ": " + failure.value_or(""));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // AC7
  ////////////////////////////////////////////////////////////////////////

  void parser_and_reports(Check& c) {
    for (auto const& name : fixture_names()) {
      auto const S    = build_fixture(name);
      auto const spec = parse_spec(table_dump(S, name));
      c.expect(parse_spec(print_spec(spec)) == spec, name + " round trip");
      c.expect(build_semigroup(spec).table() == S.table(), name + " rebuilt table");
      auto const first  = emit_report(report_json(name, S, full_report(S)));
      auto const second = emit_report(report_json(name, S, full_report(S)));
      c.expect(first == second, name + " byte-stable report");
    }
    for (std::size_t i = 0; i < 10; ++i) {
      auto const spec = corpus_instance(kCorpusSeed, i).spec;
      c.expect(parse_spec(print_spec(spec)) == spec, spec.name + " round trip");
    }
    auto const a = run_corpus(kCorpusSeed, kCorpusCount, {}, 1);
    auto const b = run_corpus(kCorpusSeed, kCorpusCount, {}, 4);
    c.expect(a.size() == b.size(), "corpus sizes");
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      c.expect(a[i].report == b[i].report && a[i].status == 0,
               "corpus instance " + std::to_string(i) + " reproduced");
    }
  }

  bool run(char const* id, std::string const& title, std::function<std::string(Check&)> body) {
    Check       c;
    std::string note;
    auto const  start = std::chrono::steady_clock::now();
    try {
      note = body(c);
    } catch (std::exception const& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double const seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const ok = !c.failed() && seconds < 5.0;
    char       timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << id << " " << (ok ? "PASS" : "FAIL") << "  " << title << " (" << c.count()
              << " checks" << (note.empty() ? "" : ", " + note) << ", " << timing << ")\n";
    for (auto const& f : c.failures()) {
      std::cout << "    " << f << "\n";
    }
    if (seconds >= 5.0) {
      std::cout << "    over the 5 s budget\n";
    }
    return ok;
  }

}  // namespace

int main() {
  std::ios::sync_with_stdio(false);
  bool ok = true;
  ok &= run("AC1", "fixture ground truth", [](Check& c) {
    fixture_ground_truth(c);
    return std::string();
  });
  ok &= run("AC2", "criterion and direct verdicts agree", [](Check& c) {
    equivalence_harness(c);
    return std::to_string(instances().size()) + " instances";
  });
  ok &= run("AC3", "tightness: reduced, literal and ultrafilter agree", [](Check& c) {
    std::size_t n = 0;
    tightness_triple(c, n);
    return std::to_string(n) + " instances with |E| <= 8";
  });
  ok &= run("AC4", "no finite instance is locally contracting", [](Check& c) {
    std::size_t n = 0;
    finite_impossibility(c, n);
    return std::to_string(n) + " exhaustive searches";
  });
  ok &= run("AC5", "implications hold on the corpus", [](Check& c) {
    implications(c);
    return std::string();
  });
  ok &= run("AC6", "groupoid axioms", [](Check& c) {
    std::size_t n = 0;
    groupoid_axioms(c, n);
    return std::to_string(n) + " groupoids";
  });
  ok &= run("AC7", "round trips and reproducible reports", [](Check& c) {
    parser_and_reports(c);
    return std::string();
  });
  std::cout.flush();
  return ok ? 0 : 1;
}
