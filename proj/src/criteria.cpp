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

#include "isg/criteria.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "isg/error.hpp"

namespace isg {

  namespace {
    IndexSet nonzero_below(InverseSemigroup const&  S,
                           IdempotentTables const& tables,
                           Element                 e) {
      IndexSet result = tables.below(e);
      result.reset(S.zero());
      return result;
    }

    // every nonzero g <= e meets a member of C
    bool outer_covers(IdempotentTables const& tables,
                      IndexSet const&         nonzero_ideal,
                      IndexSet const&         C) {
      for (auto g : bits(nonzero_ideal)) {
        if (!tables.meets(static_cast<Element>(g)).intersects(C)) {
          return false;
        }
      }
      return true;
    }

    std::string join_labels(InverseSemigroup const& S, IndexSet const& set) {
      std::string result = "{";
      for (auto x : bits(set)) {
        if (result.size() > 1) {
          result += ", ";
        }
        result += S.label(static_cast<Element>(x));
      }
      return result + "}";
    }
  }  // namespace

  std::string_view to_string(SearchVerdict v) noexcept {
    switch (v) {
      case SearchVerdict::True: return "true";
      case SearchVerdict::False: return "false";
      case SearchVerdict::SearchCapExceeded: return "SearchCapExceeded";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Hausdorff, fixed and weakly fixed
  ////////////////////////////////////////////////////////////////////////

  HausdorffCriterion hausdorff_criterion(InverseSemigroup const& S) {
    HausdorffCriterion result;
    result.covers.reserve(S.size());
    for (Element s = 0; s < S.size(); ++s) {
      Ideal const J = j_s(S, s);
      auto        C = canonical_cover(S, J);
      if (!is_cover(S, C, J)) {
        result.holds = false;
      }
      result.covers.push_back(std::move(C));
    }
    return result;
  }

  bool is_fixed_idempotent(InverseSemigroup const& S, Element e, Element s) {
    S.require_idempotent(e);
    return S.product(s, e) == e;
  }

  bool weakly_fixed(InverseSemigroup const& S, Element e, Element s) {
    S.require_idempotent(e);
    if (S.product(e, S.source_idempotent(s)) != e) {
      throw Error(ErrorCode::PreconditionViolated,
                  S.label(e) + " is not below s*s for s = " + S.label(s));
    }
    for (auto f : S.idempotents()) {
      if (f == S.zero() || S.product(f, e) != f) {
        continue;
      }
      if (S.product(S.conjugate(s, f), f) == S.zero()) {
        return false;
      }
    }
    return true;
  }

  TopFreeCriterion top_free_criterion(InverseSemigroup const& S) {
    IdempotentTables const tables(S);
    TopFreeCriterion       result;
    for (Element s = 0; s < S.size(); ++s) {
      IndexSet const fixed = j_s(S, s).members();
      Element const  ss    = S.source_idempotent(s);
      for (auto e : S.idempotents()) {
        if (S.product(e, ss) != e || !weakly_fixed(S, e, s)) {
          continue;
        }
        ++result.weakly_fixed_pairs;
        IndexSet const Je = nonzero_below(S, tables, e);
        // the nonzero members of J_e meet J_s lie in J_e, so they form a
        // cover exactly when they outer-cover J_e
        if (!outer_covers(tables, Je, Je & fixed) && result.holds) {
          result.holds   = false;
          result.witness = std::make_pair(s, e);
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimality
  ////////////////////////////////////////////////////////////////////////

  MinimalCriterion minimal_criterion(InverseSemigroup const& S) {
    IdempotentTables const tables(S);
    MinimalCriterion       result;
    // for each f, its distinct nonzero conjugates and the first s giving each
    std::vector<IndexSet>             conjugates(S.size());
    std::vector<std::vector<Element>> conjugator(S.size());
    for (auto f : S.idempotents()) {
      conjugates[f] = IndexSet(S.size());
      conjugator[f].assign(S.size(), S.size());
      for (Element s = 0; s < S.size(); ++s) {
        Element const c = S.conjugate(s, f);
        if (c != S.zero() && !conjugates[f].test(c)) {
          conjugates[f].set(c);
          conjugator[f][c] = s;
        }
      }
    }
    for (auto e : S.idempotents()) {
      for (auto f : S.idempotents()) {
        if (e == S.zero() || f == S.zero()) {
          continue;
        }
        IndexSet uncovered = nonzero_below(S, tables, e);
        if (!outer_covers(tables, uncovered, conjugates[f])) {
          if (result.holds) {
            result.holds   = false;
            result.witness = std::make_pair(e, f);
            result.families.clear();
          }
          continue;
        }
        if (!result.holds) {
          continue;
        }
        // greedy: take the conjugate meeting the most uncovered members
        ConjugateFamily family{e, f, {}};
        while (uncovered.any()) {
          Element     best       = S.zero();
          std::size_t best_count = 0;
          for (auto c : bits(conjugates[f])) {
            std::size_t count = 0;
            for (auto g : bits(uncovered)) {
              count += tables.meets(static_cast<Element>(g)).test(c);
            }
            if (count > best_count) {
              best       = static_cast<Element>(c);
              best_count = count;
            }
          }
          family.conjugators.push_back(conjugator[f][best]);
          uncovered -= tables.meets(best);
        }
        result.families.push_back(std::move(family));
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Local contraction
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element> contraction_order(InverseSemigroup const& S) {
    IdempotentTables const tables(S);
    std::vector<Element>   result;
    for (auto e : S.idempotents()) {
      if (e != S.zero()) {
        result.push_back(e);
      }
    }
    std::stable_sort(result.begin(), result.end(), [&](Element x, Element y) {
      return tables.below(x).count() < tables.below(y).count();
    });
    return result;
  }

  SearchVerdict contraction_search(InverseSemigroup const& S,
                                   Element                 e,
                                   std::size_t             max_F,
                                   ContractionWitness*     witness) {
    IdempotentTables const tables(S);
    bool const full_sweep = S.idempotents().size() <= kFullSweepIdempotents;
    bool       capped     = false;

    for (Element s = 0; s < S.size(); ++s) {
      Element const        top = S.product(e, S.source_idempotent(s));
      IndexSet const       candidates = nonzero_below(S, tables, top);
      std::vector<Element> P;
      for (auto f : bits(candidates)) {
        P.push_back(static_cast<Element>(f));
      }
      std::size_t const k = full_sweep ? P.size() : std::min(max_F, P.size());
      capped              = capped || k < P.size();

      // the nonzero ideals below s f s*, one per member of P
      std::vector<IndexSet> targets;
      for (auto f : P) {
        targets.push_back(nonzero_below(S, tables, S.conjugate(s, f)));
      }

      std::vector<std::size_t> idx;
      for (std::size_t size = 1; size <= k; ++size) {
        idx.resize(size);
        for (std::size_t i = 0; i < size; ++i) {
          idx[i] = i;
        }
        while (true) {
          IndexSet F(S.size());
          for (auto i : idx) {
            F.set(P[i]);
          }
          bool covers_all = true;
          for (auto i : idx) {
            if (!outer_covers(tables, targets[i], F)) {
              covers_all = false;
              break;
            }
          }
          if (covers_all) {
            for (auto i0 : idx) {
              Element const f0s = S.product(P[i0], s);
              bool          ok  = std::all_of(idx.begin(), idx.end(), [&](auto i) {
                return S.product(f0s, P[i]) == S.zero();
              });
              if (ok) {
                if (witness != nullptr) {
                  witness->e = e;
                  witness->s = s;
                  witness->F = {P[i0]};
                  for (auto i : idx) {
                    if (i != i0) {
                      witness->F.push_back(P[i]);
                    }
                  }
                }
                return SearchVerdict::True;
              }
            }
          }
          // next combination of size `size` from P.size()
          std::size_t j = size;
          while (j > 0 && idx[j - 1] == P.size() - size + j - 1) {
            --j;
          }
          if (j == 0) {
            break;
          }
          ++idx[j - 1];
          for (std::size_t i = j; i < size; ++i) {
            idx[i] = idx[i - 1] + 1;
          }
        }
      }
    }
    return capped ? SearchVerdict::SearchCapExceeded : SearchVerdict::False;
  }

  bool contraction_exists(InverseSemigroup const& S,
                          Element                 e,
                          ContractionWitness*     witness) {
    IdempotentTables const tables(S);
    for (Element s = 0; s < S.size(); ++s) {
      IndexSet const P
          = nonzero_below(S, tables, S.product(e, S.source_idempotent(s)));
      for (auto f0 : bits(P)) {
        Element const f0s = S.product(static_cast<Element>(f0), s);
        IndexSet      Q(S.size());
        for (auto f : bits(P)) {
          if (S.product(f0s, static_cast<Element>(f)) == S.zero()) {
            Q.set(f);
          }
        }
        bool changed = true;
        while (changed && Q.test(f0)) {
          changed = false;
          for (auto f : bits(Q)) {
            IndexSet const target = nonzero_below(
                S, tables, S.conjugate(s, static_cast<Element>(f)));
            if (!outer_covers(tables, target, Q)) {
              Q.reset(f);
              changed = true;
            }
          }
        }
        if (Q.test(f0)) {
          if (witness != nullptr) {
            witness->e = e;
            witness->s = s;
            witness->F = {static_cast<Element>(f0)};
            for (auto f : bits(Q)) {
              if (f != f0) {
                witness->F.push_back(static_cast<Element>(f));
              }
            }
          }
          return true;
        }
      }
    }
    return false;
  }

  LocContrCriterion locally_contracting_criterion(InverseSemigroup const& S,
                                                  std::size_t max_F) {
    LocContrCriterion result;
    result.max_F       = max_F;
    auto const order   = contraction_order(S);
    result.vacuous     = order.empty();
    bool capped        = false;
    for (auto e : order) {
      ContractionWitness w;
      switch (contraction_search(S, e, max_F, &w)) {
        case SearchVerdict::True: result.witnesses.push_back(std::move(w)); break;
        case SearchVerdict::False:
          result.verdict   = SearchVerdict::False;
          result.failing_e = e;
          return result;
        case SearchVerdict::SearchCapExceeded:
          if (!capped) {
            result.failing_e = e;
          }
          capped = true;
          break;
      }
    }
    if (capped) {
      result.verdict = SearchVerdict::SearchCapExceeded;
    }
    return result;
  }

  bool locally_contracting_exact(InverseSemigroup const& S) {
    for (auto e : contraction_order(S)) {
      if (!contraction_exists(S, e)) {
        return false;
      }
    }
    return true;
  }

  EasierCriterion easier_loc_contr_criterion(InverseSemigroup const& S) {
    IdempotentTables const tables(S);
    EasierCriterion        result;
    auto const             order = contraction_order(S);
    result.vacuous               = order.empty();
    for (auto e : order) {
      std::optional<EasierWitness> found;
      for (Element s = 0; s < S.size() && !found; ++s) {
        IndexSet const P
            = nonzero_below(S, tables, S.product(e, S.source_idempotent(s)));
        for (auto f1 : bits(P)) {
          auto const f1e = static_cast<Element>(f1);
          Element    c   = S.conjugate(s, f1e);
          if (S.product(c, f1e) != c) {
            continue;
          }
          Element const sf1 = S.product(s, f1e);
          for (auto f0 : bits(tables.below(f1e))) {
            if (f0 != S.zero()
                && S.product(static_cast<Element>(f0), sf1) == S.zero()) {
              found = EasierWitness{e, s, static_cast<Element>(f0), f1e};
              break;
            }
          }
          if (found) {
            break;
          }
        }
      }
      if (!found) {
        result.holds     = false;
        result.failing_e = e;
        return result;
      }
      result.witnesses.push_back(*found);
    }
    return result;
  }

  bool ess_principal_and_hausdorff_criterion(InverseSemigroup const& S) {
    return hausdorff_criterion(S).holds && top_free_criterion(S).holds;
  }

  ////////////////////////////////////////////////////////////////////////
  // Flags and dumps
  ////////////////////////////////////////////////////////////////////////

  CStarFlags cstar_flags(bool a, bool b, bool c, bool d) {
    CStarFlags flags{a, b, c, d, {}, {}};
    flags.hypotheses
        = "S is finite, hence countable, and its tight groupoid is finite, "
          "hence second countable";
    if (a && b) {
      flags.conclusions.emplace_back(
          "(a)+(b): each nonzero ideal of the reduced groupoid C*-algebra "
          "contains a nonzero function on the unit space");
    }
    if (a && b && c) {
      flags.conclusions.emplace_back(
          "(a)+(b)+(c): the reduced groupoid C*-algebra is simple");
    }
    if (a && b && c && d) {
      flags.conclusions.emplace_back(
          "(a)+(b)+(c)+(d): the reduced groupoid C*-algebra is simple and "
          "purely infinite");
    }
    return flags;
  }

  std::string table_dump(InverseSemigroup const& S, std::string const& name) {
    std::ostringstream out;
    out << "semigroup " << name << "\n";
    out << "table " << S.size() << " zero " << S.zero() << "\n";
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = 0; b < S.size(); ++b) {
        out << (b == 0 ? "" : " ") << S.product(a, b);
      }
      out << "\n";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities
  ////////////////////////////////////////////////////////////////////////

  namespace {
    IndexSet domain_of_set(FiniteAction const& theta, IndexSet const& F) {
      IndexSet result(theta.carrier_size());
      for (auto f : bits(F)) {
        result |= theta.edomain(static_cast<Element>(f));
      }
      return result;
    }

    IdentityCheck check_weakly_fixed(FiniteAction const& theta) {
      auto const&   S = theta.semigroup();
      IdentityCheck check{"weakly fixed idempotents vs fixed tight filters", true, ""};
      for (Element s = 0; s < S.size(); ++s) {
        IndexSet const fixed = fixed_points(theta, s);
        for (auto e : S.idempotents()) {
          if (S.product(e, S.source_idempotent(s)) != e) {
            continue;
          }
          bool const lhs = weakly_fixed(S, e, s);
          bool const rhs = theta.edomain(e).is_subset_of(fixed);
          if (lhs != rhs) {
            check.passed = false;
            check.detail = "s = " + S.label(s) + ", e = " + S.label(e);
            return check;
          }
        }
      }
      return check;
    }

    IdentityCheck check_covers(FiniteAction const& theta) {
      auto const&   S = theta.semigroup();
      IdentityCheck check{"outer covers vs unions of domains", true, ""};
      auto const&   E = S.idempotents();

      std::vector<Ideal>    ideals;
      std::vector<IndexSet> candidates;
      if (E.size() <= 8) {
        check.detail = "exhaustive over all ideals and all subsets of E";
        for (std::uint32_t mask = 0; mask < (1U << E.size()); ++mask) {
          IndexSet set(S.size());
          for (std::size_t i = 0; i < E.size(); ++i) {
            if (mask >> i & 1U) {
              set.set(E[i]);
            }
          }
          if (is_ideal(S, set)) {
            ideals.push_back(Ideal::from_members(S, set));
          }
          candidates.push_back(std::move(set));
        }
      } else {
        check.detail
            = "ideals J_e and J_s; candidates: singletons, pairs and the "
              "canonical cover of each ideal";
        for (auto e : E) {
          ideals.push_back(principal_ideal(S, e));
        }
        for (Element s = 0; s < S.size(); ++s) {
          if (!S.is_idempotent(s)) {
            ideals.push_back(j_s(S, s));
          }
        }
        for (std::size_t i = 0; i < E.size(); ++i) {
          candidates.push_back(make_set(S.size(), {E[i]}));
          for (std::size_t j = i + 1; j < E.size(); ++j) {
            candidates.push_back(make_set(S.size(), {E[i], E[j]}));
          }
        }
        for (auto const& J : ideals) {
          candidates.push_back(canonical_cover(S, J).members);
        }
      }

      for (auto const& J : ideals) {
        IndexSet const DJ = domain_of_set(theta, J.members());
        for (auto const& C : candidates) {
          IndexSet const DC  = domain_of_set(theta, C);
          bool const     lhs = is_outer_cover(S, CoverCandidate{C}, J);
          bool const     rhs = DJ.is_subset_of(DC);
          bool           ok  = lhs == rhs;
          if (ok && C.is_subset_of(J.members())) {
            ok = is_cover(S, CoverCandidate{C}, J) == (DJ == DC);
          }
          if (!ok) {
            check.passed = false;
            check.detail = "J = " + join_labels(S, J.members())
                           + ", C = " + join_labels(S, C);
            return check;
          }
        }
      }
      return check;
    }

    IdentityCheck check_slices(GermGroupoid const& g) {
      IdentityCheck check{"trivial germs in a slice", true, ""};
      if (auto s = slice_identity_failure(g)) {
        check.passed = false;
        check.detail = "s = " + g.action().semigroup().label(*s);
      }
      return check;
    }

    IdentityCheck check_image_of_domains(FiniteAction const& theta) {
      auto const&   S = theta.semigroup();
      IdentityCheck check{"image of an intersection of domains", true, ""};
      for (Element s = 0; s < S.size(); ++s) {
        for (auto f : S.idempotents()) {
          IndexSet const lhs = theta.image_of(
              s, theta.edomain(f) & theta.edomain(S.source_idempotent(s)));
          if (lhs != theta.edomain(S.conjugate(s, f))) {
            check.passed = false;
            check.detail = "s = " + S.label(s) + ", f = " + S.label(f);
            return check;
          }
        }
      }
      return check;
    }

    IdentityCheck check_ultrafilters_preserved(InverseSemigroup const&    S,
                                               std::vector<Filter> const& ultra) {
      IdentityCheck check{"ultrafilters are preserved", true, ""};
      for (Element s = 0; s < S.size(); ++s) {
        for (auto const& xi : ultra) {
          if (!xi.contains(S.source_idempotent(s))) {
            continue;
          }
          if (!is_ultrafilter(S, beta_on_filter(S, s, xi))) {
            check.passed = false;
            check.detail = "s = " + S.label(s) + ", min = " + S.label(xi.min());
            return check;
          }
        }
      }
      return check;
    }

    // every ultrafilter fixed by s contains an idempotent below s
    bool ultrafilter_fixed_points_trivial(InverseSemigroup const&    S,
                                          std::vector<Filter> const& ultra) {
      for (Element s = 0; s < S.size(); ++s) {
        IndexSet const below_s = j_s(S, s).nonzero_members(S);
        for (auto const& xi : ultra) {
          if (xi.contains(S.source_idempotent(s)) && beta_on_filter(S, s, xi) == xi
              && !below_s.intersects(xi.members())) {
            return false;
          }
        }
      }
      return true;
    }

    IdentityCheck check_top_free(FiniteAction const& theta) {
      auto const&   S = theta.semigroup();
      bool const    i   = is_topologically_free(theta).holds;
      bool const    ii  = top_free_criterion(S).holds;
      bool const    iii = ultrafilter_fixed_points_trivial(S, ultrafilters(S));
      IdentityCheck check{"three forms of topological freeness", true, ""};
      check.passed = i == ii && ii == iii;
      check.detail = std::string("action: ") + (i ? "true" : "false")
                     + ", criterion: " + (ii ? "true" : "false")
                     + ", ultrafilters: " + (iii ? "true" : "false");
      return check;
    }

    IdentityCheck check_implications(InverseSemigroup const& S,
                                     FiniteAction const&     theta,
                                     bool                    hausdorff,
                                     bool                    easier,
                                     bool                    loc_contr) {
      IdentityCheck check{"implications", true, ""};
      auto          fail = [&](std::string what) {
        check.passed = false;
        check.detail = std::move(what);
        return check;
      };
      if (is_e_star_unitary(S) && !hausdorff) {
        return fail("E*-unitary but the Hausdorff criterion fails");
      }
      if (easier && !loc_contr) {
        return fail("the easier condition holds but local contraction fails");
      }
      for (Element s = 0; s < S.size(); ++s) {
        for (auto e : S.idempotents()) {
          if (S.product(e, S.source_idempotent(s)) == e
              && is_fixed_idempotent(S, e, s) && !weakly_fixed(S, e, s)) {
            return fail("fixed but not weakly fixed: s = " + S.label(s)
                        + ", e = " + S.label(e));
          }
        }
        if (!trivial_fixed_points(theta, s).is_subset_of(fixed_points(theta, s))) {
          return fail("a trivially fixed point is not fixed: s = " + S.label(s));
        }
        if (trivial_fixed_points(theta, s) != x_alpha_s(theta, s)) {
          return fail("trivially fixed points differ from X_s: s = "
                      + S.label(s));
        }
      }
      return check;
    }
  }  // namespace

  std::vector<IdentityCheck> identity_checks(InverseSemigroup const& S,
                                             FiniteAction const&     theta,
                                             GermGroupoid const&     g) {
    std::vector<IdentityCheck> result;
    result.push_back(check_weakly_fixed(theta));
    result.push_back(check_covers(theta));
    result.push_back(check_slices(g));
    result.push_back(check_image_of_domains(theta));
    result.push_back(check_ultrafilters_preserved(S, ultrafilters(S)));
    result.push_back(check_top_free(theta));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // The report
  ////////////////////////////////////////////////////////////////////////

  PropertyReport full_report(InverseSemigroup const& S, ReportOptions const& options) {
    auto const   shared   = std::make_shared<InverseSemigroup const>(S);
    auto const   spectrum = tight_spectrum(S);
    FiniteAction theta    = standard_action(shared, spectrum);
    GermGroupoid g        = build_germ_groupoid(theta);

    PropertyReport r;
    r.semigroup_size   = S.size();
    r.idempotent_count = S.idempotents().size();
    r.spectrum_size    = spectrum.size();
    r.arrow_count      = g.size();
    r.unit_count       = g.unit_count();
    r.e_star_unitary   = is_e_star_unitary(S);

    auto violation = [&](std::string property, std::string detail) {
      return TheoremViolation(
          std::move(property), std::move(detail), table_dump(S, "reproducer"));
    };

    r.hausdorff_witness = hausdorff_criterion(S);
    r.hausdorff = VerdictPair{r.hausdorff_witness.holds, is_hausdorff_direct(g)};

    r.top_free              = top_free_criterion(S);
    r.essentially_principal = VerdictPair{r.top_free.holds, is_essentially_principal(g)};
    r.ess_principal_and_hausdorff = r.hausdorff_witness.holds && r.top_free.holds;
    if (is_topologically_free(theta).holds != r.essentially_principal.direct) {
      throw violation("essentially principal",
                      "the groupoid and the action disagree");
    }
    if (r.ess_principal_and_hausdorff
        != (r.hausdorff.direct && r.essentially_principal.direct)) {
      throw violation("Hausdorff and essentially principal",
                      "the conjunction differs from the groupoid");
    }

    r.minimal_witness = minimal_criterion(S);
    r.irreducible     = is_irreducible(theta);
    r.minimal         = VerdictPair{r.minimal_witness.holds, is_minimal_groupoid(g)};
    if (r.irreducible != r.minimal.direct) {
      throw violation("minimal", "the groupoid and the action disagree");
    }

    r.loc_contr            = locally_contracting_criterion(S, options.max_F);
    bool const exact       = locally_contracting_exact(S);
    r.easier               = easier_loc_contr_criterion(S);
    r.action_contraction   = is_locally_contracting_action(theta);
    r.groupoid_contraction = is_locally_contracting_groupoid(g);
    if (r.loc_contr.verdict != SearchVerdict::SearchCapExceeded
        && (r.loc_contr.verdict == SearchVerdict::True) != exact) {
      throw violation("locally contracting",
                      "the bounded search and the closure disagree");
    }
    r.locally_contracting = VerdictPair{exact, r.action_contraction.holds};
    if (r.action_contraction.holds && !r.groupoid_contraction.holds) {
      throw violation("locally contracting",
                      "the action contracts but its groupoid does not");
    }

    for (auto const& [name, pair] :
         {std::pair{"Hausdorff", r.hausdorff},
          std::pair{"essentially principal", r.essentially_principal},
          std::pair{"minimal", r.minimal},
          std::pair{"locally contracting", r.locally_contracting}}) {
      if (!pair.agree()) {
        throw violation(name,
                        std::string("criterion ") + (pair.criterion ? "true" : "false")
                            + ", direct " + (pair.direct ? "true" : "false"));
      }
    }

    if (g.size() <= options.axiom_check_limit) {
      if (auto failure = check_groupoid_axioms(g)) {
        throw violation("groupoid axioms", *failure);
      }
      r.groupoid_axioms_checked = true;
    }

    if (options.check_identities) {
      r.identities = identity_checks(S, theta, g);
      r.identities.push_back(check_implications(
          S, theta, r.hausdorff_witness.holds, r.easier.holds, exact));
      for (auto const& check : r.identities) {
        if (!check.passed) {
          throw violation(check.name, check.detail);
        }
      }
    }

    r.flags = cstar_flags(r.hausdorff.criterion,
                          r.essentially_principal.criterion,
                          r.minimal.criterion,
                          r.locally_contracting.criterion);
    return r;
  }

}  // namespace isg
