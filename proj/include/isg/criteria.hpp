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

// Algebraic criteria computed on the semigroup alone, and the report that
// pairs each with the corresponding predicate on the tight groupoid.

#ifndef ISG_CRITERIA_HPP_
#define ISG_CRITERIA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "germs.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"
#include "spectrum.hpp"

namespace isg {

  ////////////////////////////////////////////////////////////////////////
  // Hausdorff
  ////////////////////////////////////////////////////////////////////////

  struct HausdorffCriterion {
    bool holds = true;
    //! covers[s] is a finite cover of J_s: its maximal nonzero members.
    std::vector<CoverCandidate> covers;
  };

  //! Every J_s is finite, so its maximal nonzero members always cover it and
  //! the criterion holds on every finite semigroup.
  HausdorffCriterion hausdorff_criterion(InverseSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Fixed and weakly fixed idempotents
  ////////////////////////////////////////////////////////////////////////

  //! s e = e.
  bool is_fixed_idempotent(InverseSemigroup const& S, Element e, Element s);

  //! (s f s*) f != 0 for every nonzero f <= e. Throws PreconditionViolated
  //! unless e is an idempotent with e <= s*s.
  bool weakly_fixed(InverseSemigroup const& S, Element e, Element s);

  struct TopFreeCriterion {
    bool holds = true;
    //! A pair with e weakly fixed under s and no cover of J_e by fixed
    //! idempotents.
    std::optional<std::pair<Element, Element>> witness;  // (s, e)
    std::size_t weakly_fixed_pairs = 0;
  };

  //! For every s and every e <= s*s weakly fixed under s, J_e has a finite
  //! cover by idempotents fixed by s. Any such cover lies in J_e meet J_s,
  //! and covers are monotone, so it suffices to test the nonzero members of
  //! J_e meet J_s.
  TopFreeCriterion top_free_criterion(InverseSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Minimality
  ////////////////////////////////////////////////////////////////////////

  struct ConjugateFamily {
    Element              e;
    Element              f;
    std::vector<Element> conjugators;  // the s_i; the family is s_i f s_i*
  };

  struct MinimalCriterion {
    bool                                       holds = true;
    std::optional<std::pair<Element, Element>> witness;  // (e, f), on failure
    //! For each pair of nonzero idempotents, a small set of conjugators
    //! found greedily. Empty when the criterion fails.
    std::vector<ConjugateFamily> families;
  };

  //! For all nonzero e and f, { s f s* : s in S } is an outer cover for J_e.
  //! Outer covers are monotone, so the whole conjugate family is the only
  //! candidate that needs testing.
  MinimalCriterion minimal_criterion(InverseSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Local contraction
  ////////////////////////////////////////////////////////////////////////

  enum class SearchVerdict { True, False, SearchCapExceeded };

  std::string_view to_string(SearchVerdict v) noexcept;

  //! e together with s and F = {f_0, ..., f_n} (f_0 first) satisfying
  //!   (i)   0 != f_i <= e s*s,
  //!   (ii)  F is an outer cover for s f_i s*,
  //!   (iii) f_0 s f_i = 0
  //! for every i.
  struct ContractionWitness {
    Element              e;
    Element              s;
    std::vector<Element> F;
  };

  //! Default bound on |F|. Semigroups with at most kFullSweepIdempotents
  //! idempotents are searched over every subset regardless of the bound.
  inline constexpr std::size_t kDefaultMaxF           = 4;
  inline constexpr std::size_t kFullSweepIdempotents = 12;

  struct LocContrCriterion {
    SearchVerdict verdict = SearchVerdict::True;
    //! No nonzero idempotent, so the condition holds vacuously.
    bool                   vacuous = false;
    std::optional<Element> failing_e;
    //! One witness per nonzero e examined before the verdict was reached.
    std::vector<ContractionWitness> witnesses;
    std::size_t                     max_F = kDefaultMaxF;
  };

  //! For a single nonzero idempotent e: searches s and F with |F| at most
  //! max_F (every size when |E| <= kFullSweepIdempotents). Returns True with
  //! a witness, False when the search was complete, or SearchCapExceeded.
  SearchVerdict contraction_search(InverseSemigroup const& S,
                                   Element                 e,
                                   std::size_t             max_F,
                                   ContractionWitness*     witness = nullptr);

  //! The same question answered without a size bound. For fixed e, s and
  //! f_0 the sets F satisfying (i) and (iii) lie in
  //!   Q = { f : 0 != f <= e s*s, f_0 s f = 0 },
  //! and sets satisfying (ii) are closed under union. Repeatedly removing
  //! from Q the f whose s f s* it fails to outer-cover leaves the largest
  //! valid set, and a witness exists iff f_0 survives.
  bool contraction_exists(InverseSemigroup const& S,
                          Element                 e,
                          ContractionWitness*     witness = nullptr);

  //! The nonzero idempotents ordered by |J_e|, then by index; atoms come
  //! first. Both local contraction checks stop at the first e that fails.
  std::vector<Element> contraction_order(InverseSemigroup const& S);

  //! Every nonzero e admits s and F as in ContractionWitness.
  LocContrCriterion locally_contracting_criterion(InverseSemigroup const& S,
                                                  std::size_t max_F = kDefaultMaxF);

  //! locally_contracting_criterion computed with contraction_exists.
  bool locally_contracting_exact(InverseSemigroup const& S);

  struct EasierWitness {
    Element e;
    Element s;
    Element f0;
    Element f1;
  };

  struct EasierCriterion {
    bool                       holds   = true;
    bool                       vacuous = false;
    std::optional<Element>     failing_e;
    std::vector<EasierWitness> witnesses;
  };

  //! Every nonzero e admits s, f0, f1 with 0 != f0 <= f1 <= e s*s,
  //! s f1 s* <= f1 and f0 s f1 = 0. A sufficient condition for local
  //! contraction, with F = {f0, f1}.
  EasierCriterion easier_loc_contr_criterion(InverseSemigroup const& S);

  //! hausdorff_criterion and top_free_criterion both hold.
  bool ess_principal_and_hausdorff_criterion(InverseSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // The report
  ////////////////////////////////////////////////////////////////////////

  struct VerdictPair {
    bool criterion = false;
    bool direct    = false;

    bool agree() const noexcept {
      return criterion == direct;
    }
  };

  //! Which of the four conditions of the closing theorem hold:
  //!   (a) every J_s has a finite cover,
  //!   (b) weakly fixed idempotents have covers by fixed idempotents,
  //!   (c) conjugates of any nonzero f outer-cover any nonzero e,
  //!   (d) S is locally contracting,
  //! with the consequences for the reduced C*-algebra of the tight groupoid
  //! that the theorem draws from them, as text.
  struct CStarFlags {
    bool                     a = false;
    bool                     b = false;
    bool                     c = false;
    bool                     d = false;
    std::vector<std::string> conclusions;
    //! The theorem asks for countability; any finite instance has it.
    std::string hypotheses;
  };

  CStarFlags cstar_flags(bool a, bool b, bool c, bool d);

  //! One instance-wide identity between the algebraic and the dynamical
  //! side, checked exhaustively unless noted in detail.
  struct IdentityCheck {
    std::string name;
    bool        passed = true;
    std::string detail;
  };

  struct ReportOptions {
    std::size_t max_F            = kDefaultMaxF;
    bool        check_identities = true;
    //! Groupoids with more arrows skip the exhaustive axiom check.
    std::size_t axiom_check_limit = 2000;
  };

  struct PropertyReport {
    std::size_t semigroup_size   = 0;
    std::size_t idempotent_count = 0;
    std::size_t spectrum_size    = 0;
    std::size_t arrow_count      = 0;
    std::size_t unit_count       = 0;
    bool        e_star_unitary   = false;

    VerdictPair hausdorff;
    VerdictPair essentially_principal;
    VerdictPair minimal;
    VerdictPair locally_contracting;

    HausdorffCriterion hausdorff_witness;
    TopFreeCriterion   top_free;
    bool               ess_principal_and_hausdorff = false;
    MinimalCriterion   minimal_witness;
    bool               irreducible = false;
    LocContrCriterion  loc_contr;
    EasierCriterion    easier;
    //! Action level; this is the direct side of locally_contracting.
    LocalContractionVerdict action_contraction;
    //! Groupoid level, recorded alongside: only the implication from the
    //! action level is known, so no equality is asserted.
    LocalContractionVerdict groupoid_contraction;
    bool                    groupoid_axioms_checked = false;

    CStarFlags                 flags;
    std::vector<IdentityCheck> identities;
  };

  //! Builds the tight spectrum, the standard action and its groupoid of
  //! germs, computes every criterion and its direct counterpart, and checks
  //! the identities. Throws EmptySpectrum, and TheoremViolation (carrying
  //! the instance as .isg text) if a pair disagrees or an identity fails.
  PropertyReport full_report(InverseSemigroup const& S,
                             ReportOptions const&    options = {});

  //! The identity checks on their own.
  std::vector<IdentityCheck> identity_checks(InverseSemigroup const& S,
                                             FiniteAction const&     theta,
                                             GermGroupoid const&     g);

  //! S as a .isg table document.
  std::string table_dump(InverseSemigroup const& S, std::string const& name);

}  // namespace isg

#endif  // ISG_CRITERIA_HPP_
