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

#include "isg/report.hpp"

#include <sstream>

namespace isg {

  namespace {
    Json labels(InverseSemigroup const& S, IndexSet const& set) {
      Json result = Json::array();
      for (auto x : bits(set)) {
        result.push_back(S.label(static_cast<Element>(x)));
      }
      return result;
    }

    Json labels(InverseSemigroup const& S, std::vector<Element> const& elements) {
      Json result = Json::array();
      for (auto x : elements) {
        result.push_back(S.label(x));
      }
      return result;
    }

    Json pair_json(VerdictPair const& p) {
      return Json{{"criterion", p.criterion}, {"direct", p.direct}};
    }

    Json contraction_json(LocalContractionVerdict const& v) {
      Json result{{"holds", v.holds}, {"reason", std::string(to_string(v.reason))}};
      result["search"] = v.search ? Json(*v.search) : Json(nullptr);
      return result;
    }

    Json optional_label(InverseSemigroup const& S, std::optional<Element> e) {
      return e ? Json(S.label(*e)) : Json(nullptr);
    }
  }  // namespace

  Json report_json(std::string const&      name,
                   InverseSemigroup const& S,
                   PropertyReport const&   r) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["instance"]       = Json{{"name", name},
                                 {"semigroup_size", r.semigroup_size},
                                 {"idempotent_count", r.idempotent_count},
                                 {"spectrum_size", r.spectrum_size},
                                 {"arrow_count", r.arrow_count},
                                 {"unit_count", r.unit_count},
                                 {"e_star_unitary", r.e_star_unitary}};
    doc["verdicts"] = Json{{"hausdorff", pair_json(r.hausdorff)},
                           {"essentially_principal", pair_json(r.essentially_principal)},
                           {"minimal", pair_json(r.minimal)},
                           {"locally_contracting", pair_json(r.locally_contracting)}};

    Json covers = Json::array();
    for (Element s = 0; s < S.size(); ++s) {
      covers.push_back(Json{{"s", S.label(s)},
                            {"cover", labels(S, r.hausdorff_witness.covers[s].members)}});
    }

    Json top_free{{"holds", r.top_free.holds},
                  {"weakly_fixed_pairs", r.top_free.weakly_fixed_pairs}};
    top_free["counterexample"]
        = r.top_free.witness ? Json{{"s", S.label(r.top_free.witness->first)},
                                    {"e", S.label(r.top_free.witness->second)}}
                             : Json(nullptr);

    Json families = Json::array();
    for (auto const& f : r.minimal_witness.families) {
      families.push_back(Json{{"e", S.label(f.e)},
                              {"f", S.label(f.f)},
                              {"conjugators", labels(S, f.conjugators)}});
    }
    Json minimal{{"holds", r.minimal_witness.holds}};
    minimal["counterexample"]
        = r.minimal_witness.witness
              ? Json{{"e", S.label(r.minimal_witness.witness->first)},
                     {"f", S.label(r.minimal_witness.witness->second)}}
              : Json(nullptr);
    minimal["families"]    = std::move(families);
    minimal["irreducible"] = r.irreducible;

    Json contraction_witnesses = Json::array();
    for (auto const& w : r.loc_contr.witnesses) {
      contraction_witnesses.push_back(
          Json{{"e", S.label(w.e)}, {"s", S.label(w.s)}, {"F", labels(S, w.F)}});
    }
    Json easier_witnesses = Json::array();
    for (auto const& w : r.easier.witnesses) {
      easier_witnesses.push_back(Json{{"e", S.label(w.e)},
                                      {"s", S.label(w.s)},
                                      {"f0", S.label(w.f0)},
                                      {"f1", S.label(w.f1)}});
    }
    Json loc{{"search", std::string(to_string(r.loc_contr.verdict))},
             {"max_F", r.loc_contr.max_F},
             {"vacuous", r.loc_contr.vacuous}};
    loc["failing_e"] = optional_label(S, r.loc_contr.failing_e);
    loc["witnesses"] = std::move(contraction_witnesses);
    loc["easier"]    = Json{{"holds", r.easier.holds},
                            {"vacuous", r.easier.vacuous},
                            {"failing_e", optional_label(S, r.easier.failing_e)},
                            {"witnesses", std::move(easier_witnesses)}};
    loc["action"]    = contraction_json(r.action_contraction);
    loc["groupoid"]  = contraction_json(r.groupoid_contraction);

    doc["witnesses"] = Json{{"hausdorff", std::move(covers)},
                            {"essentially_principal", std::move(top_free)},
                            {"hausdorff_and_essentially_principal",
                             r.ess_principal_and_hausdorff},
                            {"minimal", std::move(minimal)},
                            {"locally_contracting", std::move(loc)}};

    doc["cstar_flags"] = Json{{"a", r.flags.a},
                              {"b", r.flags.b},
                              {"c", r.flags.c},
                              {"d", r.flags.d},
                              {"conclusions", r.flags.conclusions},
                              {"hypotheses", r.flags.hypotheses}};

    Json identities = Json::array();
    for (auto const& check : r.identities) {
      identities.push_back(
          Json{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    }
    doc["identities"]              = std::move(identities);
    doc["groupoid_axioms_checked"] = r.groupoid_axioms_checked;
    return doc;
  }

  Json error_json(std::string const& name, Error const& error) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["instance"]       = Json{{"name", name}};
    doc["error"]          = Json{{"code", std::string(to_string(error.code()))},
                                 {"message", error.what()}};
    return doc;
  }

  std::string emit_report(Json const& doc) {
    return doc.dump(2) + "\n";
  }

  std::string emit_dot(GermGroupoid const& g, std::string const& name) {
    auto quote = [](std::string const& s) { return Json(s).dump(); };
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n";
    for (Point x = 0; x < g.unit_count(); ++x) {
      out << "  u" << x << " [label=" << quote(std::to_string(x)) << "];\n";
    }
    for (Arrow a = 0; a < g.size(); ++a) {
      if (!g.is_unit(a)) {
        out << "  u" << g.src(a) << " -> u" << g.rng(a) << " [label=" << quote(g.label(a))
            << "];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace isg
