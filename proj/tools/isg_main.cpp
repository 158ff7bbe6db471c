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

// isg analyze: tight groupoid properties of a finite inverse semigroup.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "isg/corpus.hpp"
#include "isg/criteria.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/format.hpp"
#include "isg/report.hpp"

namespace {

  constexpr int kExitError     = 1;
  constexpr int kExitUsage     = 2;
  constexpr int kExitViolation = 3;

  struct Options {
    std::string   file;
    std::string   fixture;
    std::string   json_path;
    std::string   dot_path;
    std::string   check = "all";
    std::size_t   max_F = isg::kDefaultMaxF;
    std::uint64_t seed  = 0;
    std::size_t   corpus = 0;
    std::size_t   jobs   = 0;
    std::string   reproducer = "isg-reproducer.isg";
    bool          timing     = false;
  };

  void write_file(std::string const& path, std::string const& text) {
    if (path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw isg::Error(isg::ErrorCode::RangeError, "cannot write " + path);
    }
    out << text;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw isg::Error(isg::ErrorCode::RangeError, "cannot read " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }

  std::string yes_no(bool b) {
    return b ? "true" : "false";
  }

  void print_pair(std::string const& name, isg::VerdictPair const& p) {
    std::cout << name << ": " << yes_no(p.criterion) << " (criterion " << yes_no(p.criterion)
              << ", direct " << yes_no(p.direct) << ")\n";
  }

  void print_summary(isg::InverseSemigroup const& S,
                     isg::PropertyReport const&   r,
                     std::string const&           check) {
    auto const& L = [&](isg::Element e) { return S.label(e); };
    std::cout << "|S| = " << r.semigroup_size << ", |E| = " << r.idempotent_count
              << ", tight spectrum " << r.spectrum_size << ", groupoid " << r.arrow_count
              << " arrows on " << r.unit_count << (r.unit_count == 1 ? " unit\n" : " units\n");
    bool const all = check == "all";
    if (all || check == "hausdorff") {
      print_pair("hausdorff", r.hausdorff);
    }
    if (all || check == "esspr") {
      print_pair("essentially_principal", r.essentially_principal);
      if (auto w = r.top_free.witness) {
        std::cout << "  witness: s=" << L(w->first) << " e=" << L(w->second) << "\n";
      }
    }
    if (all || check == "minimal") {
      print_pair("minimal", r.minimal);
      if (auto w = r.minimal_witness.witness) {
        std::cout << "  witness: e=" << L(w->first) << " f=" << L(w->second) << "\n";
      }
    }
    if (all || check == "loccontr") {
      print_pair("locally_contracting", r.locally_contracting);
      std::cout << "  search: " << isg::to_string(r.loc_contr.verdict);
      if (r.loc_contr.failing_e) {
        std::cout << ", fails at e=" << L(*r.loc_contr.failing_e);
      }
      std::cout << "; action: " << isg::to_string(r.action_contraction.reason)
                << "; groupoid: " << isg::to_string(r.groupoid_contraction.reason) << "\n";
    }
    if (all) {
      std::cout << "flags: a=" << yes_no(r.flags.a) << " b=" << yes_no(r.flags.b)
                << " c=" << yes_no(r.flags.c) << " d=" << yes_no(r.flags.d) << "\n";
      for (auto const& c : r.flags.conclusions) {
        std::cout << "  " << c << "\n";
      }
    }
  }

  std::size_t max_F_from_env(std::size_t fallback) {
    if (char const* env = std::getenv("ISG_MAX_F")) {
      try {
        auto value = std::stoul(env);
        if (value > 0) {
          return value;
        }
      } catch (std::exception const&) {
      }
      std::cerr << "isg: ignoring invalid ISG_MAX_F=" << env << "\n";
    }
    return fallback;
  }

  int analyze_single(Options const& opt, isg::ReportOptions const& report_options) {
    std::string           name;
    isg::SemigroupSpec    spec;
    std::string           dump;
    std::optional<isg::InverseSemigroup> S;
    try {
      if (!opt.fixture.empty()) {
        name = opt.fixture;
        S    = isg::build_fixture(opt.fixture);
        dump = isg::table_dump(*S, name);
      } else {
        spec = isg::parse_spec(read_file(opt.file));
        name = spec.name;
        dump = isg::print_spec(spec);
        S    = isg::build_semigroup(spec);
      }
      auto start  = std::chrono::steady_clock::now();
      auto report = isg::full_report(*S, report_options);
      auto doc    = isg::report_json(name, *S, report);
      if (opt.timing) {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        doc["timing"] = isg::Json{{"seconds", elapsed.count()}};
        std::cerr << "isg: analysis took " << elapsed.count() << " s\n";
      }
      if (opt.json_path != "-" && opt.dot_path != "-") {
        print_summary(*S, report, opt.check);
      }
      if (!opt.json_path.empty()) {
        write_file(opt.json_path, isg::emit_report(doc));
      }
      if (!opt.dot_path.empty()) {
        auto shared = std::make_shared<isg::InverseSemigroup const>(*S);
        auto g      = isg::build_germ_groupoid(
            isg::standard_action(shared, isg::tight_spectrum(*S)));
        write_file(opt.dot_path, isg::emit_dot(g, name));
      }
      return 0;
    } catch (isg::TheoremViolation const& e) {
      std::cerr << "isg: " << e.what() << "\n";
      write_file(opt.reproducer, dump.empty() ? e.dump() : dump);
      std::cerr << "isg: instance written to " << opt.reproducer << "\n";
      return kExitViolation;
    } catch (isg::Error const& e) {
      std::cerr << "isg: " << e.what() << "\n";
      if (!opt.json_path.empty()) {
        write_file(opt.json_path, isg::emit_report(isg::error_json(name, e)));
      }
      return kExitError;
    }
  }

  int analyze_corpus(Options const& opt, isg::ReportOptions const& report_options) {
    std::size_t jobs = opt.jobs;
    if (jobs == 0) {
      jobs = std::max(1U, std::thread::hardware_concurrency());
    }
    auto start    = std::chrono::steady_clock::now();
    auto outcomes = isg::run_corpus(opt.seed, opt.corpus, report_options, jobs);

    std::size_t passed = 0;
    int         status = 0;
    std::string combined = "[\n";
    for (auto const& o : outcomes) {
      if (o.status == 0) {
        ++passed;
      } else {
        std::cerr << "isg: " << o.name << ": " << o.message << "\n";
        if (o.status == kExitViolation && status != kExitViolation) {
          write_file(opt.reproducer, o.dump);
          std::cerr << "isg: instance written to " << opt.reproducer << "\n";
        }
        status = std::max(status, o.status);
      }
      combined += o.report;
      if (o.index + 1 < outcomes.size()) {
        combined += ",\n";
      }
    }
    combined += "]\n";
    (opt.json_path == "-" ? std::cerr : std::cout)
        << passed << "/" << outcomes.size() << " equivalence checks passed (seed "
              << opt.seed << ")\n";
    if (opt.timing) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      std::cerr << "isg: corpus took " << elapsed.count() << " s\n";
    }
    if (!opt.json_path.empty()) {
      write_file(opt.json_path, combined);
    }
    return status;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight groupoid properties of finite inverse semigroups"};
  app.require_subcommand(1);
  Options opt;
  opt.max_F = max_F_from_env(opt.max_F);

  auto* analyze = app.add_subcommand("analyze", "analyze a .isg file, a fixture or a random corpus");
  analyze->add_option("file", opt.file, ".isg input file");
  analyze->add_option("--fixture", opt.fixture, "I2, B2, Z2z, E4, I<n>, B<n> or Z<n>z");
  analyze->add_option("--json", opt.json_path, "write the JSON report to PATH (- for stdout)");
  analyze->add_option("--dot", opt.dot_path, "write the groupoid as DOT to PATH (- for stdout)");
  analyze->add_option("--check", opt.check, "which property to print")
      ->check(CLI::IsMember({"hausdorff", "esspr", "minimal", "loccontr", "all"}));
  analyze->add_option("--max-F", opt.max_F, "bound on |F| in the local contraction search")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--seed", opt.seed, "corpus seed");
  analyze->add_option("--corpus", opt.corpus, "analyze N random instances");
  analyze->add_option("--jobs", opt.jobs, "worker threads for --corpus (default: all cores)");
  analyze->add_option("--reproducer", opt.reproducer,
                      "where to write the instance on a theorem violation");
  analyze->add_flag("--timing", opt.timing, "report timing on stderr and in the JSON");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  int sources = !opt.file.empty() + !opt.fixture.empty() + (opt.corpus > 0);
  if (sources != 1) {
    std::cerr << "isg: give exactly one of FILE, --fixture or --corpus\n";
    return kExitUsage;
  }

  isg::ReportOptions report_options;
  report_options.max_F = opt.max_F;
  try {
    return opt.corpus > 0 ? analyze_corpus(opt, report_options)
                          : analyze_single(opt, report_options);
  } catch (isg::Error const& e) {
    std::cerr << "isg: " << e.what() << "\n";
    return kExitError;
  }
}
