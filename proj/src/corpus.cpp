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

#include "isg/corpus.hpp"

#include <atomic>
#include <thread>

#include "isg/error.hpp"
#include "isg/report.hpp"

namespace isg {

  std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // reject the top partial block so every residue is equally likely
    std::uint64_t const limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t       x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  }

  namespace {
    GeneratorSpec random_injection(std::mt19937_64& rng, std::size_t degree, std::string name) {
      std::vector<std::int32_t> perm(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        perm[i] = static_cast<std::int32_t>(i);
      }
      for (std::size_t i = degree; i > 1; --i) {
        std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
      }
      // each point stays in the domain with probability 3/4
      for (auto& y : perm) {
        if (uniform_below(rng, 4) == 0) {
          y = kUndefined;
        }
      }
      return GeneratorSpec{std::move(name), std::move(perm)};
    }
  }  // namespace

  CorpusInstance corpus_instance(std::uint64_t seed, std::size_t index) {
    std::seed_seq   seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    while (true) {
      SemigroupSpec spec;
      spec.mode   = SemigroupSpec::Mode::Generators;
      spec.name   = "corpus_" + std::to_string(seed) + "_" + std::to_string(index);
      spec.degree = 2 + uniform_below(rng, 3);
      auto const k = 1 + uniform_below(rng, 3);
      for (std::size_t i = 0; i < k; ++i) {
        spec.generators.push_back(
            random_injection(rng, spec.degree, std::string(1, static_cast<char>('a' + i))));
      }
      try {
        auto S = build_semigroup(spec, kCorpusCap);
        if (S.idempotents().size() >= 2) {
          return CorpusInstance{index, std::move(spec), std::move(S)};
        }
      } catch (Error const& e) {
        if (e.code() != ErrorCode::CapExceeded) {
          throw;
        }
      }
    }
  }

  std::vector<CorpusOutcome> run_corpus(std::uint64_t        seed,
                                        std::size_t          count,
                                        ReportOptions const& options,
                                        std::size_t          jobs) {
    std::vector<CorpusOutcome> outcomes(count);
    std::atomic<std::size_t>   next{0};

    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        CorpusOutcome& out = outcomes[i];
        out.index          = i;
        out.name           = "corpus_" + std::to_string(seed) + "_" + std::to_string(i);
        try {
          auto instance = corpus_instance(seed, i);
          out.dump      = print_spec(instance.spec);
          auto report   = full_report(instance.semigroup, options);
          out.report    = emit_report(report_json(out.name, instance.semigroup, report));
        } catch (TheoremViolation const& e) {
          out.status  = 3;
          out.message = e.what();
          out.report  = emit_report(error_json(out.name, e));
        } catch (Error const& e) {
          out.status  = 1;
          out.message = e.what();
          out.report  = emit_report(error_json(out.name, e));
        }
      }
    };

    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    std::vector<std::thread> threads;
    for (std::size_t j = 1; j < jobs; ++j) {
      threads.emplace_back(worker);
    }
    worker();
    for (auto& t : threads) {
      t.join();
    }
    return outcomes;
  }

}  // namespace isg
