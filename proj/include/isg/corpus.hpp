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

// Seeded random instances generated by partial injections.

#ifndef ISG_CORPUS_HPP_
#define ISG_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "format.hpp"
#include "semigroup.hpp"

namespace isg {

  inline constexpr std::size_t kCorpusCap = 300;

  //! Uniform on {0, ..., bound - 1} by rejection. The standard
  //! distributions are implementation defined, so they are avoided to keep
  //! corpora identical across standard libraries.
  std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

  struct CorpusInstance {
    std::size_t      index = 0;
    SemigroupSpec    spec;
    InverseSemigroup semigroup;
  };

  //! Instance \p index of the corpus for \p seed: degree 2 to 4, one to
  //! three random partial injections, closed with at most kCorpusCap
  //! elements. Draws that exceed the cap, or whose closure has zero as its
  //! only idempotent, are discarded and redrawn from the same stream.
  CorpusInstance corpus_instance(std::uint64_t seed, std::size_t index);

  struct CorpusOutcome {
    std::size_t index = 0;
    std::string name;
    //! 0 when the report was produced, 3 on TheoremViolation, 1 on any
    //! other error.
    int         status = 0;
    std::string message;
    std::string report;  // the JSON document, or the error document
    std::string dump;    // .isg text of the instance
  };

  //! Generates and analyses instances 0, ..., count - 1 on \p jobs threads.
  //! Outcomes are returned in index order whatever the scheduling.
  std::vector<CorpusOutcome> run_corpus(std::uint64_t        seed,
                                        std::size_t          count,
                                        ReportOptions const& options,
                                        std::size_t          jobs = 1);

}  // namespace isg

#endif  // ISG_CORPUS_HPP_
