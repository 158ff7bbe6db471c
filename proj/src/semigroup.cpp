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

#include "isg/semigroup.hpp"

#include <deque>
#include <map>

#include "isg/error.hpp"

namespace isg {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::NoZero: return "NoZero";
      case ErrorCode::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
      case ErrorCode::InverseNotUnique: return "InverseNotUnique";
      case ErrorCode::InverseMissing: return "InverseMissing";
      case ErrorCode::NotInjective: return "NotInjective";
      case ErrorCode::DegreeMismatch: return "DegreeMismatch";
      case ErrorCode::CapExceeded: return "CapExceeded";
      case ErrorCode::NotIdempotent: return "NotIdempotent";
      case ErrorCode::NotAnIdeal: return "NotAnIdeal";
      case ErrorCode::ZeroGeneratesNoFilter: return "ZeroGeneratesNoFilter";
      case ErrorCode::NotAFilter: return "NotAFilter";
      case ErrorCode::NotACharacter: return "NotACharacter";
      case ErrorCode::EmptySpectrum: return "EmptySpectrum";
      case ErrorCode::NotInDomain: return "NotInDomain";
      case ErrorCode::InvalidAction: return "InvalidAction";
      case ErrorCode::DomainViolation: return "DomainViolation";
      case ErrorCode::PreconditionViolated: return "PreconditionViolated";
      case ErrorCode::TheoremViolation: return "TheoremViolation";
      case ErrorCode::SyntaxError: return "SyntaxError";
      case ErrorCode::RangeError: return "RangeError";
      case ErrorCode::DuplicateName: return "DuplicateName";
    }
    return "Unknown";
  }

  InverseSemigroup InverseSemigroup::from_table(Table const&             table,
                                                Element                  zero,
                                                std::vector<std::string> labels) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorCode::RangeError, "the table must have at least one row");
    }
    InverseSemigroup S;
    S._size = n;
    S._table.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error(ErrorCode::RangeError,
                    "row " + std::to_string(a) + " has "
                        + std::to_string(table[a].size()) + " entries, expected "
                        + std::to_string(n));
      }
      for (auto ab : table[a]) {
        if (ab >= n) {
          throw Error(ErrorCode::RangeError,
                      "entry " + std::to_string(ab) + " in row "
                          + std::to_string(a) + " is out of range");
        }
        S._table.push_back(ab);
      }
    }

    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element const ab = S.product(a, b);
        for (Element c = 0; c < n; ++c) {
          if (S.product(ab, c) != S.product(a, S.product(b, c))) {
            throw Error(ErrorCode::NotAssociative,
                        "(" + std::to_string(a) + " * " + std::to_string(b)
                            + ") * " + std::to_string(c) + " != "
                            + std::to_string(a) + " * (" + std::to_string(b)
                            + " * " + std::to_string(c) + ")");
          }
        }
      }
    }

    S._star.resize(n);
    for (Element s = 0; s < n; ++s) {
      std::size_t found = 0;
      for (Element t = 0; t < n; ++t) {
        if (S.product(s, t, s) == s && S.product(t, s, t) == t) {
          S._star[s] = t;
          ++found;
        }
      }
      if (found == 0) {
        throw Error(ErrorCode::InverseMissing,
                    "element " + std::to_string(s) + " has no inverse");
      } else if (found > 1) {
        throw Error(ErrorCode::InverseNotUnique,
                    "element " + std::to_string(s) + " has "
                        + std::to_string(found) + " inverses");
      }
    }

    if (zero >= n) {
      throw Error(ErrorCode::NoZero,
                  "zero index " + std::to_string(zero) + " is out of range");
    }
    for (Element s = 0; s < n; ++s) {
      if (S.product(s, zero) != zero || S.product(zero, s) != zero) {
        throw Error(ErrorCode::ZeroNotAbsorbing,
                    "element " + std::to_string(s) + " does not absorb to "
                        + std::to_string(zero));
      }
    }
    S._zero = zero;

    S._idempotent_set = IndexSet(n);
    for (Element e = 0; e < n; ++e) {
      if (S.product(e, e) == e) {
        S._idempotents.push_back(e);
        S._idempotent_set.set(e);
      }
    }

    if (labels.empty()) {
      labels.reserve(n);
      for (std::size_t s = 0; s < n; ++s) {
        labels.push_back(std::to_string(s));
      }
    } else if (labels.size() != n) {
      throw Error(ErrorCode::RangeError,
                  "expected " + std::to_string(n) + " labels, got "
                      + std::to_string(labels.size()));
    }
    S._labels = std::move(labels);
    return S;
  }

  Table InverseSemigroup::table() const {
    Table result(_size, std::vector<Element>(_size));
    for (Element a = 0; a < _size; ++a) {
      for (Element b = 0; b < _size; ++b) {
        result[a][b] = product(a, b);
      }
    }
    return result;
  }

  void InverseSemigroup::require_idempotent(Element e) const {
    if (e >= _size || !is_idempotent(e)) {
      throw Error(ErrorCode::NotIdempotent,
                  "element " + std::to_string(e) + " is not an idempotent");
    }
  }

  Element InverseSemigroup::meet(Element e, Element f) const {
    require_idempotent(e);
    require_idempotent(f);
    return product(e, f);
  }

  bool InverseSemigroup::orthogonal(Element e, Element f) const {
    return meet(e, f) == _zero;
  }

  bool InverseSemigroup::intersects(Element e, Element f) const {
    return !orthogonal(e, f);
  }

  ConcreteSemigroup from_partial_maps(std::size_t                    degree,
                                      std::vector<PartialMap> const& generators,
                                      std::size_t                    max_size) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].degree() != degree) {
        throw Error(ErrorCode::DegreeMismatch,
                    "generator " + std::to_string(i) + " has degree "
                        + std::to_string(generators[i].degree()) + ", expected "
                        + std::to_string(degree));
      }
      if (!generators[i].is_injective()) {
        throw Error(ErrorCode::NotInjective,
                    "generator " + std::to_string(i) + " ("
                        + generators[i].to_string() + ") is not injective");
      }
    }

    std::vector<PartialMap>       maps{PartialMap::empty(degree)};
    std::map<PartialMap, Element> index{{maps[0], 0}};
    std::deque<Element>           queue;

    auto add = [&](PartialMap const& p) {
      if (index.emplace(p, static_cast<Element>(maps.size())).second) {
        if (maps.size() >= max_size) {
          throw Error(ErrorCode::CapExceeded,
                      "closure exceeds " + std::to_string(max_size)
                          + " elements");
        }
        queue.push_back(static_cast<Element>(maps.size()));
        maps.push_back(p);
      }
    };

    std::vector<PartialMap> letters;
    for (auto const& g : generators) {
      letters.push_back(g);
      letters.push_back(g.inverse());
    }
    for (auto const& g : letters) {
      add(g);
    }
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (auto const& g : letters) {
        // maps may reallocate inside add(), so copy the operand first
        PartialMap const current = maps[x];
        add(compose(current, g));
      }
    }

    std::size_t const n = maps.size();
    Table             table(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a][b] = index.at(compose(maps[a], maps[b]));
      }
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto const& p : maps) {
      labels.push_back("(" + p.to_string() + ")");
    }
    return ConcreteSemigroup{
        InverseSemigroup::from_table(table, 0, std::move(labels)),
        std::move(maps)};
  }

}  // namespace isg
