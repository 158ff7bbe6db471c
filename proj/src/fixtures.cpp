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

#include "isg/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "isg/error.hpp"

namespace isg {

  namespace {
    void check_cap(std::size_t n, std::size_t cap, std::string const& what) {
      if (n > cap) {
        throw Error(ErrorCode::CapExceeded,
                    what + " is limited to n <= " + std::to_string(cap));
      }
    }

    void check_size(InverseSemigroup const& S, std::size_t expected, std::string const& what) {
      if (S.size() != expected) {
        throw Error(ErrorCode::CapExceeded,
                    what + " has " + std::to_string(S.size()) + " elements, expected "
                        + std::to_string(expected));
      }
    }

    // partial injections of n points, by increasing domain then lexicographic
    void partial_injections(std::size_t                n,
                            std::vector<std::int32_t>& images,
                            std::vector<bool>&         used,
                            std::vector<PartialMap>&   out) {
      std::size_t const x = images.size();
      if (x == n) {
        out.emplace_back(images);
        return;
      }
      images.push_back(kUndefined);
      partial_injections(n, images, used, out);
      images.pop_back();
      for (std::size_t y = 0; y < n; ++y) {
        if (!used[y]) {
          used[y] = true;
          images.push_back(static_cast<std::int32_t>(y));
          partial_injections(n, images, used, out);
          images.pop_back();
          used[y] = false;
        }
      }
    }

    std::size_t parse_index(std::string_view digits, std::string_view name) {
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw Error(ErrorCode::RangeError, "unknown fixture '" + std::string(name) + "'");
      }
      return n;
    }
  }  // namespace

  std::size_t symmetric_inverse_monoid_size(std::size_t n) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t choose = 1;
      for (std::size_t i = 0; i < k; ++i) {
        choose = choose * (n - i) / (i + 1);
      }
      std::size_t factorial = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        factorial *= i;
      }
      total += choose * choose * factorial;
    }
    return total;
  }

  InverseSemigroup symmetric_inverse_monoid(std::size_t n, std::size_t cap) {
    check_cap(n, cap, "I_n");
    std::vector<PartialMap>   maps;
    std::vector<std::int32_t> images;
    std::vector<bool>         used(n, false);
    partial_injections(n, images, used, maps);
    auto result = from_partial_maps(n, maps).semigroup;
    check_size(result, symmetric_inverse_monoid_size(n), "I_" + std::to_string(n));
    return result;
  }

  InverseSemigroup brandt(std::size_t n, std::size_t cap) {
    check_cap(n, cap, "B_n");
    std::size_t const        size = n * n + 1;
    Table                    table(size, std::vector<Element>(size, 0));
    std::vector<std::string> labels{"0"};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
        for (std::size_t l = 0; l < n; ++l) {
          // e_ij e_jl = e_il
          table[1 + i * n + j][1 + j * n + l] = static_cast<Element>(1 + i * n + l);
        }
      }
    }
    if (n >= 10) {
      for (std::size_t k = 1; k < size; ++k) {
        std::size_t i = (k - 1) / n + 1, j = (k - 1) % n + 1;
        labels[k] = "e" + std::to_string(i) + "," + std::to_string(j);
      }
    }
    auto result = InverseSemigroup::from_table(table, 0, std::move(labels));
    check_size(result, size, "B_" + std::to_string(n));
    return result;
  }

  InverseSemigroup group_with_zero(Table const& group, std::vector<std::string> labels) {
    std::size_t const k = group.size();
    Table             table(k + 1, std::vector<Element>(k + 1, 0));
    for (std::size_t a = 0; a < k; ++a) {
      if (group[a].size() != k) {
        throw Error(ErrorCode::RangeError, "the group table is not square");
      }
      for (std::size_t b = 0; b < k; ++b) {
        if (group[a][b] >= k) {
          throw Error(ErrorCode::RangeError, "group table entry out of range");
        }
        table[a + 1][b + 1] = group[a][b] + 1;
      }
    }
    if (labels.empty()) {
      labels.emplace_back("0");
      for (std::size_t a = 0; a < k; ++a) {
        labels.push_back("g" + std::to_string(a));
      }
    }
    return InverseSemigroup::from_table(table, 0, std::move(labels));
  }

  InverseSemigroup cyclic_group_with_zero(std::size_t n, std::size_t cap) {
    check_cap(n, cap, "Z_n");
    if (n == 0) {
      throw Error(ErrorCode::RangeError, "a cyclic group has order at least 1");
    }
    Table                    group(n, std::vector<Element>(n));
    std::vector<std::string> labels{"0", "1"};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        group[a][b] = static_cast<Element>((a + b) % n);
      }
      if (a >= 1) {
        labels.push_back(a == 1 ? "g" : "g^" + std::to_string(a));
      }
    }
    auto result = group_with_zero(group, std::move(labels));
    check_size(result, n + 1, "Z_" + std::to_string(n));
    return result;
  }

  InverseSemigroup zero_direct_union(InverseSemigroup const& S, InverseSemigroup const& T) {
    std::size_t const    m = S.size(), n = T.size();
    std::size_t const    size = m + n - 1;
    std::vector<Element> from_s(m), from_t(n);
    std::vector<std::string> labels{"0"};
    Element              next = 1;
    for (Element a = 0; a < m; ++a) {
      if (a != S.zero()) {
        from_s[a] = next++;
        labels.push_back(S.label(a));
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (a != T.zero()) {
        from_t[a] = next++;
        labels.push_back(T.label(a) + "'");
      }
    }
    from_s[S.zero()] = 0;
    from_t[T.zero()] = 0;
    Table table(size, std::vector<Element>(size, 0));
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        table[from_s[a]][from_s[b]] = from_s[S.product(a, b)];
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        table[from_t[a]][from_t[b]] = from_t[T.product(a, b)];
      }
    }
    return InverseSemigroup::from_table(table, 0, std::move(labels));
  }

  InverseSemigroup diamond_semilattice() {
    // 0, a, b, 1
    Table table{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
    return InverseSemigroup::from_table(table, 0, {"0", "a", "b", "1"});
  }

  InverseSemigroup build_fixture(std::string_view name) {
    if (name == "I2") {
      return symmetric_inverse_monoid(2);
    }
    if (name == "B2") {
      return brandt(2);
    }
    if (name == "Z2z") {
      return cyclic_group_with_zero(2);
    }
    if (name == "E4") {
      return diamond_semilattice();
    }
    if (name.size() >= 2 && name[0] == 'I') {
      return symmetric_inverse_monoid(parse_index(name.substr(1), name));
    }
    if (name.size() >= 2 && name[0] == 'B') {
      return brandt(parse_index(name.substr(1), name));
    }
    if (name.size() >= 3 && name[0] == 'Z' && name.substr(name.size() - 1) == "z") {
      return cyclic_group_with_zero(parse_index(name.substr(1, name.size() - 2), name));
    }
    throw Error(ErrorCode::RangeError, "unknown fixture '" + std::string(name) + "'");
  }

  std::vector<std::string> const& fixture_names() {
    static std::vector<std::string> const names{"I2", "B2", "Z2z", "E4"};
    return names;
  }

}  // namespace isg
