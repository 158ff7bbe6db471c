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

// Named example semigroups and standard families.

#ifndef ISG_FIXTURES_HPP_
#define ISG_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "semigroup.hpp"

namespace isg {

  //! Largest n accepted by symmetric_inverse_monoid unless a cap is given.
  inline constexpr std::size_t kDefaultInCap = 4;
  inline constexpr std::size_t kDefaultBnCap = 16;
  inline constexpr std::size_t kDefaultZnCap = 64;

  //! |I_n| = sum over k of C(n, k)^2 k!.
  std::size_t symmetric_inverse_monoid_size(std::size_t n);

  //! All partial bijections of n points under composition; the empty map is
  //! element 0. Throws CapExceeded if n > cap.
  InverseSemigroup symmetric_inverse_monoid(std::size_t n,
                                            std::size_t cap = kDefaultInCap);

  //! The n x n matrix units e_ij with zero: e_ij e_kl = e_il if j = k and 0
  //! otherwise. Element 0 is zero, e_ij is 1 + (i - 1) n + (j - 1).
  //! Throws CapExceeded if n > cap.
  InverseSemigroup brandt(std::size_t n, std::size_t cap = kDefaultBnCap);

  //! A group with a zero adjoined. \p group is the Cayley table on
  //! 0, ..., k - 1; in the result the zero is element 0 and group element i
  //! is element i + 1.
  InverseSemigroup group_with_zero(Table const&             group,
                                   std::vector<std::string> labels = {});

  //! The cyclic group of order n with zero; labels 0, 1, g, g^2, ...
  InverseSemigroup cyclic_group_with_zero(std::size_t n,
                                          std::size_t cap = kDefaultZnCap);

  //! The 0-direct union: S and T with their zeros identified and all
  //! products between them zero. Labels from T get a trailing '.
  InverseSemigroup zero_direct_union(InverseSemigroup const& S,
                                     InverseSemigroup const& T);

  //! The semilattice 0 < a, b < 1 with ab = 0.
  InverseSemigroup diamond_semilattice();

  //! One of I2, B2, Z2z, E4, or a family member I<n>, B<n>, Z<n>z.
  //! Throws RangeError for an unknown name and CapExceeded past a cap.
  InverseSemigroup build_fixture(std::string_view name);

  //! The four named fixtures.
  std::vector<std::string> const& fixture_names();

}  // namespace isg

#endif  // ISG_FIXTURES_HPP_
