// Copyright 2026 The semicover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEMICOVER_GROUPS_HPP_
#define SEMICOVER_GROUPS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cover.hpp"
#include "element_set.hpp"
#include "semigroup.hpp"

namespace semicover {

  inline constexpr std::size_t default_group_order_cap = 128;

  struct SubgroupLattice {
    //! All subgroups in canonical order; the first is trivial, the last is
    //! the whole group.
    std::vector<ElementSet>  subgroups;
    std::vector<std::size_t> maximal_proper;
  };

  //! Throws not_a_group or order_cap_exceeded.
  SubgroupLattice subgroup_lattice(FiniteSemigroup const& g,
                                   std::size_t cap = default_group_order_cap);

  bool is_cyclic_group(FiniteSemigroup const& g);

  //! Covering number of a finite group by proper subgroups.
  CoveringResult sigma_g(FiniteSemigroup const& g,
                         std::size_t cap = default_group_order_cap);

  //! Least [G : H] over proper subgroups H; infinity for the trivial group.
  NatOrInfinity min_proper_index(FiniteSemigroup const& g,
                                 std::size_t cap = default_group_order_cap);

  //! A proper subgroup of least index (the first in canonical order), or
  //! nullopt for the trivial group.
  std::optional<ElementSet> min_index_subgroup(
      FiniteSemigroup const& g,
      std::size_t            cap = default_group_order_cap);

  //! One representative per right coset Bg, each the least element of its
  //! coset; the coset of the identity comes first.
  std::vector<ElementId> right_coset_representatives(FiniteSemigroup const& g,
                                                     ElementSet const&      b);

  ElementId group_inverse(FiniteSemigroup const& g, ElementId x);

  // Small group catalog. Every catalog group has its identity at index 0.

  //! Names: C1..C12, V4 (alias C2xC2), S3, D4, Q8, A4, D5, S4, A5.
  std::optional<FiniteSemigroup> catalog_group(std::string_view name);
  std::vector<std::string>       catalog_names();

  //! Cyclic group of order n with identity at index 0 and k*l = k+l mod n.
  FiniteSemigroup cyclic_group(std::size_t n);

  //! The group generated by permutations of \p points points; the identity
  //! is element 0.
  FiniteSemigroup permutation_group(
      std::size_t                                    points,
      std::vector<std::vector<std::uint32_t>> const& gens);

}  // namespace semicover

#endif  // SEMICOVER_GROUPS_HPP_
