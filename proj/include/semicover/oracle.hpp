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

// Brute-force ground truth: every proper substructure of a given kind is
// enumerated, and a minimum cover is found by exact search. Nothing here
// uses Green's relations or Rees coordinates.

#ifndef SEMICOVER_ORACLE_HPP_
#define SEMICOVER_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "cover.hpp"
#include "semigroup.hpp"

namespace semicover {

  inline constexpr std::size_t default_oracle_cap = 16;
  inline constexpr std::size_t hard_oracle_cap    = 24;

  //! Members are distinct, proper, nonempty, and in canonical order.
  struct SubalgebraSet {
    Kind                    kind = Kind::subsemigroup;
    std::vector<ElementSet> members;
  };

  //! Throws order_cap_exceeded if |S| > cap, invalid_argument if cap exceeds
  //! hard_oracle_cap, not_inverse / no_identity if the kind does not apply.
  SubalgebraSet all_proper_subalgebras(FiniteSemigroup const& s,
                                       StructureFlags const&  flags,
                                       Kind                   kind,
                                       std::size_t cap = default_oracle_cap);

  SubalgebraSet maximal_proper(FiniteSemigroup const& s,
                               StructureFlags const&  flags,
                               Kind                   kind,
                               std::size_t            cap = default_oracle_cap);

  //! Exact covering number. Infinite iff some element lies in no proper
  //! member; the least such element is the witness.
  CoveringResult minimal_cover_exact(FiniteSemigroup const& s,
                                     StructureFlags const&  flags,
                                     Kind                   kind,
                                     std::size_t cap = default_oracle_cap);

}  // namespace semicover

#endif  // SEMICOVER_ORACLE_HPP_
