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

#ifndef SEMICOVER_SET_COVER_HPP_
#define SEMICOVER_SET_COVER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "element_set.hpp"

namespace semicover {

  //! Exact minimum set cover.
  //!
  //! Returns the indices (increasing) of a minimum-size subfamily of
  //! \p candidates whose union contains \p target, choosing the
  //! lexicographically least index set among all minimum covers. Returns
  //! nullopt if the union of all candidates misses part of \p target.
  //!
  //! Iterative deepening on the cover size; each depth is a DFS over
  //! increasing indices pruned by (uncovered / largest remaining part) and
  //! by the last candidate able to cover the least uncovered element.
  std::optional<std::vector<std::size_t>> minimum_set_cover(
      std::span<ElementSet const> candidates,
      ElementSet const&           target);

}  // namespace semicover

#endif  // SEMICOVER_SET_COVER_HPP_
