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

#include "semicover/set_cover.hpp"

#include <algorithm>

namespace semicover {

  namespace {
    class DepthSearch {
     public:
      DepthSearch(std::span<ElementSet const> candidates, ElementSet const& target)
          : _cands(candidates),
            _target(target),
            _last(target.universe(), 0),
            _suffix_max(candidates.size() + 1, 0) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          (candidates[i] & target).for_each([&](ElementId x) { _last[x] = i; });
        }
        for (std::size_t i = candidates.size(); i-- > 0;) {
          _suffix_max[i] = std::max(_suffix_max[i + 1], (candidates[i] & target).count());
        }
      }

      bool run(std::size_t depth) {
        _chosen.clear();
        return dfs(0, depth, ElementSet(_target.universe()));
      }

      std::vector<std::size_t> const& chosen() const noexcept {
        return _chosen;
      }

     private:
      bool dfs(std::size_t start, std::size_t left, ElementSet const& covered) {
        ElementSet const missing = _target - covered;
        if (missing.empty()) {
          return true;
        }
        if (left == 0 || start >= _cands.size()) {
          return false;
        }
        if (missing.count() > left * _suffix_max[start]) {
          return false;
        }
        // the least missing element must be covered by a later choice
        ElementId const u = missing.first();
        if (_last[u] < start) {
          return false;
        }
        for (std::size_t i = start; i <= _last[u]; ++i) {
          _chosen.push_back(i);
          if (dfs(i + 1, left - 1, covered | _cands[i])) {
            return true;
          }
          _chosen.pop_back();
        }
        return false;
      }

      std::span<ElementSet const> _cands;
      ElementSet const&           _target;
      std::vector<std::size_t>    _last;
      std::vector<std::size_t>    _suffix_max;
      std::vector<std::size_t>    _chosen;
    };
  }  // namespace

  std::optional<std::vector<std::size_t>> minimum_set_cover(
      std::span<ElementSet const> candidates,
      ElementSet const&           target) {
    ElementSet all(target.universe());
    std::size_t largest = 0;
    for (auto const& c : candidates) {
      all |= c;
      largest = std::max(largest, (c & target).count());
    }
    if (!target.is_subset_of(all)) {
      return std::nullopt;
    }
    std::size_t const need = target.count();
    if (need == 0) {
      return std::vector<std::size_t>{};
    }
    DepthSearch search(candidates, target);
    for (std::size_t depth = (need + largest - 1) / largest; depth <= candidates.size();
         ++depth) {
      if (search.run(depth)) {
        return search.chosen();
      }
    }
    return std::nullopt;  // unreachable: all candidates together cover target
  }

}  // namespace semicover
