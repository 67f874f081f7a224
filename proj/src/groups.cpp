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

#include "semicover/groups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "semicover/error.hpp"
#include "semicover/set_cover.hpp"

namespace semicover {

  namespace {
    void require_group(FiniteSemigroup const& g, std::size_t cap) {
      if (g.size() > cap) {
        fail(ErrorCode::order_cap_exceeded,
             "group of order " + std::to_string(g.size()) + " exceeds the cap "
                 + std::to_string(cap));
      }
      if (!structure_flags(g).is_group) {
        fail(ErrorCode::not_a_group, "the semigroup is not a group");
      }
    }

    ElementId identity_of(FiniteSemigroup const& g) {
      auto e = find_identity(g);
      if (!e) {
        fail(ErrorCode::not_a_group, "the semigroup has no identity");
      }
      return *e;
    }
  }  // namespace

  SubgroupLattice subgroup_lattice(FiniteSemigroup const& g, std::size_t cap) {
    require_group(g, cap);
    std::size_t const n = g.size();
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::deque<ElementSet>                         queue;
    auto push = [&](ElementSet h) {
      if (seen.insert(h).second) {
        queue.push_back(std::move(h));
      }
    };
    push(ElementSet(n, {identity_of(g)}));
    for (ElementId x = 0; x < n; ++x) {
      push(closure(g, ElementSet(n, {x})));
    }
    // every subgroup is reached by adding generators one at a time
    while (!queue.empty()) {
      ElementSet h = std::move(queue.front());
      queue.pop_front();
      for (ElementId x = 0; x < n; ++x) {
        if (!h.contains(x)) {
          ElementSet bigger = h;
          bigger.insert(x);
          push(closure(g, bigger));
        }
      }
    }
    SubgroupLattice lat;
    lat.subgroups.assign(seen.begin(), seen.end());
    std::sort(lat.subgroups.begin(), lat.subgroups.end(), canonical_less);
    for (std::size_t i = 0; i + 1 < lat.subgroups.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j + 1 < lat.subgroups.size() && maximal; ++j) {
        maximal = j == i || !lat.subgroups[i].is_subset_of(lat.subgroups[j]);
      }
      if (maximal) {
        lat.maximal_proper.push_back(i);
      }
    }
    return lat;
  }

  bool is_cyclic_group(FiniteSemigroup const& g) {
    return is_monogenic(g).has_value();
  }

  CoveringResult sigma_g(FiniteSemigroup const& g, std::size_t cap) {
    require_group(g, cap);
    if (auto x = is_monogenic(g)) {
      return infinite_result(CaseTag::cyclic_group, *x);
    }
    auto const              lat = subgroup_lattice(g, cap);
    std::vector<ElementSet> maximal;
    for (auto i : lat.maximal_proper) {
      maximal.push_back(lat.subgroups[i]);
    }
    auto chosen = minimum_set_cover(maximal, g.all());
    if (!chosen) {
      fail(ErrorCode::internal, "maximal subgroups of a non-cyclic group must cover it");
    }
    Cover c{Kind::subgroup, {}};
    for (auto i : *chosen) {
      c.parts.push_back(maximal[i]);
    }
    return finite_result(CaseTag::maximal_subgroups, std::move(c));
  }

  NatOrInfinity min_proper_index(FiniteSemigroup const& g, std::size_t cap) {
    auto b = min_index_subgroup(g, cap);
    if (!b) {
      return NatOrInfinity::infinity();
    }
    return NatOrInfinity::finite(g.size() / b->count());
  }

  std::optional<ElementSet> min_index_subgroup(FiniteSemigroup const& g,
                                               std::size_t            cap) {
    auto const lat = subgroup_lattice(g, cap);
    if (lat.subgroups.size() < 2) {
      return std::nullopt;
    }
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < lat.subgroups.size(); ++i) {
      if (lat.subgroups[i].count() > lat.subgroups[best].count()) {
        best = i;
      }
    }
    return lat.subgroups[best];
  }

  std::vector<ElementId> right_coset_representatives(FiniteSemigroup const& g,
                                                     ElementSet const&      b) {
    ElementSet             covered(g.size());
    std::vector<ElementId> reps;
    auto take = [&](ElementId x) {
      reps.push_back(x);
      b.for_each([&](ElementId y) { covered.insert(g.product(y, x)); });
    };
    take(identity_of(g));
    for (ElementId x = 0; x < g.size(); ++x) {
      if (!covered.contains(x)) {
        take(x);
      }
    }
    return reps;
  }

  ElementId group_inverse(FiniteSemigroup const& g, ElementId x) {
    ElementId const e = identity_of(g);
    for (ElementId y = 0; y < g.size(); ++y) {
      if (g.product(x, y) == e && g.product(y, x) == e) {
        return y;
      }
    }
    fail(ErrorCode::not_a_group, "element " + std::to_string(x) + " has no inverse");
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup cyclic_group(std::size_t n) {
    if (n == 0) {
      fail(ErrorCode::invalid_argument, "a group needs at least one element");
    }
    std::vector<ElementId>   table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = a == 0 ? std::string("e") : "g^" + std::to_string(a);
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<ElementId>((a + b) % n);
      }
    }
    return FiniteSemigroup::make_unchecked(n, std::move(table), std::move(labels));
  }

  FiniteSemigroup permutation_group(std::size_t                                    points,
                                    std::vector<std::vector<std::uint32_t>> const& gens) {
    std::vector<std::vector<std::uint32_t>> all;
    std::vector<std::uint32_t>              id(points);
    for (std::uint32_t i = 0; i < points; ++i) {
      id[i] = i;
    }
    all.push_back(id);
    all.insert(all.end(), gens.begin(), gens.end());
    for (auto const& p : gens) {
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != id) {
        fail(ErrorCode::invalid_argument, "generator is not a permutation");
      }
    }
    return transformation_closure(points, all).semigroup;
  }

  namespace {
    // Quaternion units 1, i, j, k as 0..3; +4 negates.
    std::uint32_t quaternion_product(std::uint32_t a, std::uint32_t b) {
      static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      static constexpr int neg[4][4]  = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
      std::uint32_t const ua = a % 4, ub = b % 4;
      std::uint32_t const sign = (a / 4 + b / 4 + neg[ua][ub]) % 2;
      return static_cast<std::uint32_t>(unit[ua][ub]) + 4 * sign;
    }

    std::vector<std::uint32_t> right_regular(std::uint32_t g) {
      std::vector<std::uint32_t> p(8);
      for (std::uint32_t x = 0; x < 8; ++x) {
        p[x] = quaternion_product(x, g);
      }
      return p;
    }
  }  // namespace

  std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (int n = 1; n <= 12; ++n) {
      out.push_back("C" + std::to_string(n));
    }
    for (auto const* s : {"V4", "S3", "D4", "Q8", "A4", "D5", "S4", "A5"}) {
      out.emplace_back(s);
    }
    return out;
  }

  std::optional<FiniteSemigroup> catalog_group(std::string_view name) {
    if (name.size() >= 2 && name[0] == 'C' && name.find('x') == std::string_view::npos) {
      std::size_t n = 0;
      for (auto c : name.substr(1)) {
        if (c < '0' || c > '9') {
          return std::nullopt;
        }
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      if (n >= 1 && n <= 12) {
        return cyclic_group(n);
      }
      return std::nullopt;
    }
    if (name == "V4" || name == "C2xC2") {
      return permutation_group(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    }
    if (name == "S3") {
      return permutation_group(3, {{1, 0, 2}, {1, 2, 0}});
    }
    if (name == "D4") {
      return permutation_group(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
    }
    if (name == "Q8") {
      return permutation_group(8, {right_regular(1), right_regular(2)});
    }
    if (name == "A4") {
      return permutation_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
    }
    if (name == "D5") {
      return permutation_group(5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
    }
    if (name == "S4") {
      return permutation_group(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
    }
    if (name == "A5") {
      return permutation_group(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
    }
    return std::nullopt;
  }

}  // namespace semicover
