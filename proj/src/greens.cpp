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

#include "semicover/greens.hpp"

#include <cassert>
#include <string>
#include <unordered_map>

#include "semicover/error.hpp"

namespace semicover {

  namespace {
    // Groups elements with equal ideals; ids follow least elements.
    void partition(std::vector<ElementSet> const& ideals,
                   std::vector<std::size_t>&      class_of,
                   std::vector<ElementSet>&       classes) {
      std::size_t const n = ideals.size();
      std::unordered_map<ElementSet, std::size_t, ElementSetHash> ids;
      class_of.assign(n, 0);
      classes.clear();
      for (ElementId x = 0; x < n; ++x) {
        auto [it, fresh] = ids.emplace(ideals[x], classes.size());
        if (fresh) {
          classes.emplace_back(n);
        }
        class_of[x] = it->second;
        classes[it->second].insert(x);
      }
    }
  }  // namespace

  GreensData greens_classes(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    GreensData        g;
    g.ideal.reserve(n);
    g.right_ideal.reserve(n);
    g.left_ideal.reserve(n);
    for (ElementId x = 0; x < n; ++x) {
      ElementSet right(n, {x});
      ElementSet left(n, {x});
      for (ElementId t = 0; t < n; ++t) {
        right.insert(s.product(x, t));
        left.insert(s.product(t, x));
      }
      ElementSet two_sided = left;
      left.for_each([&](ElementId a) {
        for (auto v : s.row(a)) {
          two_sided.insert(v);
        }
      });
      g.ideal.push_back(std::move(two_sided));
      g.right_ideal.push_back(std::move(right));
      g.left_ideal.push_back(std::move(left));
    }
    partition(g.ideal, g.j_class_of, g.j_classes);
    partition(g.right_ideal, g.r_class_of, g.r_classes);
    partition(g.left_ideal, g.l_class_of, g.l_classes);

    std::size_t const k = g.j_classes.size();
    g.j_leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a) {
      auto const ra = g.j_classes[a].first();
      for (std::size_t b = 0; b < k; ++b) {
        auto const rb = g.j_classes[b].first();
        g.j_leq[a][b] = g.ideal[rb].contains(ra);
      }
    }
    return g;
  }

  std::vector<std::size_t> maximal_j_classes(GreensData const& g) {
    std::vector<std::size_t> out;
    std::size_t const        k = g.j_classes.size();
    for (std::size_t a = 0; a < k; ++a) {
      bool maximal = true;
      for (std::size_t b = 0; b < k && maximal; ++b) {
        maximal = b == a || !g.j_leq[a][b];
      }
      if (maximal) {
        out.push_back(a);
      }
    }
    return out;
  }

  namespace {
    bool is_maximal(GreensData const& g, std::size_t j_class) {
      for (std::size_t b = 0; b < g.j_classes.size(); ++b) {
        if (b != j_class && g.j_leq[j_class][b]) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ElementSet complement_subsemigroup(FiniteSemigroup const& s,
                                     GreensData const&      g,
                                     std::size_t            j_class) {
    if (j_class >= g.j_classes.size() || !is_maximal(g, j_class)) {
      fail(ErrorCode::not_maximal,
           "J-class " + std::to_string(j_class) + " is not maximal");
    }
    ElementSet rest = s.all() - g.j_classes[j_class];
    if (rest.empty()) {
      fail(ErrorCode::empty_complement, "the J-class is the whole semigroup");
    }
    assert(is_closed(s, rest));
    return rest;
  }

  bool jclass_generates(FiniteSemigroup const& s, ElementSet const& j) {
    return closure(s, j).is_full();
  }

  ElementSet ideal_generated(GreensData const& g, ElementSet const& j) {
    ElementSet out(g.ideal.empty() ? 0 : g.ideal.front().universe());
    j.for_each([&](ElementId x) { out |= g.ideal[x]; });
    return out;
  }

  PrincipalFactor principal_factor(FiniteSemigroup const& s,
                                   GreensData const&      g,
                                   std::size_t            j_class) {
    if (j_class >= g.j_classes.size()) {
      fail(ErrorCode::invalid_argument, "no J-class " + std::to_string(j_class));
    }
    ElementSet const& j = g.j_classes[j_class];
    PrincipalFactor   pf;
    pf.source_class = j_class;
    pf.members.push_back(0);  // slot for the zero, never read as a parent id
    pf.phi.assign(s.size(), 0);
    j.for_each([&](ElementId x) {
      pf.phi[x] = static_cast<ElementId>(pf.members.size());
      pf.members.push_back(x);
    });

    std::size_t const        m = pf.members.size();
    std::vector<ElementId>   table(m * m, 0);
    bool                     null = true;
    for (std::size_t a = 1; a < m; ++a) {
      for (std::size_t b = 1; b < m; ++b) {
        auto const v = s.product(pf.members[a], pf.members[b]);
        if (j.contains(v)) {
          table[a * m + b] = pf.phi[v];
          null             = false;
        }
      }
    }
    std::vector<std::string> labels{"0"};
    for (std::size_t a = 1; a < m; ++a) {
      labels.push_back(s.label(pf.members[a]));
    }
    pf.factor = FiniteSemigroup::make_unchecked(m, std::move(table), std::move(labels));
    pf.type   = null ? FactorType::null : FactorType::zero_simple;
    return pf;
  }

  std::vector<ElementSet> lift_cover(FiniteSemigroup const&      parent,
                                     GreensData const&           g,
                                     PrincipalFactor const&      pf,
                                     std::span<ElementSet const> parts) {
    if (!is_maximal(g, pf.source_class)) {
      fail(ErrorCode::not_maximal, "cannot lift through a non-maximal J-class");
    }
    std::vector<ElementSet> out;
    out.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      ElementSet pre(parent.size());
      for (ElementId x = 0; x < parent.size(); ++x) {
        if (parts[i].contains(pf.phi[x])) {
          pre.insert(x);
        }
      }
      if (pre.is_full()) {
        fail(ErrorCode::part_not_proper_after_lift,
             "part " + std::to_string(i) + " lifts to the whole semigroup");
      }
      out.push_back(std::move(pre));
    }
    return out;
  }

}  // namespace semicover
