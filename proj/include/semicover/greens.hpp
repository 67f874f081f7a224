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

// Green's J, R and L relations computed from principal ideals over S^1,
// principal factors, and lifting of covers through the natural surjection.

#ifndef SEMICOVER_GREENS_HPP_
#define SEMICOVER_GREENS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "element_set.hpp"
#include "semigroup.hpp"

namespace semicover {

  //! Class ids are assigned in order of each class's least element, so class
  //! 0 always contains element 0.
  struct GreensData {
    std::vector<std::size_t> j_class_of;
    std::vector<std::size_t> r_class_of;
    std::vector<std::size_t> l_class_of;
    std::vector<ElementSet>  j_classes;
    std::vector<ElementSet>  r_classes;
    std::vector<ElementSet>  l_classes;

    // Per-element principal ideals S^1 x S^1, x S^1 and S^1 x.
    std::vector<ElementSet> ideal;
    std::vector<ElementSet> right_ideal;
    std::vector<ElementSet> left_ideal;

    //! j_leq[a][b] iff J-class a <= J-class b (reflexive and transitive).
    std::vector<std::vector<bool>> j_leq;

    [[nodiscard]] bool j_below_eq(ElementId x, ElementId y) const {
      return ideal[y].contains(x);
    }
    [[nodiscard]] bool r_below_eq(ElementId x, ElementId y) const {
      return right_ideal[y].contains(x);
    }
    [[nodiscard]] bool l_below_eq(ElementId x, ElementId y) const {
      return left_ideal[y].contains(x);
    }

    [[nodiscard]] ElementSet h_class(ElementId x) const {
      return r_classes[r_class_of[x]] & l_classes[l_class_of[x]];
    }
  };

  GreensData greens_classes(FiniteSemigroup const& s);

  //! Ids of the maximal J-classes in increasing order.
  std::vector<std::size_t> maximal_j_classes(GreensData const& g);

  //! S - J for a maximal J-class; throws not_maximal or empty_complement.
  ElementSet complement_subsemigroup(FiniteSemigroup const& s,
                                     GreensData const&      g,
                                     std::size_t            j_class);

  //! True iff <J> = S.
  bool jclass_generates(FiniteSemigroup const& s, ElementSet const& j);

  //! S^1 J S^1.
  ElementSet ideal_generated(GreensData const& g, ElementSet const& j);

  enum class FactorType { null, zero_simple };

  //! J* = J u {0} with products leaving J sent to 0.
  //!
  //! The factor's zero is element 0 and the members of J follow in
  //! increasing parent order.
  struct PrincipalFactor {
    FiniteSemigroup        factor;
    std::vector<ElementId> phi;      // parent id -> factor id
    std::vector<ElementId> members;  // factor id (>= 1) -> parent id
    std::size_t            source_class = 0;
    FactorType             type         = FactorType::null;
  };

  PrincipalFactor principal_factor(FiniteSemigroup const& s,
                                   GreensData const&      g,
                                   std::size_t            j_class);

  //! Preimages under phi of a cover of the factor.
  //!
  //! Requires the source class to be maximal (throws not_maximal). Throws
  //! part_not_proper_after_lift if a preimage is the whole parent.
  std::vector<ElementSet> lift_cover(FiniteSemigroup const&      parent,
                                     GreensData const&           g,
                                     PrincipalFactor const&      pf,
                                     std::span<ElementSet const> parts);

}  // namespace semicover

#endif  // SEMICOVER_GREENS_HPP_
