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

// Value types shared by the classifiers and the oracle: kinds of
// substructure, covers and covering numbers.

#ifndef SEMICOVER_COVER_HPP_
#define SEMICOVER_COVER_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "element_set.hpp"

namespace semicover {

  enum class Kind { subsemigroup, inverse_sub, submonoid, monoidal_sub, subgroup };

  std::string_view     to_string(Kind k) noexcept;
  std::optional<Kind>  kind_from_string(std::string_view s);

  struct Cover {
    Kind                    kind = Kind::subsemigroup;
    std::vector<ElementSet> parts;
  };

  //! Sorts each part's members and the list of parts (lexicographically on
  //! the sorted member lists).
  void canonicalize(Cover& c);

  //! An element of N u {infinity}; infinity compares greater than every k.
  class NatOrInfinity {
   public:
    constexpr NatOrInfinity() = default;

    static constexpr NatOrInfinity finite(std::size_t k) {
      NatOrInfinity v;
      v._value = k;
      return v;
    }
    static constexpr NatOrInfinity infinity() {
      return NatOrInfinity();
    }

    [[nodiscard]] constexpr bool is_infinite() const noexcept {
      return !_value.has_value();
    }
    [[nodiscard]] constexpr bool is_finite() const noexcept {
      return _value.has_value();
    }
    //! Precondition: is_finite().
    [[nodiscard]] constexpr std::size_t value() const {
      return *_value;
    }

    friend constexpr bool operator==(NatOrInfinity const&,
                                     NatOrInfinity const&) = default;
    friend constexpr std::strong_ordering operator<=>(NatOrInfinity const& a,
                                                      NatOrInfinity const& b) {
      if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
      }
      return *a._value <=> *b._value;
    }

    [[nodiscard]] std::string to_string() const;

   private:
    std::optional<std::size_t> _value;
  };

  enum class CaseTag {
    // finite semigroups
    monogenic,
    group,
    max_class_not_generating,
    completely_simple,
    zero_simple_factor,
    // groups and subgroup covers of arbitrary semigroups
    cyclic_group,
    maximal_subgroups,
    union_of_groups,
    not_union_of_groups,
    // inverse semigroups
    brandt_monogenic,
    rees_k_equals_2,
    rees_k_at_least_3,
    // monoids
    monoid_group,
    r1_nontrivial,
    identity_adjoined,
    identity_adjoined_group,
    // oracle
    exhaustive_search,
    uncoverable_element
  };

  std::string_view to_string(CaseTag t) noexcept;

  enum class Provenance { classifier, oracle, both };

  std::string_view to_string(Provenance p) noexcept;

  //! A covering number with its evidence: a certificate cover for finite
  //! values, an element lying in no proper substructure for infinity.
  struct CoveringResult {
    NatOrInfinity            value;
    CaseTag                  case_tag   = CaseTag::exhaustive_search;
    std::optional<Cover>     certificate;
    std::optional<ElementId> witness;
    Provenance               provenance = Provenance::classifier;
  };

  CoveringResult finite_result(CaseTag tag, Cover cover);
  CoveringResult infinite_result(CaseTag tag, ElementId witness);

}  // namespace semicover

#endif  // SEMICOVER_COVER_HPP_
