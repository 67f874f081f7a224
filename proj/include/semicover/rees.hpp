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

// Rees matrix and Rees 0-matrix semigroups: construction, decomposition of
// completely (0-)simple semigroups, normalisation of the inverse case, and
// the explicit covers of these semigroups.

#ifndef SEMICOVER_REES_HPP_
#define SEMICOVER_REES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cover.hpp"
#include "element_set.hpp"
#include "greens.hpp"
#include "semigroup.hpp"

namespace semicover {

  //! Sandwich matrix entry: a group element, or nullopt for zero.
  using SandwichEntry = std::optional<ElementId>;
  //! Indexed [lambda][kappa], i.e. |Lambda| rows of |K| entries.
  using SandwichMatrix = std::vector<std::vector<SandwichEntry>>;

  struct ReesTriple {
    std::size_t kappa;
    ElementId   g;
    std::size_t lambda;

    friend bool operator==(ReesTriple const&, ReesTriple const&) = default;
  };

  //! M[K, G, Lambda; P] or M0[K, G, Lambda; P].
  //!
  //! Dense encoding is row-major in (kappa, g, lambda); with a zero, the zero
  //! is index 0 and triples start at 1.
  struct ReesStructure {
    bool            has_zero    = false;
    std::size_t     k_size      = 0;
    std::size_t     lambda_size = 0;
    FiniteSemigroup group;
    ElementId       group_identity = 0;
    SandwichMatrix  matrix;
    //! Rees dense index -> parent element, when this structure describes
    //! some other semigroup.
    std::optional<std::vector<ElementId>> iso_to_parent;

    [[nodiscard]] std::size_t order() const noexcept {
      return k_size * group.size() * lambda_size + (has_zero ? 1 : 0);
    }
    [[nodiscard]] ElementId index(std::size_t kappa,
                                  ElementId   g,
                                  std::size_t lambda) const noexcept {
      return static_cast<ElementId>((has_zero ? 1 : 0)
                                    + (kappa * group.size() + g) * lambda_size
                                    + lambda);
    }
    [[nodiscard]] ElementId index(ReesTriple const& t) const noexcept {
      return index(t.kappa, t.g, t.lambda);
    }
    [[nodiscard]] bool is_zero(ElementId x) const noexcept {
      return has_zero && x == 0;
    }
    //! Precondition: !is_zero(x).
    [[nodiscard]] ReesTriple triple(ElementId x) const noexcept;

    //! The multiplication table this structure defines.
    [[nodiscard]] FiniteSemigroup semigroup() const;

    //! Maps a set of dense indices through iso_to_parent into a universe of
    //! \p parent_size elements.
    [[nodiscard]] ElementSet to_parent(ElementSet const& x,
                                       std::size_t       parent_size) const;
  };

  struct ReesSemigroup {
    FiniteSemigroup semigroup;
    ReesStructure   structure;
  };

  //! Throws zero_entry_in_plain_rees, not_a_group, invalid_argument.
  ReesSemigroup build_rees(std::size_t           k_size,
                           FiniteSemigroup const& group,
                           std::size_t           lambda_size,
                           SandwichMatrix const& matrix);

  //! Throws irregular_matrix if a row or column of P is entirely zero.
  ReesSemigroup build_rees0(std::size_t           k_size,
                            FiniteSemigroup const& group,
                            std::size_t           lambda_size,
                            SandwichMatrix const& matrix);

  bool is_completely_zero_simple(FiniteSemigroup const& s, GreensData const& g);

  //! Rees coordinates of a semigroup with a single J-class.
  ReesStructure decompose_simple(FiniteSemigroup const& s);

  //! Rees 0-matrix coordinates of a completely 0-simple semigroup.
  ReesStructure decompose_zero_simple(FiniteSemigroup const& s);

  //! Reorders and rescales an inverse Rees 0-matrix structure so that P is
  //! the identity matrix. Throws not_square or not_inverse.
  ReesStructure normalize_inverse(ReesStructure const& rs);

  //! The two parts {kappa_0} x G x Lambda and its complement (or the
  //! Lambda analogue when |K| = 1). Throws is_group_case if |K|=|Lambda|=1.
  Cover cover_simple(ReesStructure const& rs);

  //! Two-part subsemigroup cover of a regular Rees 0-matrix semigroup.
  Cover cover_zero_simple(ReesStructure const& rs);

  //! H_j = ((K - {kappa_j}) x G x (K - {kappa_j})) u {0}, j = 1, 2, 3.
  Cover inverse_cover_k_ge3(ReesStructure const& rs);

  //! The n + 1 part inverse cover for |K| = 2 built from a subgroup \p b of
  //! index n in the structure group and right coset representatives
  //! \p reps.
  Cover inverse_cover_k2(ReesStructure const&        rs,
                         ElementSet const&           b,
                         std::span<ElementId const> reps);

}  // namespace semicover

#endif  // SEMICOVER_REES_HPP_
