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

// Finite semigroups given by Cayley tables, closures, and the basic
// structural predicates (monogenic, group, monoid, inverse).

#ifndef SEMICOVER_SEMIGROUP_HPP_
#define SEMICOVER_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "element_set.hpp"

namespace semicover {

  //! A semigroup on {0, ..., n-1}; entry (i, j) of the table is i*j.
  //!
  //! Instances are immutable. The only way to build one from untrusted data
  //! is validate_table, which checks range and associativity.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }

    [[nodiscard]] ElementId product(ElementId a, ElementId b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _n + b];
    }

    [[nodiscard]] std::span<ElementId const> row(ElementId a) const noexcept {
      return {_table.data() + static_cast<std::size_t>(a) * _n, _n};
    }

    [[nodiscard]] std::vector<ElementId> const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    [[nodiscard]] std::string label(ElementId x) const;

    [[nodiscard]] ElementSet all() const {
      return ElementSet::full(_n);
    }

    [[nodiscard]] ElementSet empty_set() const {
      return ElementSet(_n);
    }

    friend bool operator==(FiniteSemigroup const& a, FiniteSemigroup const& b) {
      return a._n == b._n && a._table == b._table;
    }

    //! Unchecked construction for internal builders whose output is
    //! associative by construction. \p table is row-major, n*n entries.
    static FiniteSemigroup make_unchecked(std::size_t                n,
                                          std::vector<ElementId>     table,
                                          std::vector<std::string> labels = {});

   private:
    std::size_t              _n = 0;
    std::vector<ElementId>   _table;
    std::vector<std::string> _labels;
  };

  //! Checks that \p raw is square, in range, and associative.
  //!
  //! Throws Error(out_of_range) for the first bad entry and
  //! Error(not_associative) for the lexicographically first triple (a, b, c)
  //! with (ab)c != a(bc).
  FiniteSemigroup validate_table(std::vector<std::vector<std::int64_t>> const& raw,
                                 std::vector<std::string> labels = {});

  //! Associativity check returning the first violating triple, if any.
  std::optional<std::array<ElementId, 3>> first_non_associative_triple(
      FiniteSemigroup const& s);

  //! Smallest subset of S containing X and closed under the product.
  ElementSet closure(FiniteSemigroup const& s, ElementSet const& x);

  //! Closure under the product and an involution \p inverse.
  ElementSet closure(FiniteSemigroup const& s,
                     ElementSet const&       x,
                     std::span<ElementId const> inverse);

  [[nodiscard]] bool is_closed(FiniteSemigroup const& s, ElementSet const& x);

  //! Least x with closure({x}) = S, if any.
  std::optional<ElementId> is_monogenic(FiniteSemigroup const& s);

  std::optional<ElementId> find_identity(FiniteSemigroup const& s);
  std::optional<ElementId> find_zero(FiniteSemigroup const& s);
  ElementSet               idempotents(FiniteSemigroup const& s);

  struct StructureFlags {
    std::optional<ElementId>              identity;
    bool                                  is_group   = false;
    bool                                  is_inverse = false;
    std::optional<std::vector<ElementId>> inverse_map;
    ElementSet                            idempotents;
  };

  StructureFlags structure_flags(FiniteSemigroup const& s);

  //! Returns \p s unchanged if it has an identity, otherwise S with a fresh
  //! identity appended as element n.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

  //! The monogenic semigroup <x | x^(index+period) = x^index>. Element k is
  //! x^(k+1).
  FiniteSemigroup build_cyclic(std::size_t index, std::size_t period);

  //! Null semigroup of order n; 0 is the zero.
  FiniteSemigroup build_null(std::size_t n);

  //! The subsemigroup on the members of \p x (which must be closed),
  //! relabelled in increasing order. \p embedding receives the old ids.
  FiniteSemigroup induced_subsemigroup(FiniteSemigroup const&  s,
                                       ElementSet const&       x,
                                       std::vector<ElementId>* embedding = nullptr);

  //! Order plus a 64-bit FNV-1a hash of the table, e.g. "3:9f2c...".
  std::string carrier_digest(FiniteSemigroup const& s);

  // Transformation and partial-transformation fixtures.

  //! Image value marking an undefined point of a partial map.
  inline constexpr std::uint32_t undefined_point = UINT32_MAX;

  struct TransformationSemigroup {
    FiniteSemigroup                         semigroup;
    std::vector<std::vector<std::uint32_t>> maps;  // maps[x] is element x
  };

  //! Closure of \p gens under composition (first map applied first).
  //!
  //! Generators are maps on \p points points; entries may be undefined_point
  //! for partial maps. Throws bad_image or empty_generators.
  TransformationSemigroup transformation_closure(
      std::size_t                                    points,
      std::vector<std::vector<std::uint32_t>> const& gens);

  //! The symmetric inverse monoid of all partial injections on m <= 4
  //! points. Throws too_large for m > 4.
  TransformationSemigroup build_symmetric_inverse_monoid(std::size_t m);

}  // namespace semicover

#endif  // SEMICOVER_SEMIGROUP_HPP_
