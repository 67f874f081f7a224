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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "semicover/covers.hpp"
#include "semicover/error.hpp"
#include "semicover/groups.hpp"
#include "semicover/rees.hpp"
#include "testkit.hpp"

using namespace semicover;

namespace {
  template <typename F>
  ErrorCode code_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::internal;
  }

  // The map x -> iso(x) carries the structure's own table onto s.
  bool iso_is_exact(ReesStructure const& rs, FiniteSemigroup const& s) {
    auto const local = rs.semigroup();
    if (local.size() != s.size() || !rs.iso_to_parent) {
      return false;
    }
    auto const& iso = *rs.iso_to_parent;
    std::vector<bool> hit(s.size(), false);
    for (auto x : iso) {
      hit[x] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      return false;
    }
    for (ElementId a = 0; a < s.size(); ++a) {
      for (ElementId b = 0; b < s.size(); ++b) {
        if (iso[local.product(a, b)] != s.product(iso[a], iso[b])) {
          return false;
        }
      }
    }
    return true;
  }

  // Closed, proper, nonempty, closed under the inverse map, and covering.
  bool is_inverse_cover(FiniteSemigroup const& s, Cover const& c) {
    auto const flags = structure_flags(s);
    ElementSet all(s.size());
    for (auto const& p : c.parts) {
      if (p.empty() || p.is_full()) {
        return false;
      }
      for (ElementId a = 0; a < s.size(); ++a) {
        for (ElementId b = 0; b < s.size(); ++b) {
          if (p.contains(a) && p.contains(b) && !p.contains(s.product(a, b))) {
            return false;
          }
        }
        if (p.contains(a) && !p.contains((*flags.inverse_map)[a])) {
          return false;
        }
      }
      all |= p;
    }
    return all.is_full();
  }

  SandwichMatrix identity_matrix(std::size_t n) {
    SandwichMatrix p(n, std::vector<SandwichEntry>(n));
    for (std::size_t i = 0; i < n; ++i) {
      p[i][i] = ElementId{0};
    }
    return p;
  }
}  // namespace

TEST_SUITE("rees") {
  TEST_CASE("plain Rees matrix semigroups") {
    auto const c1 = cyclic_group(1);
    // one column and two rows: every product is the right factor's row
    auto const lz = build_rees(2, c1, 1, {{ElementId{0}, ElementId{0}}});
    CHECK(lz.semigroup.size() == 2);
    CHECK(lz.semigroup == testkit::left_zero(2));

    auto const c2 = build_rees(1, cyclic_group(2), 1, {{ElementId{1}}});
    CHECK(c2.semigroup.size() == 2);
    CHECK(structure_flags(c2.semigroup).is_group);
    // (0,x,0)(0,x,0) = (0, x x x, 0) = (0, x, 0)
    CHECK(c2.semigroup.product(1, 1) == 1);

    auto const nine = build_rees(3, cyclic_group(1), 3, SandwichMatrix(3, {ElementId{0}, ElementId{0}, ElementId{0}}));
    CHECK(nine.semigroup.size() == 9);
  }

  TEST_CASE("B2 layout") {
    auto const b2 = testkit::brandt(2, "C1");
    auto const& rs = b2.structure;
    CHECK(rs.order() == 5);
    CHECK(rs.index(0, 0, 0) == 1);
    CHECK(rs.index(0, 0, 1) == 2);
    CHECK(rs.index(1, 0, 0) == 3);
    CHECK(rs.index(1, 0, 1) == 4);
    CHECK(rs.triple(3) == ReesTriple{1, 0, 0});
    auto const& s = b2.semigroup;
    CHECK(s.product(2, 3) == 1);  // (0,1)(1,0) = (0,0)
    CHECK(s.product(3, 2) == 4);
    CHECK(s.product(1, 4) == 0);
    CHECK(s.product(2, 2) == 0);
  }

  TEST_CASE("build errors") {
    auto const c2 = cyclic_group(2);
    CHECK(code_of([&] { build_rees0(2, c2, 2, {{ElementId{0}, std::nullopt}, {std::nullopt, std::nullopt}}); })
          == ErrorCode::irregular_matrix);
    CHECK(code_of([&] { build_rees(1, c2, 1, {{std::nullopt}}); })
          == ErrorCode::zero_entry_in_plain_rees);
    CHECK(code_of([&] { build_rees(1, c2, 1, {{ElementId{2}}}); }) == ErrorCode::out_of_range);
    CHECK(code_of([&] { build_rees(0, c2, 1, {}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([&] { build_rees(2, c2, 1, {{ElementId{0}}}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([&] { build_rees(1, build_null(2), 1, {{ElementId{0}}}); })
          == ErrorCode::not_a_group);
  }

  TEST_CASE("decompose completely simple semigroups") {
    auto const lz = decompose_simple(testkit::left_zero(3));
    CHECK(lz.k_size * lz.lambda_size == 3);
    CHECK(lz.group.size() == 1);
    CHECK(iso_is_exact(lz, testkit::left_zero(3)));

    auto const rz = decompose_simple(testkit::right_zero(2));
    CHECK(rz.k_size * rz.lambda_size == 2);
    CHECK(iso_is_exact(rz, testkit::right_zero(2)));

    auto const c3 = decompose_simple(cyclic_group(3));
    CHECK(c3.k_size == 1);
    CHECK(c3.lambda_size == 1);
    CHECK(c3.group.size() == 3);
    CHECK(iso_is_exact(c3, cyclic_group(3)));

    CHECK(code_of([] { decompose_simple(testkit::idempotent_pair()); }) == ErrorCode::not_simple);
  }

  TEST_CASE("decompose completely 0-simple semigroups") {
    auto const b2 = testkit::brandt(2, "C1").semigroup;
    auto const rs = decompose_zero_simple(b2);
    CHECK(rs.k_size == 2);
    CHECK(rs.lambda_size == 2);
    CHECK(rs.group.size() == 1);
    CHECK(iso_is_exact(rs, b2));
    CHECK(code_of([] { decompose_zero_simple(build_null(3)); }) == ErrorCode::not_zero_simple);
    CHECK(code_of([] { decompose_zero_simple(cyclic_group(2)); }) == ErrorCode::not_zero_simple);
  }

  TEST_CASE("random Rees 0-matrix round trips") {
    std::mt19937 rng(7);
    for (auto const* name : {"C2", "C3", "V4", "S3"}) {
      auto const g = *catalog_group(name);
      for (int trial = 0; trial < 20; ++trial) {
        std::size_t const k = 1 + rng() % 3, l = 1 + rng() % 3;
        SandwichMatrix    p(l, std::vector<SandwichEntry>(k));
        for (auto& row : p) {
          for (auto& e : row) {
            std::uint32_t const v = rng() % (g.size() + 1);
            e = v == g.size() ? SandwichEntry() : SandwichEntry(v);
          }
        }
        ReesSemigroup built;
        try {
          built = build_rees0(k, g, l, p);
        } catch (Error const& e) {
          CHECK(e.code() == ErrorCode::irregular_matrix);
          continue;
        }
        auto const rs = decompose_zero_simple(built.semigroup);
        CHECK(rs.k_size == k);
        CHECK(rs.lambda_size == l);
        CHECK(rs.group.size() == g.size());
        CHECK(iso_is_exact(rs, built.semigroup));
        auto const c = cover_zero_simple(rs);
        auto const s = built.semigroup;
        for (auto const& part : c.parts) {
          auto const lifted = rs.to_parent(part, s.size());
          CHECK(is_closed(s, lifted));
          CHECK_FALSE(lifted.is_full());
        }
        CHECK((rs.to_parent(c.parts[0], s.size()) | rs.to_parent(c.parts[1], s.size())).is_full());
      }
    }
  }

  TEST_CASE("normalization") {
    // B2 with its rows swapped: the sandwich matrix is a permutation matrix
    SandwichMatrix swapped{{std::nullopt, ElementId{0}}, {ElementId{0}, std::nullopt}};
    auto const     s  = build_rees0(2, cyclic_group(1), 2, swapped).semigroup;
    auto const     rs = normalize_inverse(decompose_zero_simple(s));
    CHECK(rs.matrix == identity_matrix(2));
    CHECK(iso_is_exact(rs, s));

    // C2 with the diagonal (e, x)
    SandwichMatrix twisted{{ElementId{0}, std::nullopt}, {std::nullopt, ElementId{1}}};
    auto const     t  = build_rees0(2, cyclic_group(2), 2, twisted).semigroup;
    auto const     nt = normalize_inverse(decompose_zero_simple(t));
    CHECK(nt.matrix == identity_matrix(2));
    CHECK(iso_is_exact(nt, t));

    SandwichMatrix full(2, {ElementId{0}, ElementId{0}});
    auto const     u = build_rees0(2, cyclic_group(1), 2, full).semigroup;
    CHECK(code_of([&] { normalize_inverse(decompose_zero_simple(u)); }) == ErrorCode::not_inverse);

    auto const r = build_rees0(2, cyclic_group(1), 1, {{ElementId{0}, ElementId{0}}}).semigroup;
    CHECK(code_of([&] { normalize_inverse(decompose_zero_simple(r)); }) == ErrorCode::not_square);
  }

  TEST_CASE("cover_simple and cover_zero_simple") {
    auto const lz = decompose_simple(testkit::left_zero(3));
    auto const c  = cover_simple(lz);
    REQUIRE(c.parts.size() == 2);
    CHECK(c.parts[0].count() + c.parts[1].count() == 3);
    CHECK(code_of([] { cover_simple(decompose_simple(cyclic_group(2))); })
          == ErrorCode::is_group_case);

    auto const b2 = decompose_zero_simple(testkit::brandt(2, "C1").semigroup);
    auto const z  = cover_zero_simple(b2);
    REQUIRE(z.parts.size() == 2);
    CHECK(z.parts[0].count() == 3);
    CHECK(z.parts[1].count() == 3);

    // G with a zero: {G} and {0}
    auto const g0 = decompose_zero_simple(build_rees0(1, cyclic_group(3), 1, {{ElementId{0}}}).semigroup);
    auto const gz = cover_zero_simple(g0);
    CHECK(gz.parts[0].count() == 3);
    CHECK(gz.parts[1].count() == 1);
  }

  TEST_CASE("inverse covers for three or more indices") {
    for (std::size_t k : {3U, 4U}) {
      for (auto const* name : {"C1", "C2"}) {
        auto const b  = testkit::brandt(k, name);
        auto const rs = normalize_inverse(decompose_zero_simple(b.semigroup));
        auto const c  = inverse_cover_k_ge3(rs);
        REQUIRE(c.parts.size() == 3);
        auto const gs = rs.group.size();
        for (auto const& p : c.parts) {
          CHECK(p.count() == (k - 1) * (k - 1) * gs + 1);
        }
        Cover lifted{Kind::inverse_sub, {}};
        for (auto const& p : c.parts) {
          lifted.parts.push_back(rs.to_parent(p, b.semigroup.size()));
        }
        CHECK(is_inverse_cover(b.semigroup, lifted));
      }
    }
    auto const b2 = normalize_inverse(decompose_zero_simple(testkit::brandt(2, "C2").semigroup));
    CHECK(code_of([&] { inverse_cover_k_ge3(b2); }) == ErrorCode::k_too_small);
  }

  TEST_CASE("inverse covers for two indices") {
    for (auto const* name : {"C2", "C3", "V4", "S3", "C4"}) {
      auto const g  = *catalog_group(name);
      auto const b  = build_rees0(2, g, 2, identity_matrix(2));
      auto const rs = normalize_inverse(decompose_zero_simple(b.semigroup));
      auto const sub  = *min_index_subgroup(rs.group);
      auto const reps = right_coset_representatives(rs.group, sub);
      auto const c    = inverse_cover_k2(rs, sub, reps);
      CHECK(c.parts.size() == min_proper_index(g).value() + 1);
      Cover lifted{Kind::inverse_sub, {}};
      for (auto const& p : c.parts) {
        lifted.parts.push_back(rs.to_parent(p, b.semigroup.size()));
      }
      CHECK_MESSAGE(is_inverse_cover(b.semigroup, lifted), name);
    }

    auto const trivial = normalize_inverse(decompose_zero_simple(testkit::brandt(2, "C1").semigroup));
    CHECK(code_of([&] {
            std::vector<ElementId> reps{0};
            inverse_cover_k2(trivial, ElementSet(1, {0}), reps);
          })
          == ErrorCode::trivial_group);

    auto const c4 = normalize_inverse(
        decompose_zero_simple(build_rees0(2, cyclic_group(4), 2, identity_matrix(2)).semigroup));
    // {e} has index 4, above the minimum 2
    CHECK(code_of([&] {
            std::vector<ElementId> reps{0, 1, 2, 3};
            inverse_cover_k2(c4, ElementSet(4, {c4.group_identity}), reps);
          })
          == ErrorCode::not_minimal_index);
  }
}
