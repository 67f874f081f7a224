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

#include <set>

#include "doctest.h"
#include "semicover/error.hpp"
#include "semicover/greens.hpp"
#include "semicover/groups.hpp"
#include "semicover/rees.hpp"
#include "testkit.hpp"

using namespace semicover;

namespace {
  std::size_t class_with(GreensData const& g, ElementId x) {
    return g.j_class_of[x];
  }

  // Bijections of I_2 are the maps without an undefined point.
  ElementSet bijections(TransformationSemigroup const& t) {
    ElementSet out(t.semigroup.size());
    for (ElementId x = 0; x < t.maps.size(); ++x) {
      bool total = true;
      for (std::size_t i = 0; i < 2; ++i) {
        total = total && t.maps[x][i] < 2;
      }
      if (total) {
        out.insert(x);
      }
    }
    return out;
  }
}  // namespace

TEST_SUITE("greens") {
  TEST_CASE("the idempotent pair has three singleton classes, two maximal") {
    auto const s = testkit::idempotent_pair();
    auto const g = greens_classes(s);
    CHECK(g.j_classes.size() == 3);
    auto const top = maximal_j_classes(g);
    REQUIRE(top.size() == 2);
    CHECK(g.j_classes[top[0]] == ElementSet(3, {0}));
    CHECK(g.j_classes[top[1]] == ElementSet(3, {1}));
    CHECK(g.j_below_eq(2, 0));
    CHECK(g.j_below_eq(2, 1));
    CHECK_FALSE(g.j_below_eq(0, 1));
  }

  TEST_CASE("a group is a single class of each kind") {
    auto const s3 = *catalog_group("S3");
    auto const g  = greens_classes(s3);
    CHECK(g.j_classes.size() == 1);
    CHECK(g.r_classes.size() == 1);
    CHECK(g.l_classes.size() == 1);
    CHECK(maximal_j_classes(g) == std::vector<std::size_t>{0});
    CHECK(jclass_generates(s3, g.j_classes[0]));
  }

  TEST_CASE("B2 has a zero class and a nonzero class split two ways") {
    auto const b2 = testkit::brandt(2, "C1").semigroup;
    auto const g  = greens_classes(b2);
    REQUIRE(g.j_classes.size() == 2);
    auto const nonzero = g.j_classes[class_with(g, 1)];
    CHECK(nonzero == ElementSet(5, {1, 2, 3, 4}));
    std::set<std::size_t> r, l;
    nonzero.for_each([&](ElementId x) {
      r.insert(g.r_class_of[x]);
      l.insert(g.l_class_of[x]);
    });
    CHECK(r.size() == 2);
    CHECK(l.size() == 2);
    CHECK(jclass_generates(b2, nonzero));
  }

  TEST_CASE("I2: bijections form the maximal class and their complement is closed") {
    auto const t  = build_symmetric_inverse_monoid(2);
    auto const g  = greens_classes(t.semigroup);
    auto const top = maximal_j_classes(g);
    REQUIRE(top.size() == 1);
    CHECK(g.j_classes[top[0]] == bijections(t));
    auto const rest = complement_subsemigroup(t.semigroup, g, top[0]);
    CHECK(rest.count() == 5);
    CHECK(is_closed(t.semigroup, rest));
  }

  TEST_CASE("complement of the whole carrier is rejected") {
    auto const c3 = cyclic_group(3);
    auto const g  = greens_classes(c3);
    try {
      complement_subsemigroup(c3, g, 0);
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::empty_complement);
    }
  }

  TEST_CASE("complement of a non-maximal class is rejected") {
    auto const s = testkit::idempotent_pair();
    auto const g = greens_classes(s);
    try {
      complement_subsemigroup(s, g, class_with(g, 2));
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::not_maximal);
    }
  }

  TEST_CASE("idempotent pair: {a} does not generate") {
    auto const s = testkit::idempotent_pair();
    CHECK_FALSE(jclass_generates(s, ElementSet(3, {0})));
  }

  TEST_CASE("principal factors") {
    auto const s  = testkit::idempotent_pair();
    auto const g  = greens_classes(s);
    auto const pf = principal_factor(s, g, class_with(g, 0));
    CHECK(pf.factor.size() == 2);
    CHECK(pf.type == FactorType::zero_simple);
    CHECK(pf.factor.product(1, 1) == 1);

    auto const chain = build_cyclic(2, 1);
    auto const gc    = greens_classes(chain);
    auto const null  = principal_factor(chain, gc, class_with(gc, 0));
    CHECK(null.type == FactorType::null);
  }

  TEST_CASE("I2 rank-one factor is a Brandt semigroup of order 5") {
    auto const t  = build_symmetric_inverse_monoid(2);
    auto const g  = greens_classes(t.semigroup);
    // the rank-one maps: exactly one defined point
    std::optional<ElementId> rank_one;
    for (ElementId x = 0; x < t.maps.size() && !rank_one; ++x) {
      int defined = (t.maps[x][0] < 2) + (t.maps[x][1] < 2);
      if (defined == 1) {
        rank_one = x;
      }
    }
    REQUIRE(rank_one);
    auto const pf = principal_factor(t.semigroup, g, class_with(g, *rank_one));
    CHECK(pf.factor.size() == 5);
    CHECK(pf.type == FactorType::zero_simple);
    auto const rs = decompose_zero_simple(pf.factor);
    CHECK(rs.k_size == 2);
    CHECK(rs.lambda_size == 2);
    CHECK(rs.group.size() == 1);
  }

  TEST_CASE("lift_cover through a generating maximal class") {
    // the ideal of non-bijections of I_2, covered through its rank-one factor
    auto const t    = build_symmetric_inverse_monoid(2);
    auto const gi   = greens_classes(t.semigroup);
    auto const top  = maximal_j_classes(gi);
    std::vector<ElementId> embed;
    auto const ideal = induced_subsemigroup(t.semigroup,
                                            complement_subsemigroup(t.semigroup, gi, top[0]),
                                            &embed);
    auto const g     = greens_classes(ideal);
    auto const max   = maximal_j_classes(g);
    REQUIRE(max.size() == 1);
    CHECK(jclass_generates(ideal, g.j_classes[max[0]]));
    auto const pf    = principal_factor(ideal, g, max[0]);
    auto const rs    = decompose_zero_simple(pf.factor);
    auto const local = cover_zero_simple(rs);
    std::vector<ElementSet> parts;
    for (auto const& p : local.parts) {
      parts.push_back(rs.to_parent(p, pf.factor.size()));
    }
    auto const lifted = lift_cover(ideal, g, pf, parts);
    REQUIRE(lifted.size() == 2);
    ElementSet all(ideal.size());
    for (auto const& p : lifted) {
      CHECK_FALSE(p.is_full());
      CHECK(is_closed(ideal, p));
      all |= p;
    }
    CHECK(all.is_full());
  }

  TEST_CASE("lift_cover refuses parts that lift to everything") {
    auto const b2 = testkit::brandt(2, "C1").semigroup;
    auto const g  = greens_classes(b2);
    auto const pf = principal_factor(b2, g, g.j_class_of[1]);
    std::vector<ElementSet> parts{pf.factor.all()};
    try {
      lift_cover(b2, g, pf, parts);
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::part_not_proper_after_lift);
    }
  }
}
