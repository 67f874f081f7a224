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

#include "semicover/covers.hpp"

#include <string>

#include "semicover/error.hpp"
#include "semicover/greens.hpp"
#include "semicover/groups.hpp"
#include "semicover/rees.hpp"

namespace semicover {

  namespace {
    Verdict violation(std::string what, std::optional<std::size_t> part = std::nullopt) {
      return Verdict{false, std::move(what), part};
    }

    std::optional<ElementId> local_identity(FiniteSemigroup const& s, ElementSet const& part) {
      std::optional<ElementId> found;
      part.for_each([&](ElementId e) {
        if (found) {
          return;
        }
        bool ok = true;
        part.for_each([&](ElementId x) {
          ok = ok && s.product(e, x) == x && s.product(x, e) == x;
        });
        if (ok) {
          found = e;
        }
      });
      return found;
    }

    bool is_subgroup(FiniteSemigroup const& s, ElementSet const& part) {
      auto e = local_identity(s, part);
      if (!e) {
        return false;
      }
      bool ok = true;
      part.for_each([&](ElementId x) {
        bool has_inverse = false;
        part.for_each([&](ElementId y) {
          has_inverse = has_inverse || (s.product(x, y) == *e && s.product(y, x) == *e);
        });
        ok = ok && has_inverse;
      });
      return ok;
    }

    std::string show(FiniteSemigroup const& s, ElementId x) {
      return std::to_string(x) + " (" + s.label(x) + ")";
    }

    // First product of two members of a set that falls outside it.
    std::optional<std::pair<ElementId, ElementId>> escaping_product(FiniteSemigroup const& s,
                                                                    ElementSet const&      part) {
      std::optional<std::pair<ElementId, ElementId>> out;
      part.for_each([&](ElementId a) {
        part.for_each([&](ElementId b) {
          if (!out && !part.contains(s.product(a, b))) {
            out = std::pair{a, b};
          }
        });
      });
      return out;
    }

    ElementSet generated(FiniteSemigroup const& s,
                         StructureFlags const&  flags,
                         Kind                   kind,
                         ElementSet const&      x) {
      if (kind == Kind::inverse_sub) {
        if (!flags.is_inverse || !flags.inverse_map) {
          fail(ErrorCode::not_inverse, "the semigroup is not inverse");
        }
        return closure(s, x, *flags.inverse_map);
      }
      return closure(s, x);
    }
  }  // namespace

  Verdict verify_cover(FiniteSemigroup const& s, StructureFlags const& flags, Cover const& cover) {
    if (cover.parts.empty()) {
      return violation("the cover has no parts");
    }
    if (cover.kind == Kind::inverse_sub && !flags.is_inverse) {
      return violation("inverse subsemigroup cover of a semigroup that is not inverse");
    }
    if (cover.kind == Kind::submonoid && !flags.identity) {
      return violation("submonoid cover of a semigroup without identity");
    }
    ElementSet covered(s.size());
    for (std::size_t i = 0; i < cover.parts.size(); ++i) {
      auto const& part = cover.parts[i];
      if (part.universe() != s.size()) {
        return violation("part is over a carrier of the wrong size", i);
      }
      if (part.empty()) {
        return violation("part is empty", i);
      }
      if (part.is_full()) {
        return violation("part is not proper", i);
      }
      if (auto ab = escaping_product(s, part)) {
        return violation("product " + show(s, ab->first) + " * " + show(s, ab->second) + " = "
                             + show(s, s.product(ab->first, ab->second)) + " leaves the part",
                         i);
      }
      switch (cover.kind) {
        case Kind::subsemigroup: break;
        case Kind::inverse_sub: {
          std::optional<ElementId> bad;
          part.for_each([&](ElementId x) {
            if (!bad && !part.contains((*flags.inverse_map)[x])) {
              bad = x;
            }
          });
          if (bad) {
            return violation("the inverse of " + show(s, *bad) + " is missing", i);
          }
          break;
        }
        case Kind::submonoid:
          if (!part.contains(*flags.identity)) {
            return violation("part does not contain the identity", i);
          }
          break;
        case Kind::monoidal_sub:
          if (!local_identity(s, part)) {
            return violation("part has no identity element of its own", i);
          }
          break;
        case Kind::subgroup:
          if (!is_subgroup(s, part)) {
            return violation("part is not a group", i);
          }
          break;
      }
      covered |= part;
    }
    if (!covered.is_full()) {
      return violation("element " + show(s, (s.all() - covered).first()) + " is not covered");
    }
    return Verdict{};
  }

  bool is_uncoverable(FiniteSemigroup const& s,
                      StructureFlags const&  flags,
                      Kind                   kind,
                      ElementId              x) {
    ElementSet const only(s.size(), {x});
    switch (kind) {
      case Kind::subsemigroup:
      case Kind::inverse_sub: return generated(s, flags, kind, only).is_full();
      case Kind::submonoid: {
        if (!flags.identity) {
          fail(ErrorCode::no_identity, "the semigroup has no identity");
        }
        return closure(s, ElementSet(s.size(), {x, *flags.identity})).is_full();
      }
      case Kind::monoidal_sub: {
        bool all = true;
        flags.idempotents.for_each([&](ElementId e) {
          if (s.product(e, x) == x && s.product(x, e) == x) {
            all = all && closure(s, ElementSet(s.size(), {x, e})).is_full();
          }
        });
        return all;
      }
      case Kind::subgroup: {
        auto const cyc = closure(s, only);
        return cyc.is_full() || !is_subgroup(s, cyc);
      }
    }
    return false;
  }

  Verdict verify_result(FiniteSemigroup const& s,
                        StructureFlags const&  flags,
                        Kind                   kind,
                        CoveringResult const&  result) {
    if (result.value.is_infinite()) {
      if (!result.witness || *result.witness >= s.size()) {
        return violation("infinite value without a witness");
      }
      if (!is_uncoverable(s, flags, kind, *result.witness)) {
        return violation("witness " + show(s, *result.witness)
                         + " lies in a proper substructure");
      }
      return Verdict{};
    }
    if (!result.certificate) {
      return violation("finite value without a certificate");
    }
    if (result.certificate->kind != kind) {
      return violation("certificate is a " + std::string(to_string(result.certificate->kind))
                       + " cover, expected " + std::string(to_string(kind)));
    }
    if (result.certificate->parts.size() != result.value.value()) {
      return violation("certificate has " + std::to_string(result.certificate->parts.size())
                       + " parts but the value is " + result.value.to_string());
    }
    return verify_cover(s, flags, *result.certificate);
  }

  ////////////////////////////////////////////////////////////////////////
  // Classifiers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // {S - J, second} for a maximal class J that does not generate S. The
    // second part is the ideal generated by J when that is proper, else <J>.
    std::optional<Cover> non_generating_class_cover(FiniteSemigroup const& s,
                                                    GreensData const&      g,
                                                    Kind                   kind) {
      for (auto j : maximal_j_classes(g)) {
        auto const& jset = g.j_classes[j];
        if (jclass_generates(s, jset)) {
          continue;
        }
        ElementSet second = ideal_generated(g, jset);
        if (second.is_full()) {
          second = closure(s, jset);
        }
        return Cover{kind, {complement_subsemigroup(s, g, j), std::move(second)}};
      }
      return std::nullopt;
    }

    // Maps Rees-coordinate parts of the principal factor back to S.
    Cover lift(FiniteSemigroup const& s,
               GreensData const&      g,
               PrincipalFactor const& pf,
               ReesStructure const&   rs,
               Cover const&           local) {
      std::vector<ElementSet> factor_parts;
      for (auto const& p : local.parts) {
        factor_parts.push_back(rs.to_parent(p, pf.factor.size()));
      }
      return Cover{local.kind, lift_cover(s, g, pf, factor_parts)};
    }

    std::size_t unique_generating_class(FiniteSemigroup const& s, GreensData const& g) {
      auto const top = maximal_j_classes(g);
      if (top.size() != 1) {
        fail(ErrorCode::internal, "expected a unique maximal J-class");
      }
      (void)s;
      return top.front();
    }

    CoveringResult with_kind(CoveringResult r, Kind kind, CaseTag tag) {
      if (r.certificate) {
        r.certificate->kind = kind;
      }
      r.case_tag = tag;
      return r;
    }
  }  // namespace

  CoveringResult sigma_s(FiniteSemigroup const& s) {
    if (auto x = is_monogenic(s)) {
      return infinite_result(CaseTag::monogenic, *x);
    }
    auto const flags = structure_flags(s);
    if (flags.is_group) {
      return with_kind(sigma_g(s), Kind::subsemigroup, CaseTag::group);
    }
    auto const g = greens_classes(s);
    if (auto c = non_generating_class_cover(s, g, Kind::subsemigroup)) {
      return finite_result(CaseTag::max_class_not_generating, std::move(*c));
    }
    if (g.j_classes.size() == 1) {
      auto const rs    = decompose_simple(s);
      auto const local = cover_simple(rs);
      Cover      c{Kind::subsemigroup, {}};
      for (auto const& p : local.parts) {
        c.parts.push_back(rs.to_parent(p, s.size()));
      }
      return finite_result(CaseTag::completely_simple, std::move(c));
    }
    auto const j  = unique_generating_class(s, g);
    auto const pf = principal_factor(s, g, j);
    if (pf.type == FactorType::null) {
      fail(ErrorCode::internal, "null principal factor in a non-monogenic semigroup");
    }
    auto const rs = decompose_zero_simple(pf.factor);
    return finite_result(CaseTag::zero_simple_factor, lift(s, g, pf, rs, cover_zero_simple(rs)));
  }

  CoveringResult sigma_i(FiniteSemigroup const& s) {
    auto const flags = structure_flags(s);
    if (!flags.is_inverse) {
      fail(ErrorCode::not_inverse, "the semigroup is not inverse");
    }
    if (flags.is_group) {
      return with_kind(sigma_g(s), Kind::inverse_sub, CaseTag::group);
    }
    auto const g = greens_classes(s);
    if (auto c = non_generating_class_cover(s, g, Kind::inverse_sub)) {
      return finite_result(CaseTag::max_class_not_generating, std::move(*c));
    }
    if (g.j_classes.size() == 1) {
      fail(ErrorCode::internal, "an inverse semigroup with one J-class must be a group");
    }
    auto const j  = unique_generating_class(s, g);
    auto const pf = principal_factor(s, g, j);
    if (pf.type == FactorType::null) {
      fail(ErrorCode::internal, "null principal factor in an inverse semigroup");
    }
    auto const rs = normalize_inverse(decompose_zero_simple(pf.factor));
    if (rs.k_size == 2 && rs.group.size() == 1) {
      for (ElementId x = 0; x < s.size(); ++x) {
        if (is_uncoverable(s, flags, Kind::inverse_sub, x)) {
          return infinite_result(CaseTag::brandt_monogenic, x);
        }
      }
      fail(ErrorCode::internal, "no element generates the inverse semigroup");
    }
    if (rs.k_size == 2) {
      auto const b    = *min_index_subgroup(rs.group, rs.group.size());
      auto const reps = right_coset_representatives(rs.group, b);
      return finite_result(CaseTag::rees_k_equals_2,
                           lift(s, g, pf, rs, inverse_cover_k2(rs, b, reps)));
    }
    if (rs.k_size >= 3) {
      return finite_result(CaseTag::rees_k_at_least_3,
                           lift(s, g, pf, rs, inverse_cover_k_ge3(rs)));
    }
    fail(ErrorCode::internal, "a generating class with |K| = 1 forces a group");
  }

  CoveringResult sigma_subgroups(FiniteSemigroup const& s) {
    auto const flags = structure_flags(s);
    if (flags.is_group) {
      return with_kind(sigma_g(s), Kind::subgroup, CaseTag::group);
    }
    auto const g = greens_classes(s);
    Cover      c{Kind::subgroup, {}};
    ElementSet covered(s.size());
    flags.idempotents.for_each([&](ElementId e) {
      auto h = g.r_classes[g.r_class_of[e]] & g.l_classes[g.l_class_of[e]];
      covered |= h;
      c.parts.push_back(std::move(h));
    });
    if (!covered.is_full()) {
      return infinite_result(CaseTag::not_union_of_groups, (s.all() - covered).first());
    }
    return finite_result(CaseTag::union_of_groups, std::move(c));
  }

  MonoidCoverings classify_monoid(FiniteSemigroup const& m) {
    auto const flags = structure_flags(m);
    if (!flags.identity) {
      fail(ErrorCode::no_identity, "the semigroup has no identity");
    }
    ElementId const one = *flags.identity;
    if (flags.is_group) {
      auto const r = sigma_g(m);
      return MonoidCoverings{with_kind(r, Kind::subsemigroup, CaseTag::monoid_group),
                             with_kind(r, Kind::submonoid, CaseTag::monoid_group),
                             with_kind(r, Kind::monoidal_sub, CaseTag::monoid_group)};
    }
    auto const        g    = greens_classes(m);
    ElementSet const& r1   = g.r_classes[g.r_class_of[one]];
    ElementSet const  rest = m.all() - r1;
    if (r1.count() > 1) {
      ElementSet with_one = rest;
      with_one.insert(one);
      return MonoidCoverings{
          finite_result(CaseTag::r1_nontrivial, Cover{Kind::subsemigroup, {r1, rest}}),
          finite_result(CaseTag::r1_nontrivial, Cover{Kind::submonoid, {r1, with_one}}),
          finite_result(CaseTag::r1_nontrivial, Cover{Kind::monoidal_sub, {r1, with_one}})};
    }

    // R_1 = {1}, so M - {1} is a subsemigroup and M is it with 1 adjoined.
    ElementSet const       unit(m.size(), {one});
    std::vector<ElementId> embedding;
    auto const             sub   = induced_subsemigroup(m, rest, &embedding);
    auto const             inner = sigma_s(sub);
    MonoidCoverings        out;
    out.sigma_s = finite_result(CaseTag::identity_adjoined, Cover{Kind::subsemigroup, {rest, unit}});
    if (inner.value.is_infinite()) {
      out.sigma_m = infinite_result(CaseTag::identity_adjoined, embedding[*inner.witness]);
    } else {
      Cover c{Kind::submonoid, {}};
      for (auto const& p : inner.certificate->parts) {
        ElementSet lifted(m.size(), {one});
        p.for_each([&](ElementId x) { lifted.insert(embedding[x]); });
        c.parts.push_back(std::move(lifted));
      }
      out.sigma_m = finite_result(CaseTag::identity_adjoined, std::move(c));
    }
    bool const sub_is_group = structure_flags(sub).is_group;
    if (sub_is_group && inner.value > NatOrInfinity::finite(2)) {
      out.sigma_m_star =
          finite_result(CaseTag::identity_adjoined_group, Cover{Kind::monoidal_sub, {rest, unit}});
    } else {
      out.sigma_m_star = with_kind(out.sigma_m, Kind::monoidal_sub, CaseTag::identity_adjoined);
    }
    return out;
  }

}  // namespace semicover
