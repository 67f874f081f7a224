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

#include "semicover/rees.hpp"

#include <algorithm>
#include <string>

#include "semicover/error.hpp"
#include "semicover/groups.hpp"

namespace semicover {

  ReesTriple ReesStructure::triple(ElementId x) const noexcept {
    std::size_t const t = x - (has_zero ? 1 : 0);
    return ReesTriple{t / (lambda_size * group.size()),
                      static_cast<ElementId>((t / lambda_size) % group.size()),
                      t % lambda_size};
  }

  FiniteSemigroup ReesStructure::semigroup() const {
    std::size_t const        n = order();
    std::vector<ElementId>   table(n * n, 0);
    std::vector<std::string> labels(n);
    for (ElementId a = 0; a < n; ++a) {
      if (is_zero(a)) {
        labels[a] = "0";
        continue;
      }
      auto const ta = triple(a);
      labels[a]     = "(" + std::to_string(ta.kappa) + "," + group.label(ta.g) + ","
                  + std::to_string(ta.lambda) + ")";
      for (ElementId b = 0; b < n; ++b) {
        if (is_zero(b)) {
          continue;
        }
        auto const  tb = triple(b);
        auto const& p  = matrix[ta.lambda][tb.kappa];
        if (p) {
          ElementId const g = group.product(group.product(ta.g, *p), tb.g);
          table[a * n + b]  = index(ta.kappa, g, tb.lambda);
        }
      }
    }
    return FiniteSemigroup::make_unchecked(n, std::move(table), std::move(labels));
  }

  ElementSet ReesStructure::to_parent(ElementSet const& x, std::size_t parent_size) const {
    ElementSet out(parent_size);
    x.for_each([&](ElementId a) { out.insert(iso_to_parent ? (*iso_to_parent)[a] : a); });
    return out;
  }

  namespace {
    ReesStructure check_shape(std::size_t            k_size,
                              FiniteSemigroup const& group,
                              std::size_t            lambda_size,
                              SandwichMatrix const&  matrix,
                              bool                   has_zero) {
      if (k_size == 0 || lambda_size == 0) {
        fail(ErrorCode::invalid_argument, "K and Lambda must be nonempty");
      }
      auto flags = structure_flags(group);
      if (!flags.is_group) {
        fail(ErrorCode::not_a_group, "the structure group is not a group");
      }
      if (matrix.size() != lambda_size) {
        fail(ErrorCode::invalid_argument,
             "matrix has " + std::to_string(matrix.size()) + " rows, expected "
                 + std::to_string(lambda_size));
      }
      for (std::size_t l = 0; l < lambda_size; ++l) {
        if (matrix[l].size() != k_size) {
          fail(ErrorCode::invalid_argument,
               "matrix row " + std::to_string(l) + " has " + std::to_string(matrix[l].size())
                   + " entries, expected " + std::to_string(k_size));
        }
        for (std::size_t k = 0; k < k_size; ++k) {
          auto const& p = matrix[l][k];
          if (!p && !has_zero) {
            fail(ErrorCode::zero_entry_in_plain_rees,
                 "entry (" + std::to_string(l) + ", " + std::to_string(k) + ") is zero");
          }
          if (p && *p >= group.size()) {
            fail(ErrorCode::out_of_range,
                 "entry (" + std::to_string(l) + ", " + std::to_string(k)
                     + ") is not a group element");
          }
        }
      }
      ReesStructure rs;
      rs.has_zero       = has_zero;
      rs.k_size         = k_size;
      rs.lambda_size    = lambda_size;
      rs.group          = group;
      rs.group_identity = *flags.identity;
      rs.matrix         = matrix;
      return rs;
    }
  }  // namespace

  ReesSemigroup build_rees(std::size_t            k_size,
                           FiniteSemigroup const& group,
                           std::size_t            lambda_size,
                           SandwichMatrix const&  matrix) {
    auto rs = check_shape(k_size, group, lambda_size, matrix, false);
    return ReesSemigroup{rs.semigroup(), std::move(rs)};
  }

  ReesSemigroup build_rees0(std::size_t            k_size,
                            FiniteSemigroup const& group,
                            std::size_t            lambda_size,
                            SandwichMatrix const&  matrix) {
    auto rs = check_shape(k_size, group, lambda_size, matrix, true);
    for (std::size_t l = 0; l < lambda_size; ++l) {
      if (std::none_of(matrix[l].begin(), matrix[l].end(), [](auto const& p) { return p; })) {
        fail(ErrorCode::irregular_matrix, "row " + std::to_string(l) + " is all zero");
      }
    }
    for (std::size_t k = 0; k < k_size; ++k) {
      bool any = false;
      for (std::size_t l = 0; l < lambda_size; ++l) {
        any = any || matrix[l][k].has_value();
      }
      if (!any) {
        fail(ErrorCode::irregular_matrix, "column " + std::to_string(k) + " is all zero");
      }
    }
    return ReesSemigroup{rs.semigroup(), std::move(rs)};
  }

  bool is_completely_zero_simple(FiniteSemigroup const& s, GreensData const& g) {
    auto zero = find_zero(s);
    if (!zero || g.j_classes.size() != 2) {
      return false;
    }
    for (auto v : s.table()) {
      if (v != *zero) {
        return true;
      }
    }
    return false;
  }

  namespace {
    // Rees coordinates of the class j (plus the zero, when given), checked
    // against the full table of s.
    ReesStructure decompose_class(FiniteSemigroup const&   s,
                                  GreensData const&        g,
                                  ElementSet const&        j,
                                  std::optional<ElementId> zero,
                                  ErrorCode                not_applicable) {
      std::optional<ElementId> e;
      j.for_each([&](ElementId x) {
        if (!e && s.product(x, x) == x) {
          e = x;
        }
      });
      if (!e) {
        fail(not_applicable, "the class has no idempotent");
      }

      std::vector<std::size_t> r_ids, l_ids;
      j.for_each([&](ElementId x) {
        if (std::find(r_ids.begin(), r_ids.end(), g.r_class_of[x]) == r_ids.end()) {
          r_ids.push_back(g.r_class_of[x]);
        }
        if (std::find(l_ids.begin(), l_ids.end(), g.l_class_of[x]) == l_ids.end()) {
          l_ids.push_back(g.l_class_of[x]);
        }
      });

      ElementSet const&      r_e = g.r_classes[g.r_class_of[*e]];
      ElementSet const&      l_e = g.l_classes[g.l_class_of[*e]];
      std::vector<ElementId> h{*e};
      (r_e & l_e).for_each([&](ElementId x) {
        if (x != *e) {
          h.push_back(x);
        }
      });
      std::vector<ElementId> h_index(s.size(), 0);
      for (std::size_t i = 0; i < h.size(); ++i) {
        h_index[h[i]] = static_cast<ElementId>(i);
      }
      std::size_t const        m = h.size();
      std::vector<ElementId>   gtable(m * m);
      std::vector<std::string> glabels(m);
      for (std::size_t a = 0; a < m; ++a) {
        glabels[a] = s.label(h[a]);
        for (std::size_t b = 0; b < m; ++b) {
          auto const v = s.product(h[a], h[b]);
          if (!r_e.contains(v) || !l_e.contains(v)) {
            fail(ErrorCode::iso_check_failed, "the H-class of the idempotent is not a group");
          }
          gtable[a * m + b] = h_index[v];
        }
      }

      std::vector<ElementId> r_rep, q_rep;
      for (auto id : r_ids) {
        r_rep.push_back((g.r_classes[id] & l_e).first());
      }
      for (auto id : l_ids) {
        q_rep.push_back((r_e & g.l_classes[id]).first());
      }

      ReesStructure rs;
      rs.has_zero       = zero.has_value();
      rs.k_size         = r_ids.size();
      rs.lambda_size    = l_ids.size();
      rs.group          = FiniteSemigroup::make_unchecked(m, std::move(gtable), std::move(glabels));
      rs.group_identity = 0;
      rs.matrix.assign(rs.lambda_size, std::vector<SandwichEntry>(rs.k_size));
      for (std::size_t l = 0; l < rs.lambda_size; ++l) {
        for (std::size_t k = 0; k < rs.k_size; ++k) {
          auto const v = s.product(q_rep[l], r_rep[k]);
          if (j.contains(v)) {
            rs.matrix[l][k] = h_index[v];
          } else if (!zero) {
            fail(not_applicable, "a sandwich product leaves the class");
          }
        }
      }

      std::vector<ElementId> iso(rs.order());
      ElementSet             image(s.size());
      for (ElementId x = 0; x < rs.order(); ++x) {
        if (rs.is_zero(x)) {
          iso[x] = *zero;
        } else {
          auto const t = rs.triple(x);
          iso[x]       = s.product(s.product(r_rep[t.kappa], h[t.g]), q_rep[t.lambda]);
        }
        image.insert(iso[x]);
      }
      if (image.count() != rs.order() || image.count() != s.size()) {
        fail(ErrorCode::iso_check_failed, "the coordinate map is not a bijection");
      }
      auto const built = rs.semigroup();
      for (ElementId a = 0; a < rs.order(); ++a) {
        for (ElementId b = 0; b < rs.order(); ++b) {
          if (iso[built.product(a, b)] != s.product(iso[a], iso[b])) {
            fail(ErrorCode::iso_check_failed,
                 "products disagree at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
          }
        }
      }
      rs.iso_to_parent = std::move(iso);
      return rs;
    }
  }  // namespace

  ReesStructure decompose_simple(FiniteSemigroup const& s) {
    auto const g = greens_classes(s);
    if (g.j_classes.size() != 1) {
      fail(ErrorCode::not_simple,
           "the semigroup has " + std::to_string(g.j_classes.size()) + " J-classes");
    }
    return decompose_class(s, g, s.all(), std::nullopt, ErrorCode::not_simple);
  }

  ReesStructure decompose_zero_simple(FiniteSemigroup const& s) {
    auto const g = greens_classes(s);
    if (!is_completely_zero_simple(s, g)) {
      fail(ErrorCode::not_zero_simple, "the semigroup is not completely 0-simple");
    }
    ElementId const zero = *find_zero(s);
    ElementSet      j    = s.all();
    j.erase(zero);
    return decompose_class(s, g, j, zero, ErrorCode::not_zero_simple);
  }

  ReesStructure normalize_inverse(ReesStructure const& rs) {
    if (!rs.has_zero) {
      fail(ErrorCode::invalid_argument, "normalization needs a Rees 0-matrix structure");
    }
    if (rs.k_size != rs.lambda_size) {
      fail(ErrorCode::not_square,
           "|K| = " + std::to_string(rs.k_size) + " but |Lambda| = "
               + std::to_string(rs.lambda_size));
    }
    std::size_t const        n = rs.k_size;
    std::vector<std::size_t> sigma(n);
    std::vector<std::size_t> column_hits(n, 0);
    for (std::size_t l = 0; l < n; ++l) {
      std::size_t hits = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (rs.matrix[l][k]) {
          sigma[l] = k;
          ++hits;
          ++column_hits[k];
        }
      }
      if (hits != 1) {
        fail(ErrorCode::not_inverse,
             "row " + std::to_string(l) + " has " + std::to_string(hits) + " nonzero entries");
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (column_hits[k] != 1) {
        fail(ErrorCode::not_inverse,
             "column " + std::to_string(k) + " has " + std::to_string(column_hits[k])
                 + " nonzero entries");
      }
    }
    std::vector<std::size_t> sigma_inv(n);
    for (std::size_t l = 0; l < n; ++l) {
      sigma_inv[sigma[l]] = l;
    }

    ReesStructure out = rs;
    out.iso_to_parent.reset();
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t k = 0; k < n; ++k) {
        out.matrix[l][k] = l == k ? SandwichEntry(rs.group_identity) : std::nullopt;
      }
    }
    // new (k, g, l') is old (k, g a^-1, sigma^-1(l')) with a = p[sigma^-1(l')][l']
    std::vector<ElementId> to_old(out.order());
    for (ElementId x = 0; x < out.order(); ++x) {
      if (out.is_zero(x)) {
        to_old[x] = 0;
        continue;
      }
      auto const      t   = out.triple(x);
      std::size_t     l   = sigma_inv[t.lambda];
      ElementId const a   = *rs.matrix[l][t.lambda];
      ElementId const g   = rs.group.product(t.g, group_inverse(rs.group, a));
      to_old[x]           = rs.index(t.kappa, g, l);
    }
    auto const fresh = out.semigroup();
    auto const old   = rs.semigroup();
    for (ElementId a = 0; a < out.order(); ++a) {
      for (ElementId b = 0; b < out.order(); ++b) {
        if (to_old[fresh.product(a, b)] != old.product(to_old[a], to_old[b])) {
          fail(ErrorCode::iso_check_failed, "normalization broke the multiplication");
        }
      }
    }
    if (rs.iso_to_parent) {
      for (auto& x : to_old) {
        x = (*rs.iso_to_parent)[x];
      }
    }
    out.iso_to_parent = std::move(to_old);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Explicit covers, in dense Rees indices
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Pred>
    ElementSet triples_where(ReesStructure const& rs, bool with_zero, Pred pred) {
      ElementSet out(rs.order());
      for (ElementId x = 0; x < rs.order(); ++x) {
        if (rs.is_zero(x) ? with_zero : pred(rs.triple(x))) {
          out.insert(x);
        }
      }
      return out;
    }

    void require_normalized(ReesStructure const& rs) {
      if (!rs.has_zero || rs.k_size != rs.lambda_size) {
        fail(ErrorCode::not_inverse, "expected a normalized inverse structure");
      }
      for (std::size_t l = 0; l < rs.lambda_size; ++l) {
        for (std::size_t k = 0; k < rs.k_size; ++k) {
          bool const ok = l == k ? rs.matrix[l][k] == rs.group_identity : !rs.matrix[l][k];
          if (!ok) {
            fail(ErrorCode::not_inverse, "the sandwich matrix is not the identity");
          }
        }
      }
    }

    // Closure and inverse-closure of each part, using (k,g,l)^-1 = (l,g^-1,k).
    void check_inverse_parts(ReesStructure const& rs, Cover const& c) {
      auto const s = rs.semigroup();
      for (std::size_t i = 0; i < c.parts.size(); ++i) {
        auto const& part = c.parts[i];
        bool        ok   = !part.is_full() && is_closed(s, part);
        part.for_each([&](ElementId x) {
          if (!rs.is_zero(x)) {
            auto const t = rs.triple(x);
            ok = ok && part.contains(rs.index(t.lambda, group_inverse(rs.group, t.g), t.kappa));
          }
        });
        if (!ok) {
          fail(ErrorCode::internal, "part " + std::to_string(i) + " is not a proper inverse subsemigroup");
        }
      }
    }
  }  // namespace

  Cover cover_simple(ReesStructure const& rs) {
    if (rs.k_size == 1 && rs.lambda_size == 1) {
      fail(ErrorCode::is_group_case, "|K| = |Lambda| = 1, the semigroup is a group");
    }
    auto const first = rs.k_size > 1
                           ? triples_where(rs, false, [](ReesTriple t) { return t.kappa == 0; })
                           : triples_where(rs, false, [](ReesTriple t) { return t.lambda == 0; });
    return Cover{Kind::subsemigroup, {first, first.complement()}};
  }

  Cover cover_zero_simple(ReesStructure const& rs) {
    if (!rs.has_zero) {
      fail(ErrorCode::invalid_argument, "expected a Rees 0-matrix structure");
    }
    if (rs.k_size == 1 && rs.lambda_size == 1) {
      ElementSet zero(rs.order(), {0});
      return Cover{Kind::subsemigroup, {zero.complement(), zero}};
    }
    bool const by_row = rs.k_size > 1;
    auto const first  = triples_where(rs, true, [&](ReesTriple t) {
      return (by_row ? t.kappa : t.lambda) == 0;
    });
    ElementSet second = first.complement();
    second.insert(0);
    return Cover{Kind::subsemigroup, {first, second}};
  }

  Cover inverse_cover_k_ge3(ReesStructure const& rs) {
    if (rs.k_size < 3) {
      fail(ErrorCode::k_too_small, "|K| = " + std::to_string(rs.k_size) + " < 3");
    }
    require_normalized(rs);
    Cover c{Kind::inverse_sub, {}};
    for (std::size_t j = 0; j < 3; ++j) {
      c.parts.push_back(triples_where(rs, true, [j](ReesTriple t) {
        return t.kappa != j && t.lambda != j;
      }));
    }
    check_inverse_parts(rs, c);
    return c;
  }

  Cover inverse_cover_k2(ReesStructure const&       rs,
                         ElementSet const&          b,
                         std::span<ElementId const> reps) {
    if (rs.k_size != 2) {
      fail(ErrorCode::invalid_argument, "|K| = " + std::to_string(rs.k_size) + ", expected 2");
    }
    require_normalized(rs);
    auto const& g = rs.group;
    if (g.size() == 1) {
      fail(ErrorCode::trivial_group, "the structure group is trivial");
    }
    if (b.universe() != g.size() || b.is_full() || !b.contains(rs.group_identity)
        || !is_closed(g, b)) {
      fail(ErrorCode::invalid_argument, "B is not a proper subgroup");
    }
    std::size_t const n = g.size() / b.count();
    if (NatOrInfinity::finite(n) != min_proper_index(g, g.size())) {
      fail(ErrorCode::not_minimal_index,
           "B has index " + std::to_string(n) + ", above the minimum");
    }
    if (reps.size() != n) {
      fail(ErrorCode::invalid_argument, "expected " + std::to_string(n) + " coset representatives");
    }

    Cover c{Kind::inverse_sub, {}};
    for (ElementId gi : reps) {
      ElementId const inv = group_inverse(g, gi);
      ElementSet      b_g(g.size()), g_b(g.size()), g_b_g(g.size());
      b.for_each([&](ElementId x) {
        b_g.insert(g.product(x, gi));
        g_b.insert(g.product(inv, x));
        g_b_g.insert(g.product(g.product(inv, x), gi));
      });
      c.parts.push_back(triples_where(rs, true, [&](ReesTriple t) {
        if (t.kappa == 0) {
          return t.lambda == 0 ? b.contains(t.g) : b_g.contains(t.g);
        }
        return t.lambda == 0 ? g_b.contains(t.g) : g_b_g.contains(t.g);
      }));
    }
    c.parts.push_back(triples_where(rs, true, [](ReesTriple t) { return t.kappa == t.lambda; }));
    check_inverse_parts(rs, c);
    return c;
  }

}  // namespace semicover
