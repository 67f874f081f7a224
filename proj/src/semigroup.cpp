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

#include "semicover/semigroup.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <utility>

#include "semicover/error.hpp"
#include "semicover/greens.hpp"

namespace semicover {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::out_of_range: return "OutOfRange";
      case ErrorCode::not_associative: return "NotAssociative";
      case ErrorCode::bad_image: return "BadImage";
      case ErrorCode::empty_generators: return "EmptyGenerators";
      case ErrorCode::too_large: return "TooLarge";
      case ErrorCode::empty_complement: return "EmptyComplement";
      case ErrorCode::not_maximal: return "NotMaximal";
      case ErrorCode::part_not_proper_after_lift: return "PartNotProperAfterLift";
      case ErrorCode::zero_entry_in_plain_rees: return "ZeroEntryInPlainRees";
      case ErrorCode::irregular_matrix: return "IrregularMatrix";
      case ErrorCode::not_simple: return "NotSimple";
      case ErrorCode::not_zero_simple: return "NotZeroSimple";
      case ErrorCode::iso_check_failed: return "IsoCheckFailed";
      case ErrorCode::not_inverse: return "NotInverse";
      case ErrorCode::not_square: return "NotSquare";
      case ErrorCode::is_group_case: return "IsGroupCase";
      case ErrorCode::k_too_small: return "KTooSmall";
      case ErrorCode::trivial_group: return "TrivialGroup";
      case ErrorCode::not_minimal_index: return "NotMinimalIndex";
      case ErrorCode::not_a_group: return "NotAGroup";
      case ErrorCode::order_cap_exceeded: return "OrderCapExceeded";
      case ErrorCode::no_identity: return "NoIdentity";
      case ErrorCode::parse_error: return "ParseError";
      case ErrorCode::invalid_argument: return "InvalidArgument";
      case ErrorCode::internal: return "Internal";
    }
    return "Unknown";
  }

  bool canonical_less(ElementSet const& a, ElementSet const& b) {
    auto const ca = a.count();
    auto const cb = b.count();
    if (ca != cb) {
      return ca < cb;
    }
    return a.elements() < b.elements();
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup FiniteSemigroup::make_unchecked(std::size_t              n,
                                                  std::vector<ElementId>   table,
                                                  std::vector<std::string> labels) {
    FiniteSemigroup s;
    s._n      = n;
    s._table  = std::move(table);
    s._labels = std::move(labels);
    if (!s._labels.empty() && s._labels.size() != n) {
      s._labels.clear();
    }
    return s;
  }

  std::string FiniteSemigroup::label(ElementId x) const {
    if (x < _labels.size()) {
      return _labels[x];
    }
    return std::to_string(x);
  }

  std::optional<std::array<ElementId, 3>> first_non_associative_triple(
      FiniteSemigroup const& s) {
    auto const n = static_cast<ElementId>(s.size());
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        ElementId const ab = s.product(a, b);
        for (ElementId c = 0; c < n; ++c) {
          if (s.product(ab, c) != s.product(a, s.product(b, c))) {
            return std::array<ElementId, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup validate_table(std::vector<std::vector<std::int64_t>> const& raw,
                                 std::vector<std::string> labels) {
    std::size_t const n = raw.size();
    if (n == 0) {
      fail(ErrorCode::invalid_argument, "a semigroup needs at least one element");
    }
    std::vector<ElementId> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i].size() != n) {
        fail(ErrorCode::invalid_argument,
             "row " + std::to_string(i) + " has " + std::to_string(raw[i].size())
                 + " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        auto const v = raw[i][j];
        if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
          fail(ErrorCode::out_of_range,
               "entry (" + std::to_string(i) + ", " + std::to_string(j)
                   + ") = " + std::to_string(v) + " is not in [0, "
                   + std::to_string(n) + ")");
        }
        table.push_back(static_cast<ElementId>(v));
      }
    }
    auto s = FiniteSemigroup::make_unchecked(n, std::move(table), std::move(labels));
    if (auto t = first_non_associative_triple(s)) {
      auto [a, b, c] = *t;
      fail(ErrorCode::not_associative,
           "(" + std::to_string(a) + "*" + std::to_string(b) + ")*"
               + std::to_string(c) + " != " + std::to_string(a) + "*("
               + std::to_string(b) + "*" + std::to_string(c) + ")");
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closures
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Extra>
    ElementSet close(FiniteSemigroup const& s, ElementSet const& x, Extra&& extra) {
      ElementSet             result(s.size());
      std::vector<ElementId> elts;
      auto                   add = [&](ElementId y) {
        if (result.insert(y)) {
          elts.push_back(y);
        }
      };
      x.for_each(add);
      for (std::size_t i = 0; i < elts.size(); ++i) {
        extra(elts[i], add);
        for (std::size_t j = 0; j <= i; ++j) {
          add(s.product(elts[i], elts[j]));
          add(s.product(elts[j], elts[i]));
        }
      }
      return result;
    }
  }  // namespace

  ElementSet closure(FiniteSemigroup const& s, ElementSet const& x) {
    return close(s, x, [](ElementId, auto&&) {});
  }

  ElementSet closure(FiniteSemigroup const&     s,
                     ElementSet const&          x,
                     std::span<ElementId const> inverse) {
    return close(s, x, [&inverse](ElementId a, auto&& add) { add(inverse[a]); });
  }

  bool is_closed(FiniteSemigroup const& s, ElementSet const& x) {
    auto const elts = x.elements();
    for (auto a : elts) {
      for (auto b : elts) {
        if (!x.contains(s.product(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<ElementId> is_monogenic(FiniteSemigroup const& s) {
    for (ElementId x = 0; x < s.size(); ++x) {
      if (closure(s, ElementSet(s.size(), {x})).is_full()) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::optional<ElementId> find_identity(FiniteSemigroup const& s) {
    auto const n = static_cast<ElementId>(s.size());
    for (ElementId e = 0; e < n; ++e) {
      bool ok = true;
      for (ElementId m = 0; m < n && ok; ++m) {
        ok = s.product(e, m) == m && s.product(m, e) == m;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<ElementId> find_zero(FiniteSemigroup const& s) {
    auto const n = static_cast<ElementId>(s.size());
    for (ElementId z = 0; z < n; ++z) {
      bool ok = true;
      for (ElementId m = 0; m < n && ok; ++m) {
        ok = s.product(z, m) == z && s.product(m, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  ElementSet idempotents(FiniteSemigroup const& s) {
    ElementSet e(s.size());
    for (ElementId x = 0; x < s.size(); ++x) {
      if (s.product(x, x) == x) {
        e.insert(x);
      }
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure flags
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_latin_square(FiniteSemigroup const& s) {
      auto const          n = s.size();
      std::vector<char>   seen(n);
      for (ElementId a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (auto v : s.row(a)) {
          if (seen[v]++ != 0) {
            return false;
          }
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (ElementId b = 0; b < n; ++b) {
          if (seen[s.product(b, a)]++ != 0) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  StructureFlags structure_flags(FiniteSemigroup const& s) {
    StructureFlags f;
    f.identity    = find_identity(s);
    f.idempotents = idempotents(s);
    f.is_group    = f.identity.has_value() && is_latin_square(s);

    auto const g       = greens_classes(s);
    auto const one_idempotent = [&f](ElementSet const& cls) {
      return (cls & f.idempotents).count() == 1;
    };
    f.is_inverse = std::all_of(g.r_classes.begin(), g.r_classes.end(), one_idempotent)
                   && std::all_of(g.l_classes.begin(), g.l_classes.end(), one_idempotent);

    if (f.is_inverse) {
      auto const             n = static_cast<ElementId>(s.size());
      std::vector<ElementId> inv(n, n);
      for (ElementId a = 0; a < n; ++a) {
        for (ElementId x = 0; x < n; ++x) {
          if (s.product(s.product(a, x), a) == a
              && s.product(s.product(x, a), x) == x) {
            inv[a] = x;
            break;
          }
        }
        if (inv[a] == n) {
          fail(ErrorCode::internal, "inverse semigroup element without inverse");
        }
      }
      f.inverse_map = std::move(inv);
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    if (find_identity(s)) {
      return s;
    }
    auto const             n   = s.size();
    auto const             one = static_cast<ElementId>(n);
    std::vector<ElementId> table((n + 1) * (n + 1));
    for (ElementId a = 0; a <= n; ++a) {
      for (ElementId b = 0; b <= n; ++b) {
        ElementId v;
        if (a == one) {
          v = b;
        } else if (b == one) {
          v = a;
        } else {
          v = s.product(a, b);
        }
        table[a * (n + 1) + b] = v;
      }
    }
    std::vector<std::string> labels;
    if (!s.labels().empty()) {
      labels = s.labels();
      labels.emplace_back("1");
    }
    return FiniteSemigroup::make_unchecked(n + 1, std::move(table), std::move(labels));
  }

  FiniteSemigroup build_cyclic(std::size_t index, std::size_t period) {
    if (index == 0 || period == 0) {
      fail(ErrorCode::invalid_argument, "index and period must be at least 1");
    }
    std::size_t const n = index + period - 1;
    // element k is x^(k+1); exponents above n wrap into the period
    auto reduce = [index, period](std::size_t e) {
      return e < index + period ? e : index + (e - index) % period;
    };
    std::vector<ElementId>   table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = "x^" + std::to_string(a + 1);
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<ElementId>(reduce(a + b + 2) - 1);
      }
    }
    return FiniteSemigroup::make_unchecked(n, std::move(table), std::move(labels));
  }

  FiniteSemigroup build_null(std::size_t n) {
    if (n == 0) {
      fail(ErrorCode::invalid_argument, "a semigroup needs at least one element");
    }
    return FiniteSemigroup::make_unchecked(n, std::vector<ElementId>(n * n, 0));
  }

  FiniteSemigroup induced_subsemigroup(FiniteSemigroup const&  s,
                                       ElementSet const&       x,
                                       std::vector<ElementId>* embedding) {
    auto const             elts = x.elements();
    std::vector<ElementId> pos(s.size(), 0);
    for (std::size_t i = 0; i < elts.size(); ++i) {
      pos[elts[i]] = static_cast<ElementId>(i);
    }
    std::size_t const      m = elts.size();
    std::vector<ElementId> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto const v = s.product(elts[i], elts[j]);
        if (!x.contains(v)) {
          fail(ErrorCode::invalid_argument, "subset is not closed");
        }
        table[i * m + j] = pos[v];
      }
    }
    std::vector<std::string> labels;
    if (!s.labels().empty()) {
      for (auto e : elts) {
        labels.push_back(s.label(e));
      }
    }
    if (embedding != nullptr) {
      *embedding = elts;
    }
    return FiniteSemigroup::make_unchecked(m, std::move(table), std::move(labels));
  }

  std::string carrier_digest(FiniteSemigroup const& s) {
    std::uint64_t h = 1469598103934665603ULL;
    auto          mix = [&h](std::uint32_t v) {
      for (int i = 0; i < 4; ++i) {
        h ^= (v >> (8 * i)) & 0xFFU;
        h *= 1099511628211ULL;
      }
    };
    mix(static_cast<std::uint32_t>(s.size()));
    for (auto v : s.table()) {
      mix(v);
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::to_string(s.size()) + ":" + buf;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Map = std::vector<std::uint32_t>;

    // Partial maps live on points + 1 points; the extra point is a sink.
    Map compose(Map const& a, Map const& b) {
      Map c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = b[a[i]];
      }
      return c;
    }

    std::string map_label(Map const& m, std::size_t points) {
      std::string out = "[";
      for (std::size_t i = 0; i < points; ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += m[i] == points ? std::string("-") : std::to_string(m[i]);
      }
      return out + "]";
    }

    TransformationSemigroup table_of(std::vector<Map> const& elts, std::size_t points) {
      std::map<Map, ElementId> index;
      for (std::size_t i = 0; i < elts.size(); ++i) {
        index.emplace(elts[i], static_cast<ElementId>(i));
      }
      std::size_t const        n = elts.size();
      std::vector<ElementId>   table(n * n);
      std::vector<std::string> labels;
      for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(map_label(elts[a], points));
        for (std::size_t b = 0; b < n; ++b) {
          table[a * n + b] = index.at(compose(elts[a], elts[b]));
        }
      }
      TransformationSemigroup out;
      out.semigroup = FiniteSemigroup::make_unchecked(n, std::move(table), std::move(labels));
      for (auto const& m : elts) {
        Map external(points);
        for (std::size_t i = 0; i < points; ++i) {
          external[i] = m[i] == points ? undefined_point : m[i];
        }
        out.maps.push_back(std::move(external));
      }
      return out;
    }
  }  // namespace

  TransformationSemigroup transformation_closure(std::size_t                 points,
                                                 std::vector<Map> const&     gens) {
    if (gens.empty()) {
      fail(ErrorCode::empty_generators, "at least one generator is required");
    }
    std::vector<Map> internal;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].size() != points) {
        fail(ErrorCode::bad_image,
             "generator " + std::to_string(g) + " has " + std::to_string(gens[g].size())
                 + " images, expected " + std::to_string(points));
      }
      Map m(points + 1, static_cast<std::uint32_t>(points));
      for (std::size_t i = 0; i < points; ++i) {
        auto const v = gens[g][i];
        if (v == undefined_point) {
          continue;
        }
        if (v >= points) {
          fail(ErrorCode::bad_image,
               "generator " + std::to_string(g) + " maps " + std::to_string(i) + " to "
                   + std::to_string(v));
        }
        m[i] = v;
      }
      internal.push_back(std::move(m));
    }
    std::vector<Map> elts;
    std::map<Map, ElementId> seen;
    for (auto const& m : internal) {
      if (seen.emplace(m, static_cast<ElementId>(elts.size())).second) {
        elts.push_back(m);
      }
    }
    // right multiplication by generators reaches every product
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : internal) {
        Map c = compose(elts[i], g);
        if (seen.emplace(c, static_cast<ElementId>(elts.size())).second) {
          elts.push_back(std::move(c));
        }
      }
    }
    return table_of(elts, points);
  }

  TransformationSemigroup build_symmetric_inverse_monoid(std::size_t m) {
    if (m > 4) {
      fail(ErrorCode::too_large, "I_" + std::to_string(m) + " exceeds the size limit (m <= 4)");
    }
    if (m == 0) {
      fail(ErrorCode::invalid_argument, "I_m needs m >= 1");
    }
    std::vector<Map> elts;
    Map              cur(m + 1, static_cast<std::uint32_t>(m));
    std::vector<bool> used(m, false);
    // every point maps to the sink or to an unused point
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == m) {
        elts.push_back(cur);
        return;
      }
      cur[i] = static_cast<std::uint32_t>(m);
      self(self, i + 1);
      for (std::uint32_t v = 0; v < m; ++v) {
        if (!used[v]) {
          used[v] = true;
          cur[i]  = v;
          self(self, i + 1);
          used[v] = false;
        }
      }
      cur[i] = static_cast<std::uint32_t>(m);
    };
    rec(rec, 0);
    std::sort(elts.begin(), elts.end());
    return table_of(elts, m);
  }

}  // namespace semicover
