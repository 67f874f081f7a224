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

#include "semicover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>

#include "semicover/error.hpp"
#include "semicover/set_cover.hpp"

namespace semicover {

  namespace {
    using Mask = std::uint32_t;

    // Subsets of a carrier of at most 24 elements, as bit masks.
    class MaskAlgebra {
     public:
      MaskAlgebra(FiniteSemigroup const& s, StructureFlags const& flags, Kind kind)
          : _s(s), _n(s.size()), _kind(kind), _full(_n == 32 ? ~Mask(0) : (Mask(1) << _n) - 1) {
        if (kind == Kind::inverse_sub) {
          if (!flags.is_inverse || !flags.inverse_map) {
            fail(ErrorCode::not_inverse, "the semigroup is not inverse");
          }
          _inverse = *flags.inverse_map;
        }
        if (kind == Kind::submonoid) {
          if (!flags.identity) {
            fail(ErrorCode::no_identity, "the semigroup has no identity");
          }
          _seed = Mask(1) << *flags.identity;
        }
      }

      Mask full() const noexcept {
        return _full;
      }

      Mask close(Mask x) const {
        x |= _seed;
        if (!_inverse.empty()) {
          x = with_inverses(x);
        }
        Mask done = 0;
        // each new element is multiplied against everything seen so far
        while (Mask fresh = x & ~done) {
          ElementId const a = static_cast<ElementId>(std::countr_zero(fresh));
          done |= Mask(1) << a;
          Mask add = 0;
          for (Mask rest = done; rest != 0; rest &= rest - 1) {
            ElementId const b = static_cast<ElementId>(std::countr_zero(rest));
            add |= Mask(1) << _s.product(a, b);
            add |= Mask(1) << _s.product(b, a);
          }
          x |= add;
          if (!_inverse.empty()) {
            x = with_inverses(x);
          }
        }
        return x;
      }

      bool keep(Mask x) const {
        if (_kind == Kind::monoidal_sub) {
          return local_identity(x).has_value();
        }
        if (_kind == Kind::subgroup) {
          auto e = local_identity(x);
          if (!e) {
            return false;
          }
          for (Mask m = x; m != 0; m &= m - 1) {
            ElementId const a           = static_cast<ElementId>(std::countr_zero(m));
            bool            has_inverse = false;
            for (Mask r = x; r != 0 && !has_inverse; r &= r - 1) {
              ElementId const b = static_cast<ElementId>(std::countr_zero(r));
              has_inverse       = _s.product(a, b) == *e && _s.product(b, a) == *e;
            }
            if (!has_inverse) {
              return false;
            }
          }
        }
        return true;
      }

      bool filtered() const noexcept {
        return _kind == Kind::monoidal_sub || _kind == Kind::subgroup;
      }

     private:
      Mask with_inverses(Mask x) const {
        Mask out = x;
        for (Mask m = x; m != 0; m &= m - 1) {
          out |= Mask(1) << _inverse[static_cast<std::size_t>(std::countr_zero(m))];
        }
        return out;
      }

      std::optional<ElementId> local_identity(Mask x) const {
        for (Mask m = x; m != 0; m &= m - 1) {
          ElementId const e  = static_cast<ElementId>(std::countr_zero(m));
          bool            ok = true;
          for (Mask r = x; r != 0 && ok; r &= r - 1) {
            ElementId const a = static_cast<ElementId>(std::countr_zero(r));
            ok                = _s.product(e, a) == a && _s.product(a, e) == a;
          }
          if (ok) {
            return e;
          }
        }
        return std::nullopt;
      }

      FiniteSemigroup const& _s;
      std::size_t            _n;
      Kind                   _kind;
      Mask                   _full;
      Mask                   _seed = 0;
      std::vector<ElementId> _inverse;
    };

    ElementSet to_set(Mask m, std::size_t n) {
      ElementSet out(n);
      for (; m != 0; m &= m - 1) {
        out.insert(static_cast<ElementId>(std::countr_zero(m)));
      }
      return out;
    }

    void check_cap(FiniteSemigroup const& s, std::size_t cap) {
      if (cap > hard_oracle_cap) {
        fail(ErrorCode::invalid_argument,
             "cap " + std::to_string(cap) + " exceeds the hard limit "
                 + std::to_string(hard_oracle_cap));
      }
      if (s.size() > cap) {
        fail(ErrorCode::order_cap_exceeded,
             "order " + std::to_string(s.size()) + " exceeds the oracle cap "
                 + std::to_string(cap));
      }
    }

    // Every closed set, found by growing closed sets one element at a time.
    std::vector<Mask> closed_sets(MaskAlgebra const& alg, std::size_t n) {
      std::unordered_set<Mask> seen;
      std::deque<Mask>         queue;
      auto push = [&](Mask m) {
        if (seen.insert(m).second) {
          queue.push_back(m);
        }
      };
      for (ElementId x = 0; x < n; ++x) {
        push(alg.close(Mask(1) << x));
      }
      while (!queue.empty()) {
        Mask const a = queue.front();
        queue.pop_front();
        for (ElementId x = 0; x < n; ++x) {
          if ((a >> x & 1U) == 0) {
            push(alg.close(a | Mask(1) << x));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    std::vector<Mask> proper_members(MaskAlgebra const& alg, std::size_t n) {
      std::vector<Mask> out;
      for (Mask m : closed_sets(alg, n)) {
        if (m != alg.full() && alg.keep(m)) {
          out.push_back(m);
        }
      }
      return out;
    }

    std::vector<Mask> maximal_members(MaskAlgebra const& alg, std::size_t n) {
      auto              all = proper_members(alg, n);
      std::vector<Mask> out;
      if (!alg.filtered()) {
        // maximal iff adding any outside element closes up to everything
        for (Mask m : all) {
          bool maximal = true;
          for (ElementId x = 0; x < n && maximal; ++x) {
            if ((m >> x & 1U) == 0) {
              maximal = alg.close(m | Mask(1) << x) == alg.full();
            }
          }
          if (maximal) {
            out.push_back(m);
          }
        }
        return out;
      }
      std::sort(all.begin(), all.end(), [](Mask a, Mask b) {
        return std::popcount(a) > std::popcount(b);
      });
      for (std::size_t i = 0; i < all.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < i && maximal; ++j) {
          maximal = !(std::popcount(all[j]) > std::popcount(all[i]) && (all[i] & ~all[j]) == 0);
        }
        if (maximal) {
          out.push_back(all[i]);
        }
      }
      return out;
    }

    SubalgebraSet to_subalgebras(Kind kind, std::vector<Mask> const& masks, std::size_t n) {
      SubalgebraSet out{kind, {}};
      for (Mask m : masks) {
        out.members.push_back(to_set(m, n));
      }
      std::sort(out.members.begin(), out.members.end(), canonical_less);
      return out;
    }
  }  // namespace

  SubalgebraSet all_proper_subalgebras(FiniteSemigroup const& s,
                                       StructureFlags const&  flags,
                                       Kind                   kind,
                                       std::size_t            cap) {
    check_cap(s, cap);
    MaskAlgebra const alg(s, flags, kind);
    return to_subalgebras(kind, proper_members(alg, s.size()), s.size());
  }

  SubalgebraSet maximal_proper(FiniteSemigroup const& s,
                               StructureFlags const&  flags,
                               Kind                   kind,
                               std::size_t            cap) {
    check_cap(s, cap);
    MaskAlgebra const alg(s, flags, kind);
    return to_subalgebras(kind, maximal_members(alg, s.size()), s.size());
  }

  CoveringResult minimal_cover_exact(FiniteSemigroup const& s,
                                     StructureFlags const&  flags,
                                     Kind                   kind,
                                     std::size_t            cap) {
    auto const maximal = maximal_proper(s, flags, kind, cap);
    ElementSet covered(s.size());
    for (auto const& m : maximal.members) {
      covered |= m;
    }
    CoveringResult r;
    if (!covered.is_full()) {
      r = infinite_result(CaseTag::uncoverable_element, (s.all() - covered).first());
    } else {
      auto chosen = minimum_set_cover(maximal.members, s.all());
      if (!chosen) {
        fail(ErrorCode::internal, "set cover failed on a covering family");
      }
      Cover c{kind, {}};
      for (auto i : *chosen) {
        c.parts.push_back(maximal.members[i]);
      }
      r = finite_result(CaseTag::exhaustive_search, std::move(c));
    }
    r.provenance = Provenance::oracle;
    return r;
  }

}  // namespace semicover
