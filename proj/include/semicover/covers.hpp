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

// Covering numbers of finite semigroups, inverse semigroups and monoids
// computed structurally (from Green's relations and Rees coordinates), with
// explicit certificates, plus the certificate checker.

#ifndef SEMICOVER_COVERS_HPP_
#define SEMICOVER_COVERS_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "cover.hpp"
#include "semigroup.hpp"

namespace semicover {

  struct Verdict {
    bool                       ok = true;
    std::string                violation;
    std::optional<std::size_t> part;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Checks every invariant of \p cover for its declared kind and reports
  //! the first violation found.
  Verdict verify_cover(FiniteSemigroup const& s,
                       StructureFlags const&  flags,
                       Cover const&           cover);

  //! True iff no proper substructure of the given kind contains \p x, so
  //! that no cover of that kind can exist.
  bool is_uncoverable(FiniteSemigroup const& s,
                      StructureFlags const&  flags,
                      Kind                   kind,
                      ElementId              x);

  //! Checks a result: the certificate for finite values (including that it
  //! has exactly value() parts), the witness for infinite ones.
  Verdict verify_result(FiniteSemigroup const& s,
                        StructureFlags const&  flags,
                        Kind                   kind,
                        CoveringResult const&  result);

  //! Covering number by proper subsemigroups.
  CoveringResult sigma_s(FiniteSemigroup const& s);

  //! Covering number by proper inverse subsemigroups; throws not_inverse.
  CoveringResult sigma_i(FiniteSemigroup const& s);

  //! Covering number by subgroups of an arbitrary finite semigroup. For a
  //! group this is groups::sigma_g; otherwise the maximal subgroups are the
  //! group H-classes, which are disjoint, so the answer is their number when
  //! they cover S and infinity otherwise.
  CoveringResult sigma_subgroups(FiniteSemigroup const& s);

  struct MonoidCoverings {
    CoveringResult sigma_s;
    CoveringResult sigma_m;
    CoveringResult sigma_m_star;
  };

  //! All three covering numbers of a finite monoid; throws no_identity.
  MonoidCoverings classify_monoid(FiniteSemigroup const& m);

}  // namespace semicover

#endif  // SEMICOVER_COVERS_HPP_
