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

#include "semicover/cover.hpp"

#include <algorithm>
#include <utility>

namespace semicover {

  std::string_view to_string(Kind k) noexcept {
    switch (k) {
      case Kind::subsemigroup: return "subsemigroup";
      case Kind::inverse_sub: return "inverse_sub";
      case Kind::submonoid: return "submonoid";
      case Kind::monoidal_sub: return "monoidal_sub";
      case Kind::subgroup: return "subgroup";
    }
    return "unknown";
  }

  std::optional<Kind> kind_from_string(std::string_view s) {
    for (auto k : {Kind::subsemigroup,
                   Kind::inverse_sub,
                   Kind::submonoid,
                   Kind::monoidal_sub,
                   Kind::subgroup}) {
      if (to_string(k) == s) {
        return k;
      }
    }
    return std::nullopt;
  }

  void canonicalize(Cover& c) {
    std::sort(c.parts.begin(), c.parts.end(), [](ElementSet const& a, ElementSet const& b) {
      return a.elements() < b.elements();
    });
  }

  std::string NatOrInfinity::to_string() const {
    return is_infinite() ? std::string("infinite") : std::to_string(*_value);
  }

  std::string_view to_string(CaseTag t) noexcept {
    switch (t) {
      case CaseTag::monogenic: return "monogenic";
      case CaseTag::group: return "group";
      case CaseTag::max_class_not_generating: return "max_class_not_generating";
      case CaseTag::completely_simple: return "completely_simple";
      case CaseTag::zero_simple_factor: return "zero_simple_factor";
      case CaseTag::cyclic_group: return "cyclic_group";
      case CaseTag::maximal_subgroups: return "maximal_subgroups";
      case CaseTag::union_of_groups: return "union_of_groups";
      case CaseTag::not_union_of_groups: return "not_union_of_groups";
      case CaseTag::brandt_monogenic: return "brandt_monogenic";
      case CaseTag::rees_k_equals_2: return "rees_k_equals_2";
      case CaseTag::rees_k_at_least_3: return "rees_k_at_least_3";
      case CaseTag::monoid_group: return "monoid_group";
      case CaseTag::r1_nontrivial: return "r1_nontrivial";
      case CaseTag::identity_adjoined: return "identity_adjoined";
      case CaseTag::identity_adjoined_group: return "identity_adjoined_group";
      case CaseTag::exhaustive_search: return "exhaustive_search";
      case CaseTag::uncoverable_element: return "uncoverable_element";
    }
    return "unknown";
  }

  std::string_view to_string(Provenance p) noexcept {
    switch (p) {
      case Provenance::classifier: return "classifier";
      case Provenance::oracle: return "oracle";
      case Provenance::both: return "both";
    }
    return "unknown";
  }

  CoveringResult finite_result(CaseTag tag, Cover cover) {
    canonicalize(cover);
    CoveringResult r;
    r.value       = NatOrInfinity::finite(cover.parts.size());
    r.case_tag    = tag;
    r.certificate = std::move(cover);
    return r;
  }

  CoveringResult infinite_result(CaseTag tag, ElementId witness) {
    CoveringResult r;
    r.value    = NatOrInfinity::infinity();
    r.case_tag = tag;
    r.witness  = witness;
    return r;
  }

}  // namespace semicover
