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

// Text input formats and JSON reports.
//
// Every document starts with a header line naming its format:
//
//   cayley            n, then n rows of n integers
//   transformations   "points m", then one generator per line; "-" marks
//                     an undefined point of a partial map
//   rees | rees0      "K k", "L l", a "group" line, then "matrix" followed
//                     by l rows of k entries; entries are group indices,
//                     "e" for the identity and "." for zero (rees0 only)
//   group_ref         a catalog group name on the next line
//
// The group line is "group cyclic p", "group <catalog name>" or
// "group cayley n" followed by n table rows. '#' starts a comment.

#ifndef SEMICOVER_IO_HPP_
#define SEMICOVER_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cover.hpp"
#include "covers.hpp"
#include "semigroup.hpp"

namespace semicover {

  enum class Format { cayley, transformations, rees, rees0, group_ref };

  struct CayleyPayload {
    std::vector<std::vector<std::int64_t>> table;
    friend bool operator==(CayleyPayload const&, CayleyPayload const&) = default;
  };

  struct TransformationsPayload {
    std::size_t                             points = 0;
    std::vector<std::vector<std::uint32_t>> gens;  // undefined_point for "-"
    friend bool operator==(TransformationsPayload const&,
                           TransformationsPayload const&) = default;
  };

  struct GroupSpec {
    enum class Form { cyclic, catalog, cayley };
    Form                                   form  = Form::cyclic;
    std::size_t                            order = 1;
    std::string                            name;
    std::vector<std::vector<std::int64_t>> table;
    friend bool operator==(GroupSpec const&, GroupSpec const&) = default;
  };

  struct MatrixToken {
    enum class Form { index, identity, zero };
    Form          form  = Form::index;
    std::uint32_t index = 0;
    friend bool operator==(MatrixToken const&, MatrixToken const&) = default;
  };

  struct ReesPayload {
    std::size_t                           k_size      = 0;
    std::size_t                           lambda_size = 0;
    GroupSpec                             group;
    std::vector<std::vector<MatrixToken>> matrix;
    friend bool operator==(ReesPayload const&, ReesPayload const&) = default;
  };

  struct GroupRefPayload {
    std::string name;
    friend bool operator==(GroupRefPayload const&,
                           GroupRefPayload const&) = default;
  };

  struct InputDocument {
    Format format = Format::cayley;
    std::variant<CayleyPayload, TransformationsPayload, ReesPayload, GroupRefPayload>
        payload;
    friend bool operator==(InputDocument const&, InputDocument const&) = default;
  };

  //! Throws Error(parse_error) with "line L, col C: expected ..." messages.
  InputDocument parse_document(std::string_view text);

  //! Builds the carrier; associativity is always re-validated. Constructor
  //! errors are rethrown with the document format prefixed.
  FiniteSemigroup build(InputDocument const& doc);

  //! Canonical text for \p doc; parse_document(emit(doc)) == doc.
  std::string emit(InputDocument const& doc);

  FiniteSemigroup parse_semigroup(std::string_view text);

  //! Which covering number a report is about.
  enum class Sigma { s, i, m, m_star, g };

  std::optional<Sigma> sigma_from_string(std::string_view s);
  std::string_view     to_string(Sigma s) noexcept;
  Kind                 kind_of(Sigma s) noexcept;

  //! Structural computation of the requested number.
  CoveringResult compute_sigma(FiniteSemigroup const& s, Sigma which);

  //! Keys, in order: value, case, parts | witness, provenance,
  //! carrier_digest. "value" is an integer or the string "infinite".
  std::string result_json(FiniteSemigroup const& s, CoveringResult const& r);

  //! Flags, idempotents and Green's structure summary.
  std::string analyze_json(FiniteSemigroup const& s);

  //! Re-checks a certificate produced by result_json against \p s,
  //! including the carrier digest.
  Verdict verify_certificate(FiniteSemigroup const& s,
                             Sigma                  which,
                             std::string_view       certificate_json);

  struct CensusEntry {
    std::string                   file;
    std::optional<NatOrInfinity>  value;  // nullopt if the file failed
    std::string                   case_tag;
    std::string                   error;
    bool                          monogenic = false;
    bool                          group     = false;
  };

  struct Census {
    Sigma                    which = Sigma::s;
    std::vector<CensusEntry> entries;  // sorted by file name
  };

  //! Evaluates every regular file of \p dir.
  Census run_census(std::filesystem::path const& dir, Sigma which);

  //! Keys: kind, total, histogram (value -> count, including "error"),
  //! files.
  std::string census_json(Census const& c);

}  // namespace semicover

#endif  // SEMICOVER_IO_HPP_
