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

#ifndef SEMICOVER_ERROR_HPP_
#define SEMICOVER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace semicover {

  //! Every failure the library reports is one of these.
  enum class ErrorCode {
    out_of_range,
    not_associative,
    bad_image,
    empty_generators,
    too_large,
    empty_complement,
    not_maximal,
    part_not_proper_after_lift,
    zero_entry_in_plain_rees,
    irregular_matrix,
    not_simple,
    not_zero_simple,
    iso_check_failed,
    not_inverse,
    not_square,
    is_group_case,
    k_too_small,
    trivial_group,
    not_minimal_index,
    not_a_group,
    order_cap_exceeded,
    no_identity,
    parse_error,
    invalid_argument,
    internal
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg),
          _code(code),
          _detail(msg) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

    //! The message without the code prefix.
    [[nodiscard]] std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorCode   _code;
    std::string _detail;
  };

  [[noreturn]] inline void fail(ErrorCode code, std::string const& msg) {
    throw Error(code, msg);
  }

}  // namespace semicover

#endif  // SEMICOVER_ERROR_HPP_
