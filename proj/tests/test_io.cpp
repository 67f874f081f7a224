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

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "semicover/error.hpp"
#include "semicover/groups.hpp"
#include "semicover/io.hpp"
#include "testkit.hpp"

using namespace semicover;

namespace {
  constexpr char const* pair_text = "cayley\n3\n0 2 2\n2 1 2\n2 2 2\n";
  constexpr char const* b2_text      = "rees0\nK 2\nL 2\ngroup cyclic 1\nmatrix\ne .\n. e\n";

  Error error_of(std::string_view text) {
    try {
      parse_semigroup(text);
    } catch (Error const& e) {
      return e;
    }
    FAIL("no error for: " << text);
    return Error(ErrorCode::internal, "");
  }

  std::string cert_for(FiniteSemigroup const& s, Sigma which) {
    return result_json(s, compute_sigma(s, which));
  }
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parses the three reference documents") {
    CHECK(parse_semigroup(pair_text) == testkit::idempotent_pair());
    CHECK(parse_semigroup(b2_text) == testkit::brandt(2, "C1").semigroup);
    auto const c2 = parse_semigroup("transformations\npoints 2\n1 0\n");
    CHECK(c2.size() == 2);
    CHECK(structure_flags(c2).is_group);
  }

  TEST_CASE("comments, blank lines and other group forms") {
    auto const s = parse_semigroup("# leading\n\ncayley # format\n2\n0 1 # row\n1 0\n");
    CHECK(s == cyclic_group(2));
    CHECK(parse_semigroup("group_ref\nA4\n").size() == 12);
    auto const inline_group =
        parse_semigroup("rees0\nK 1\nL 1\ngroup cayley 2\n0 1\n1 0\nmatrix\n1\n");
    CHECK(inline_group.size() == 3);
    auto const catalog = parse_semigroup("rees\nK 1\nL 1\ngroup S3\nmatrix\ne\n");
    CHECK(structure_flags(catalog).is_group);
    auto const i2 = parse_semigroup("transformations\npoints 2\n1 0\n0 -\n");
    CHECK(i2.size() == 7);
  }

  TEST_CASE("syntax errors carry line and column") {
    auto e = error_of("cayley\n2\n0 x\n0 0\n");
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(std::string(e.what()).find("line 3, col 3: expected an integer entry, found 'x'")
          != std::string::npos);

    e = error_of("cayley\n2\n0 0\n");
    CHECK(std::string(e.what()).find("found end of input") != std::string::npos);

    e = error_of("tables\n1\n0\n");
    CHECK(std::string(e.what()).find("line 1, col 1") != std::string::npos);

    e = error_of("rees0\nK 2\nL 1\ngroup cyclic 1\nmatrix\ne e e\n");
    CHECK(std::string(e.what()).find("line 6, col 5") != std::string::npos);

    e = error_of("cayley\n1\n0\n0\n");
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }

  TEST_CASE("semantic errors keep their codes") {
    CHECK(error_of("cayley\n2\n1 0\n0 0\n").code() == ErrorCode::not_associative);
    CHECK(error_of("cayley\n2\n0 2\n0 0\n").code() == ErrorCode::out_of_range);
    CHECK(error_of("transformations\npoints 2\n0 2\n").code() == ErrorCode::bad_image);
    CHECK(error_of("rees0\nK 2\nL 2\ngroup cyclic 1\nmatrix\ne .\n. .\n").code()
          == ErrorCode::irregular_matrix);
    CHECK(error_of("rees\nK 1\nL 1\ngroup cyclic 1\nmatrix\n.\n").code()
          == ErrorCode::zero_entry_in_plain_rees);
    CHECK(error_of("group_ref\nM11\n").code() == ErrorCode::invalid_argument);
    auto const e = error_of("rees\nK 1\nL 1\ngroup cayley 2\n0 0\n0 0\nmatrix\ne\n");
    CHECK(e.code() == ErrorCode::not_a_group);
    CHECK(std::string(e.what()).find("rees: ") != std::string::npos);
  }

  TEST_CASE("emit round trips") {
    for (auto const* text :
         {pair_text, b2_text, "transformations\npoints 3\n1 - 2\n0 0 0\n",
          "rees\nK 2\nL 1\ngroup V4\nmatrix\n1 e\n", "rees0\nK 1\nL 1\ngroup cayley 1\n0\nmatrix\n0\n",
          "group_ref\nQ8\n"}) {
      auto const doc     = parse_document(text);
      auto const emitted = emit(doc);
      CHECK(parse_document(emitted) == doc);
      CHECK(emit(parse_document(emitted)) == emitted);
    }
    CHECK(emit(parse_document("# c\ncayley\n2\n0  0\n0 0 # x\n")) == "cayley\n2\n0 0\n0 0\n");
  }

  TEST_CASE("result JSON golden for the idempotent pair") {
    auto const s = testkit::idempotent_pair();
    auto const j = nlohmann::json::parse(cert_for(s, Sigma::s));
    CHECK(j["value"] == 2);
    CHECK(j["case"] == "max_class_not_generating");
    CHECK(j["parts"] == nlohmann::json::parse("[[0,2],[1,2]]"));
    CHECK(j["provenance"] == "classifier");
    CHECK(j["carrier_digest"] == carrier_digest(s));
    CHECK_FALSE(j.contains("witness"));
    auto const text = cert_for(s, Sigma::s);
    CHECK(text.rfind("{\"value\":2,\"case\":\"max_class_not_generating\",\"parts\":[[0,2],[1,2]]", 0)
          == 0);
    CHECK(nlohmann::json::parse(cert_for(s, Sigma::g))["value"] == 3);
  }

  TEST_CASE("analyze JSON") {
    auto const j = nlohmann::json::parse(analyze_json(testkit::brandt(2, "C1").semigroup));
    CHECK(j["order"] == 5);
    CHECK(j["zero"] == 0);
    CHECK(j["identity"].is_null());
    CHECK(j["is_inverse"] == true);
    CHECK(j["idempotents"] == nlohmann::json::parse("[0,1,4]"));
    CHECK(j["j_classes"].size() == 2);
  }

  TEST_CASE("verify_certificate") {
    auto const s    = testkit::idempotent_pair();
    auto const cert = cert_for(s, Sigma::s);
    CHECK(verify_certificate(s, Sigma::s, cert).ok);
    CHECK_FALSE(verify_certificate(s, Sigma::g, cert).ok);

    auto tampered        = nlohmann::json::parse(cert);
    tampered["parts"][0] = nlohmann::json::parse("[0,1]");
    CHECK_FALSE(verify_certificate(s, Sigma::s, tampered.dump()).ok);

    auto const other = verify_certificate(build_null(3), Sigma::s, cert);
    CHECK_FALSE(other.ok);
    CHECK(other.violation.find("digest") != std::string::npos);

    auto const b2   = testkit::brandt(2, "C1").semigroup;
    auto const inf  = cert_for(b2, Sigma::i);
    CHECK(verify_certificate(b2, Sigma::i, inf).ok);
    auto bad_witness       = nlohmann::json::parse(inf);
    bad_witness["witness"] = 0;
    CHECK_FALSE(verify_certificate(b2, Sigma::i, bad_witness.dump()).ok);

    CHECK_THROWS_AS(verify_certificate(s, Sigma::s, "{not json"), Error);
    CHECK_THROWS_AS(verify_certificate(testkit::left_zero(2), Sigma::i, cert), Error);
  }

  TEST_CASE("census over a scratch directory") {
    namespace fs = std::filesystem;
    fs::path const dir = fs::temp_directory_path() / "semicover_io_census";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto put = [&](char const* name, std::string const& text) { std::ofstream(dir / name) << text; };
    put("a.sg", pair_text);
    put("b.sg", b2_text);
    put("c.sg", "group_ref\nC3\n");
    put("d.sg", "cayley\n2\n1 0\n0 0\n");
    auto const c = run_census(dir, Sigma::s);
    REQUIRE(c.entries.size() == 4);
    CHECK(c.entries[0].file == "a.sg");
    CHECK(c.entries[2].monogenic);
    CHECK_FALSE(c.entries[3].value);
    auto const j = nlohmann::json::parse(census_json(c));
    CHECK(j["total"] == 4);
    CHECK(j["histogram"] == nlohmann::json::parse(R"({"2":2,"infinite":1,"error":1})"));
    fs::remove_all(dir);
  }
}
