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

// Exercises the shared library through its C interface only.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "semicover/semicover.h"

namespace {
  struct Handle {
    sc_semigroup* s = nullptr;
    ~Handle() {
      sc_semigroup_free(s);
    }
  };

  std::string take(char* p) {
    std::string out = p == nullptr ? "" : p;
    sc_string_free(p);
    return out;
  }

  std::string read(std::filesystem::path const& p) {
    std::ifstream     in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  constexpr char const* pair_text = "cayley\n3\n0 2 2\n2 1 2\n2 2 2\n";
  constexpr char const* b2_text      = "rees0\nK 2\nL 2\ngroup cyclic 1\nmatrix\ne .\n. e\n";
}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and null arguments") {
    CHECK(std::string(sc_version()) == "1.0.0");
    CHECK(sc_semigroup_parse(nullptr, nullptr) == SC_ERR_NULL_ARGUMENT);
    CHECK(sc_cover(nullptr, SC_KIND_S, nullptr) == SC_ERR_NULL_ARGUMENT);
    CHECK(sc_semigroup_order(nullptr) == 0);
    sc_semigroup_free(nullptr);
    sc_string_free(nullptr);
  }

  TEST_CASE("parse, inspect and emit") {
    Handle h;
    REQUIRE(sc_semigroup_parse(pair_text, &h.s) == SC_OK);
    CHECK(sc_semigroup_order(h.s) == 3);
    CHECK(sc_semigroup_product(h.s, 0, 1) == 2);
    CHECK(sc_semigroup_product(h.s, 3, 0) == UINT32_MAX);
    char* text = nullptr;
    REQUIRE(sc_semigroup_emit(h.s, &text) == SC_OK);
    CHECK(take(text) == pair_text);
  }

  TEST_CASE("tables") {
    std::uint32_t const good[] = {0, 0, 0, 1};
    Handle              h;
    REQUIRE(sc_semigroup_from_table(2, good, &h.s) == SC_OK);
    char* text = nullptr;
    REQUIRE(sc_semigroup_emit(h.s, &text) == SC_OK);
    CHECK(take(text).empty());

    std::uint32_t const bad[] = {1, 0, 0, 0};
    sc_semigroup*       s     = nullptr;
    CHECK(sc_semigroup_from_table(2, bad, &s) == SC_ERR_INVALID_INPUT);
    CHECK(s == nullptr);
    CHECK(std::string(sc_last_error()).find("NotAssociative") != std::string::npos);
  }

  TEST_CASE("parse errors") {
    sc_semigroup* s = nullptr;
    CHECK(sc_semigroup_parse("cayley\n2\n0 x\n0 0\n", &s) == SC_ERR_PARSE);
    CHECK(std::string(sc_last_error()).find("line 3, col 3") != std::string::npos);
    CHECK(sc_semigroup_parse("cayley\n2\n1 0\n0 0\n", &s) == SC_ERR_INVALID_INPUT);
  }

  TEST_CASE("cover, verify and tamper") {
    Handle h;
    REQUIRE(sc_semigroup_parse(pair_text, &h.s) == SC_OK);
    char* out = nullptr;
    REQUIRE(sc_cover(h.s, SC_KIND_S, &out) == SC_OK);
    auto const cert = take(out);
    auto       j    = nlohmann::json::parse(cert);
    CHECK(j["value"] == 2);
    CHECK(j["parts"] == nlohmann::json::parse("[[0,2],[1,2]]"));

    char* report = nullptr;
    CHECK(sc_verify(h.s, SC_KIND_S, cert.c_str(), &report) == SC_OK);
    CHECK(nlohmann::json::parse(take(report))["ok"] == true);

    j["parts"][1] = nlohmann::json::parse("[0,1]");
    CHECK(sc_verify(h.s, SC_KIND_S, j.dump().c_str(), &report) == SC_ERR_VERIFY_FAILED);
    auto const r = nlohmann::json::parse(take(report));
    CHECK(r["ok"] == false);
    CHECK(r["violation"].get<std::string>().find("product") != std::string::npos);

    CHECK(sc_verify(h.s, SC_KIND_S, "[1,2", &report) == SC_ERR_PARSE);

    REQUIRE(sc_cover(h.s, SC_KIND_G, &out) == SC_OK);
    CHECK(nlohmann::json::parse(take(out))["value"] == 3);
    CHECK(sc_cover(h.s, SC_KIND_M, &out) == SC_ERR_NOT_APPLICABLE);

    Handle lz;
    REQUIRE(sc_semigroup_parse("cayley\n2\n0 0\n1 1\n", &lz.s) == SC_OK);
    CHECK(sc_cover(lz.s, SC_KIND_I, &out) == SC_ERR_NOT_APPLICABLE);
  }

  TEST_CASE("oracle caps") {
    Handle h;
    REQUIRE(sc_semigroup_parse(b2_text, &h.s) == SC_OK);
    char* out = nullptr;
    REQUIRE(sc_oracle(h.s, SC_KIND_I, 0, 0, &out) == SC_OK);
    auto const j = nlohmann::json::parse(take(out));
    CHECK(j["value"] == "infinite");
    CHECK(j["witness"] == 2);
    CHECK(j["provenance"] == "oracle");

    Handle big;
    REQUIRE(sc_semigroup_parse("group_ref\nS4\n", &big.s) == SC_OK);
    CHECK(sc_oracle(big.s, SC_KIND_G, 0, 0, &out) == SC_ERR_CAP_EXCEEDED);
    CHECK(sc_oracle(big.s, SC_KIND_G, 20, 0, &out) == SC_ERR_INVALID_INPUT);
    CHECK(sc_oracle(big.s, SC_KIND_G, 30, 1, &out) == SC_ERR_INVALID_INPUT);
  }

  TEST_CASE("analyze") {
    Handle h;
    REQUIRE(sc_semigroup_parse(b2_text, &h.s) == SC_OK);
    char* out = nullptr;
    REQUIRE(sc_analyze(h.s, &out) == SC_OK);
    auto const j = nlohmann::json::parse(take(out));
    CHECK(j["order"] == 5);
    CHECK(j["is_inverse"] == true);
  }

  TEST_CASE("every shipped input covers and verifies") {
    std::size_t files = 0;
    for (auto const& entry : std::filesystem::directory_iterator(SEMICOVER_CORPUS_DIR)) {
      Handle h;
      REQUIRE_MESSAGE(sc_semigroup_parse(read(entry.path()).c_str(), &h.s) == SC_OK,
                      entry.path().string());
      for (auto kind : {SC_KIND_S, SC_KIND_I, SC_KIND_M, SC_KIND_MSTAR, SC_KIND_G}) {
        char*           out = nullptr;
        sc_status const st  = sc_cover(h.s, kind, &out);
        if (st == SC_ERR_NOT_APPLICABLE) {
          continue;
        }
        REQUIRE_MESSAGE(st == SC_OK, entry.path().string(), ": ", sc_last_error());
        auto const cert = take(out);
        CHECK_MESSAGE(sc_verify(h.s, kind, cert.c_str(), nullptr) == SC_OK,
                      entry.path().string(), " kind ", static_cast<int>(kind), ": ", sc_last_error());
      }
      ++files;
    }
    CHECK(files >= 30);
  }

  TEST_CASE("census") {
    char* out = nullptr;
    REQUIRE(sc_census(SEMICOVER_CORPUS_DIR, SC_KIND_S, &out) == SC_OK);
    auto const  j     = nlohmann::json::parse(take(out));
    std::size_t total = 0;
    for (auto const& [k, v] : j["histogram"].items()) {
      total += v.get<std::size_t>();
    }
    CHECK(total == j["total"].get<std::size_t>());
    CHECK(sc_census("/nonexistent/dir", SC_KIND_S, &out) == SC_ERR_INVALID_INPUT);
  }
}
