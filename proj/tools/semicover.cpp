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

// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semicover/semicover.h"

namespace {

  enum Exit { ok = 0, internal = 1, verify_failed = 2, input_error = 3, cap_exceeded = 4 };

  int exit_code(sc_status s) {
    switch (s) {
      case SC_OK: return ok;
      case SC_ERR_VERIFY_FAILED: return verify_failed;
      case SC_ERR_CAP_EXCEEDED: return cap_exceeded;
      case SC_ERR_INTERNAL: return internal;
      default: return input_error;
    }
  }

  struct Semigroup {
    sc_semigroup* handle = nullptr;
    ~Semigroup() {
      sc_semigroup_free(handle);
    }
  };

  bool read_file(std::string const& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      return false;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
  }

  int report(std::string const& what, sc_status s) {
    std::cerr << "semicover: " << what << ": " << sc_last_error() << '\n';
    return exit_code(s);
  }

  // Prints the JSON document and frees it.
  void emit(char* json) {
    std::cout << json << '\n';
    sc_string_free(json);
  }

  int load(std::string const& path, Semigroup& g) {
    std::string text;
    if (!read_file(path, text)) {
      std::cerr << "semicover: " << path << ": cannot read file\n";
      return input_error;
    }
    sc_status const s = sc_semigroup_parse(text.c_str(), &g.handle);
    return s == SC_OK ? ok : report(path, s);
  }

  template <typename F>
  int for_each_file(std::vector<std::string> const& files, F&& f) {
    int worst = ok;
    for (auto const& path : files) {
      Semigroup g;
      int       code = load(path, g);
      if (code == ok) {
        char*     json = nullptr;
        sc_status s    = f(g.handle, &json);
        code           = s == SC_OK ? (emit(json), ok) : report(path, s);
      }
      worst = std::max(worst, code);
    }
    return worst;
  }

  std::map<std::string, sc_kind> const kinds{{"s", SC_KIND_S},
                                             {"i", SC_KIND_I},
                                             {"m", SC_KIND_M},
                                             {"mstar", SC_KIND_MSTAR},
                                             {"g", SC_KIND_G}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering numbers of finite semigroups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sc_version());

  sc_kind                  kind = SC_KIND_S;
  std::vector<std::string> files;
  bool                     json_flag = false;
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", kind, "covering number: s, i, m, mstar or g")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", json_flag, "emit JSON (the default output format)");
  };

  auto* analyze = app.add_subcommand("analyze", "structure flags and Green's classes");
  analyze->add_option("files", files, "input files")->required()->check(CLI::ExistingFile);
  add_json(analyze);

  auto* cover = app.add_subcommand("cover", "covering number with a certificate");
  add_kind(cover);
  add_json(cover);
  cover->add_option("files", files, "input files")->required()->check(CLI::ExistingFile);

  std::string carrier, certificate;
  auto*       verify = app.add_subcommand("verify", "re-check a certificate against a carrier");
  add_kind(verify);
  add_json(verify);
  verify->add_option("carrier", carrier, "input file")->required()->check(CLI::ExistingFile);
  verify->add_option("certificate", certificate, "certificate JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  std::size_t cap         = 0;
  bool        allow_large = false;
  auto*       oracle      = app.add_subcommand("oracle", "exhaustive search for the covering number");
  add_kind(oracle);
  add_json(oracle);
  oracle->add_option("--cap", cap, "largest order to search (default 16, at most 24)");
  oracle->add_flag("--allow-large", allow_large, "permit caps above 16");
  oracle->add_option("files", files, "input files")->required()->check(CLI::ExistingFile);

  std::string dir;
  auto*       census = app.add_subcommand("census", "tabulate covering numbers over a directory");
  add_kind(census);
  add_json(census);
  census->add_option("--dir,dir", dir, "directory of input files")
      ->required()
      ->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  if (analyze->parsed()) {
    return for_each_file(files, [](sc_semigroup* s, char** out) { return sc_analyze(s, out); });
  }
  if (cover->parsed()) {
    return for_each_file(files, [&](sc_semigroup* s, char** out) { return sc_cover(s, kind, out); });
  }
  if (oracle->parsed()) {
    return for_each_file(files, [&](sc_semigroup* s, char** out) {
      return sc_oracle(s, kind, cap, allow_large ? 1 : 0, out);
    });
  }
  if (census->parsed()) {
    char*           json = nullptr;
    sc_status const s    = sc_census(dir.c_str(), kind, &json);
    if (s != SC_OK) {
      return report(dir, s);
    }
    emit(json);
    return ok;
  }
  // verify
  Semigroup g;
  if (int code = load(carrier, g); code != ok) {
    return code;
  }
  std::string cert;
  if (!read_file(certificate, cert)) {
    std::cerr << "semicover: " << certificate << ": cannot read file\n";
    return input_error;
  }
  char*           verdict = nullptr;
  sc_status const s       = sc_verify(g.handle, kind, cert.c_str(), &verdict);
  if (verdict != nullptr) {
    emit(verdict);
  }
  return s == SC_OK ? ok : report(certificate, s);
}
