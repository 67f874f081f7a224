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

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "json.hpp"
#include "semicover/error.hpp"
#include "semicover/io.hpp"
#include "semicover/oracle.hpp"
#include "semicover/semicover.h"

struct sc_semigroup {
  semicover::FiniteSemigroup               semigroup;
  std::optional<semicover::InputDocument> document;
};

namespace {
  thread_local std::string last_error;

  sc_status set_error(sc_status status, std::string msg) {
    last_error = std::move(msg);
    return status;
  }

  sc_status status_of(semicover::ErrorCode code) {
    using semicover::ErrorCode;
    switch (code) {
      case ErrorCode::parse_error: return SC_ERR_PARSE;
      case ErrorCode::order_cap_exceeded: return SC_ERR_CAP_EXCEEDED;
      case ErrorCode::not_inverse:
      case ErrorCode::no_identity: return SC_ERR_NOT_APPLICABLE;
      case ErrorCode::internal:
      case ErrorCode::iso_check_failed: return SC_ERR_INTERNAL;
      default: return SC_ERR_INVALID_INPUT;
    }
  }

  // Runs f, translating exceptions into a status and last_error.
  template <typename F>
  sc_status guarded(F&& f) {
    try {
      last_error.clear();
      return f();
    } catch (semicover::Error const& e) {
      return set_error(status_of(e.code()), e.what());
    } catch (std::bad_alloc const&) {
      return set_error(SC_ERR_INTERNAL, "out of memory");
    } catch (std::exception const& e) {
      return set_error(SC_ERR_INTERNAL, e.what());
    }
  }

  char* copy_out(std::string const& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  semicover::Sigma sigma_of(sc_kind kind) {
    switch (kind) {
      case SC_KIND_S: return semicover::Sigma::s;
      case SC_KIND_I: return semicover::Sigma::i;
      case SC_KIND_M: return semicover::Sigma::m;
      case SC_KIND_MSTAR: return semicover::Sigma::m_star;
      case SC_KIND_G: return semicover::Sigma::g;
    }
    semicover::fail(semicover::ErrorCode::invalid_argument, "unknown kind");
  }
}  // namespace

extern "C" {

const char* sc_version(void) {
  return "1.0.0";
}

const char* sc_last_error(void) {
  return last_error.c_str();
}

void sc_string_free(char* s) {
  std::free(s);
}

sc_status sc_semigroup_parse(const char* text, sc_semigroup** out) {
  if (text == nullptr || out == nullptr) {
    return set_error(SC_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    auto doc = semicover::parse_document(text);
    auto s   = semicover::build(doc);
    *out     = new sc_semigroup{std::move(s), std::move(doc)};
    return SC_OK;
  });
}

sc_status sc_semigroup_from_table(size_t n, const uint32_t* table, sc_semigroup** out) {
  if (table == nullptr || out == nullptr) {
    return set_error(SC_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::vector<std::vector<std::int64_t>> raw(n, std::vector<std::int64_t>(n));
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        raw[a][b] = table[a * n + b];
      }
    }
    *out = new sc_semigroup{semicover::validate_table(raw), std::nullopt};
    return SC_OK;
  });
}

void sc_semigroup_free(sc_semigroup* s) {
  delete s;
}

size_t sc_semigroup_order(const sc_semigroup* s) {
  return s == nullptr ? 0 : s->semigroup.size();
}

uint32_t sc_semigroup_product(const sc_semigroup* s, uint32_t a, uint32_t b) {
  if (s == nullptr || a >= s->semigroup.size() || b >= s->semigroup.size()) {
    return UINT32_MAX;
  }
  return s->semigroup.product(a, b);
}

sc_status sc_semigroup_emit(const sc_semigroup* s, char** out) {
  if (s == nullptr || out == nullptr) {
    return set_error(SC_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = copy_out(s->document ? semicover::emit(*s->document) : std::string());
    return SC_OK;
  });
}

sc_status sc_analyze(const sc_semigroup* s, char** json_out) {
  if (s == nullptr || json_out == nullptr) {
    return set_error(SC_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *json_out = copy_out(semicover::analyze_json(s->semigroup));
    return SC_OK;
  });
}

sc_status sc_cover(const sc_semigroup* s, sc_kind kind, char** json_out) {
  if (s == nullptr || json_out == nullptr) {
    return set_error(SC_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto const r = semicover::compute_sigma(s->semigroup, sigma_of(kind));
    *json_out    = copy_out(semicover::result_json(s->semigroup, r));
    return SC_OK;
  });
}

sc_status sc_oracle(const sc_semigroup* s,
                    sc_kind             kind,
                    size_t              cap,
                    int                 allow_large,
                    char**              json_out) {
  if (s == nullptr || json_out == nullptr) {
    return set_error(SC_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    if (cap == 0) {
      cap = semicover::default_oracle_cap;
    }
    if (cap > semicover::default_oracle_cap && allow_large == 0) {
      return set_error(SC_ERR_INVALID_INPUT,
                       "caps above " + std::to_string(semicover::default_oracle_cap)
                           + " need the large-search override");
    }
    auto const flags = semicover::structure_flags(s->semigroup);
    auto const r     = semicover::minimal_cover_exact(
        s->semigroup, flags, semicover::kind_of(sigma_of(kind)), cap);
    *json_out = copy_out(semicover::result_json(s->semigroup, r));
    return SC_OK;
  });
}

sc_status sc_verify(const sc_semigroup* s,
                    sc_kind             kind,
                    const char*         certificate_json,
                    char**              report_out) {
  if (s == nullptr || certificate_json == nullptr) {
    return set_error(SC_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto const     v = semicover::verify_certificate(s->semigroup, sigma_of(kind), certificate_json);
    nlohmann::ordered_json report;
    report["ok"] = v.ok;
    if (!v.ok) {
      report["violation"] = v.violation;
      if (v.part) {
        report["part"] = *v.part;
      }
    }
    if (report_out != nullptr) {
      *report_out = copy_out(report.dump());
    }
    return v.ok ? SC_OK : set_error(SC_ERR_VERIFY_FAILED, v.violation);
  });
}

sc_status sc_census(const char* dir, sc_kind kind, char** json_out) {
  if (dir == nullptr || json_out == nullptr) {
    return set_error(SC_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto const c = semicover::run_census(dir, sigma_of(kind));
    *json_out    = copy_out(semicover::census_json(c));
    return SC_OK;
  });
}

}  // extern "C"
