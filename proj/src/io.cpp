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

#include "semicover/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "semicover/error.hpp"
#include "semicover/greens.hpp"
#include "semicover/groups.hpp"
#include "semicover/rees.hpp"

namespace semicover {

  using ordered_json = nlohmann::ordered_json;

  ////////////////////////////////////////////////////////////////////////
  // Tokenizer and parser
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Token {
      std::string text;
      std::size_t col = 1;
    };

    struct Line {
      std::size_t        number = 0;
      std::vector<Token> tokens;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
          if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') {
            ++j;
          }
          line.tokens.push_back(Token{std::string(raw.substr(i, j - i)), i + 1});
          i = j;
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
        pos = end + 1;
      }
      return lines;
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : _lines(tokenize(text)) {
        std::size_t n = 1;
        for (char c : text) {
          n += c == '\n' ? 1 : 0;
        }
        _end_line = n;
      }

      InputDocument document() {
        Line const& head = next_line("a format name");
        expect_count(head, 1, "a format name alone on its line");
        auto const& word = head.tokens[0];
        InputDocument doc;
        if (word.text == "cayley") {
          doc.format  = Format::cayley;
          doc.payload = CayleyPayload{table_body()};
        } else if (word.text == "transformations") {
          doc.format  = Format::transformations;
          doc.payload = transformations_body();
        } else if (word.text == "rees" || word.text == "rees0") {
          doc.format  = word.text == "rees" ? Format::rees : Format::rees0;
          doc.payload = rees_body();
        } else if (word.text == "group_ref") {
          doc.format   = Format::group_ref;
          Line const& l = next_line("a group name");
          expect_count(l, 1, "a single group name");
          doc.payload = GroupRefPayload{l.tokens[0].text};
        } else {
          error(head.number, word.col,
                "one of cayley, transformations, rees, rees0, group_ref", word.text);
        }
        if (_at < _lines.size()) {
          auto const& l = _lines[_at];
          error(l.number, l.tokens[0].col, "end of input", l.tokens[0].text);
        }
        return doc;
      }

     private:
      [[noreturn]] void error(std::size_t      line,
                              std::size_t      col,
                              std::string_view expected,
                              std::string_view found) const {
        fail(ErrorCode::parse_error,
             "line " + std::to_string(line) + ", col " + std::to_string(col) + ": expected "
                 + std::string(expected) + ", found "
                 + (found.empty() ? std::string("end of input") : "'" + std::string(found) + "'"));
      }

      Line const& next_line(std::string_view expected) {
        if (_at >= _lines.size()) {
          error(_end_line, 1, expected, "");
        }
        return _lines[_at++];
      }

      void expect_count(Line const& l, std::size_t n, std::string_view expected) const {
        if (l.tokens.size() < n) {
          std::size_t const col =
              l.tokens.back().col + l.tokens.back().text.size() + 1;
          error(l.number, col, expected, "");
        }
        if (l.tokens.size() > n) {
          error(l.number, l.tokens[n].col, expected, l.tokens[n].text);
        }
      }

      std::int64_t integer(Line const& l, std::size_t i, std::string_view expected) const {
        auto const&  t = l.tokens[i];
        std::int64_t v = 0;
        auto [p, ec]   = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size()) {
          error(l.number, t.col, expected, t.text);
        }
        return v;
      }

      std::size_t count(Line const& l, std::size_t i, std::string_view expected) const {
        auto const v = integer(l, i, expected);
        if (v < 1) {
          error(l.number, l.tokens[i].col, expected, l.tokens[i].text);
        }
        return static_cast<std::size_t>(v);
      }

      std::size_t keyword_count(std::string_view key) {
        Line const& l = next_line(std::string(key) + " followed by a count");
        if (l.tokens[0].text != key) {
          error(l.number, l.tokens[0].col, key, l.tokens[0].text);
        }
        expect_count(l, 2, std::string(key) + " followed by a count");
        return count(l, 1, "a positive count");
      }

      std::vector<std::vector<std::int64_t>> table_body() {
        Line const& head = next_line("the order");
        expect_count(head, 1, "the order alone on its line");
        return table_rows(count(head, 0, "a positive order"));
      }

      std::vector<std::vector<std::int64_t>> table_rows(std::size_t n) {
        std::vector<std::vector<std::int64_t>> rows;
        for (std::size_t r = 0; r < n; ++r) {
          Line const& l = next_line("a table row of " + std::to_string(n) + " entries");
          expect_count(l, n, "a table row of " + std::to_string(n) + " entries");
          std::vector<std::int64_t> row;
          for (std::size_t i = 0; i < n; ++i) {
            row.push_back(integer(l, i, "an integer entry"));
          }
          rows.push_back(std::move(row));
        }
        return rows;
      }

      TransformationsPayload transformations_body() {
        TransformationsPayload p;
        p.points = keyword_count("points");
        std::string const row = "a generator row of " + std::to_string(p.points) + " images";
        next_line(row);
        --_at;
        while (_at < _lines.size()) {
          Line const& l = _lines[_at++];
          expect_count(l, p.points, row);
          std::vector<std::uint32_t> gen;
          for (std::size_t i = 0; i < p.points; ++i) {
            if (l.tokens[i].text == "-") {
              gen.push_back(undefined_point);
            } else {
              auto const v = integer(l, i, "an image point or '-'");
              if (v < 0) {
                error(l.number, l.tokens[i].col, "an image point or '-'", l.tokens[i].text);
              }
              gen.push_back(static_cast<std::uint32_t>(v));
            }
          }
          p.gens.push_back(std::move(gen));
        }
        return p;
      }

      ReesPayload rees_body() {
        ReesPayload p;
        p.k_size      = keyword_count("K");
        p.lambda_size = keyword_count("L");

        Line const& g = next_line("a group line");
        if (g.tokens[0].text != "group") {
          error(g.number, g.tokens[0].col, "group", g.tokens[0].text);
        }
        if (g.tokens.size() < 2) {
          error(g.number, g.tokens[0].col + 6, "cyclic, cayley or a catalog group name", "");
        }
        auto const& form = g.tokens[1].text;
        if (form == "cyclic") {
          expect_count(g, 3, "cyclic followed by an order");
          p.group.form  = GroupSpec::Form::cyclic;
          p.group.order = count(g, 2, "a positive group order");
        } else if (form == "cayley") {
          expect_count(g, 3, "cayley followed by an order");
          p.group.form  = GroupSpec::Form::cayley;
          p.group.order = count(g, 2, "a positive group order");
          p.group.table = table_rows(p.group.order);
        } else {
          expect_count(g, 2, "a catalog group name");
          p.group.form = GroupSpec::Form::catalog;
          p.group.name = form;
        }

        Line const& m = next_line("matrix");
        expect_count(m, 1, "matrix alone on its line");
        if (m.tokens[0].text != "matrix") {
          error(m.number, m.tokens[0].col, "matrix", m.tokens[0].text);
        }
        std::string const row = "a matrix row of " + std::to_string(p.k_size) + " entries";
        for (std::size_t r = 0; r < p.lambda_size; ++r) {
          Line const& l = next_line(row);
          expect_count(l, p.k_size, row);
          std::vector<MatrixToken> tokens;
          for (std::size_t i = 0; i < p.k_size; ++i) {
            auto const& t = l.tokens[i].text;
            if (t == ".") {
              tokens.push_back(MatrixToken{MatrixToken::Form::zero, 0});
            } else if (t == "e") {
              tokens.push_back(MatrixToken{MatrixToken::Form::identity, 0});
            } else {
              auto const v = integer(l, i, "a group element, 'e' or '.'");
              if (v < 0) {
                error(l.number, l.tokens[i].col, "a group element, 'e' or '.'", t);
              }
              tokens.push_back(MatrixToken{MatrixToken::Form::index, static_cast<std::uint32_t>(v)});
            }
          }
          p.matrix.push_back(std::move(tokens));
        }
        return p;
      }

      std::vector<Line> _lines;
      std::size_t       _at       = 0;
      std::size_t       _end_line = 1;
    };

    std::string_view format_name(Format f) {
      switch (f) {
        case Format::cayley: return "cayley";
        case Format::transformations: return "transformations";
        case Format::rees: return "rees";
        case Format::rees0: return "rees0";
        case Format::group_ref: return "group_ref";
      }
      return "unknown";
    }

    FiniteSemigroup named_group(std::string const& name) {
      auto g = catalog_group(name);
      if (!g) {
        std::string known;
        for (auto const& n : catalog_names()) {
          known += (known.empty() ? "" : ", ") + n;
        }
        fail(ErrorCode::invalid_argument, "unknown group '" + name + "' (known: " + known + ")");
      }
      return *g;
    }

    FiniteSemigroup build_group(GroupSpec const& spec) {
      switch (spec.form) {
        case GroupSpec::Form::cyclic: return cyclic_group(spec.order);
        case GroupSpec::Form::catalog: return named_group(spec.name);
        case GroupSpec::Form::cayley: return validate_table(spec.table);
      }
      fail(ErrorCode::internal, "unknown group form");
    }

    FiniteSemigroup build_rees_payload(ReesPayload const& p, bool zero) {
      auto const group    = build_group(p.group);
      auto const identity = find_identity(group);
      if (!identity) {
        fail(ErrorCode::not_a_group, "the structure group has no identity");
      }
      SandwichMatrix m;
      for (auto const& row : p.matrix) {
        std::vector<SandwichEntry> entries;
        for (auto const& t : row) {
          switch (t.form) {
            case MatrixToken::Form::zero: entries.emplace_back(std::nullopt); break;
            case MatrixToken::Form::identity: entries.emplace_back(*identity); break;
            case MatrixToken::Form::index: entries.emplace_back(t.index); break;
          }
        }
        m.push_back(std::move(entries));
      }
      return zero ? build_rees0(p.k_size, group, p.lambda_size, m).semigroup
                  : build_rees(p.k_size, group, p.lambda_size, m).semigroup;
    }

    FiniteSemigroup build_unchecked(InputDocument const& doc) {
      switch (doc.format) {
        case Format::cayley: return validate_table(std::get<CayleyPayload>(doc.payload).table);
        case Format::transformations: {
          auto const& p = std::get<TransformationsPayload>(doc.payload);
          return transformation_closure(p.points, p.gens).semigroup;
        }
        case Format::rees:
        case Format::rees0:
          return build_rees_payload(std::get<ReesPayload>(doc.payload),
                                    doc.format == Format::rees0);
        case Format::group_ref:
          return named_group(std::get<GroupRefPayload>(doc.payload).name);
      }
      fail(ErrorCode::internal, "unknown format");
    }
  }  // namespace

  InputDocument parse_document(std::string_view text) {
    return Parser(text).document();
  }

  FiniteSemigroup build(InputDocument const& doc) {
    try {
      auto s = build_unchecked(doc);
      if (auto t = first_non_associative_triple(s)) {
        fail(ErrorCode::not_associative,
             "(" + std::to_string((*t)[0]) + "*" + std::to_string((*t)[1]) + ")*"
                 + std::to_string((*t)[2]) + " differs from the other bracketing");
      }
      return s;
    } catch (Error const& e) {
      throw Error(e.code(), std::string(format_name(doc.format)) + ": " + e.detail());
    }
  }

  FiniteSemigroup parse_semigroup(std::string_view text) {
    return build(parse_document(text));
  }

  ////////////////////////////////////////////////////////////////////////
  // Emitter
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void emit_rows(std::ostringstream& out, std::vector<std::vector<std::int64_t>> const& rows) {
      for (auto const& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? " " : "") << row[i];
        }
        out << '\n';
      }
    }
  }  // namespace

  std::string emit(InputDocument const& doc) {
    std::ostringstream out;
    out << format_name(doc.format) << '\n';
    switch (doc.format) {
      case Format::cayley: {
        auto const& p = std::get<CayleyPayload>(doc.payload);
        out << p.table.size() << '\n';
        emit_rows(out, p.table);
        break;
      }
      case Format::transformations: {
        auto const& p = std::get<TransformationsPayload>(doc.payload);
        out << "points " << p.points << '\n';
        for (auto const& g : p.gens) {
          for (std::size_t i = 0; i < g.size(); ++i) {
            out << (i ? " " : "");
            if (g[i] == undefined_point) {
              out << '-';
            } else {
              out << g[i];
            }
          }
          out << '\n';
        }
        break;
      }
      case Format::rees:
      case Format::rees0: {
        auto const& p = std::get<ReesPayload>(doc.payload);
        out << "K " << p.k_size << "\nL " << p.lambda_size << '\n';
        switch (p.group.form) {
          case GroupSpec::Form::cyclic: out << "group cyclic " << p.group.order << '\n'; break;
          case GroupSpec::Form::catalog: out << "group " << p.group.name << '\n'; break;
          case GroupSpec::Form::cayley:
            out << "group cayley " << p.group.order << '\n';
            emit_rows(out, p.group.table);
            break;
        }
        out << "matrix\n";
        for (auto const& row : p.matrix) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? " " : "");
            switch (row[i].form) {
              case MatrixToken::Form::zero: out << '.'; break;
              case MatrixToken::Form::identity: out << 'e'; break;
              case MatrixToken::Form::index: out << row[i].index; break;
            }
          }
          out << '\n';
        }
        break;
      }
      case Format::group_ref:
        out << std::get<GroupRefPayload>(doc.payload).name << '\n';
        break;
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  std::optional<Sigma> sigma_from_string(std::string_view s) {
    for (auto v : {Sigma::s, Sigma::i, Sigma::m, Sigma::m_star, Sigma::g}) {
      if (to_string(v) == s) {
        return v;
      }
    }
    return std::nullopt;
  }

  std::string_view to_string(Sigma s) noexcept {
    switch (s) {
      case Sigma::s: return "s";
      case Sigma::i: return "i";
      case Sigma::m: return "m";
      case Sigma::m_star: return "mstar";
      case Sigma::g: return "g";
    }
    return "?";
  }

  Kind kind_of(Sigma s) noexcept {
    switch (s) {
      case Sigma::s: return Kind::subsemigroup;
      case Sigma::i: return Kind::inverse_sub;
      case Sigma::m: return Kind::submonoid;
      case Sigma::m_star: return Kind::monoidal_sub;
      case Sigma::g: return Kind::subgroup;
    }
    return Kind::subsemigroup;
  }

  CoveringResult compute_sigma(FiniteSemigroup const& s, Sigma which) {
    switch (which) {
      case Sigma::s: return sigma_s(s);
      case Sigma::i: return sigma_i(s);
      case Sigma::m: return classify_monoid(s).sigma_m;
      case Sigma::m_star: return classify_monoid(s).sigma_m_star;
      case Sigma::g: return sigma_subgroups(s);
    }
    fail(ErrorCode::internal, "unknown covering number");
  }

  namespace {
    ordered_json set_json(ElementSet const& x) {
      return ordered_json(x.elements());
    }

    ordered_json classes_json(std::vector<ElementSet> const& classes) {
      auto out = ordered_json::array();
      for (auto const& c : classes) {
        out.push_back(set_json(c));
      }
      return out;
    }

    template <typename T>
    ordered_json optional_json(std::optional<T> const& v) {
      return v ? ordered_json(*v) : ordered_json(nullptr);
    }
  }  // namespace

  std::string result_json(FiniteSemigroup const& s, CoveringResult const& r) {
    ordered_json j;
    if (r.value.is_infinite()) {
      j["value"] = "infinite";
    } else {
      j["value"] = r.value.value();
    }
    j["case"] = std::string(to_string(r.case_tag));
    if (r.certificate) {
      auto parts = ordered_json::array();
      for (auto const& p : r.certificate->parts) {
        parts.push_back(set_json(p));
      }
      j["parts"] = std::move(parts);
    }
    if (r.witness) {
      j["witness"] = *r.witness;
    }
    j["provenance"]     = std::string(to_string(r.provenance));
    j["carrier_digest"] = carrier_digest(s);
    return j.dump();
  }

  std::string analyze_json(FiniteSemigroup const& s) {
    auto const flags = structure_flags(s);
    auto const g     = greens_classes(s);
    ordered_json j;
    j["order"]          = s.size();
    j["carrier_digest"] = carrier_digest(s);
    j["monogenic"]      = optional_json(is_monogenic(s));
    j["identity"]       = optional_json(flags.identity);
    j["zero"]           = optional_json(find_zero(s));
    j["is_group"]       = flags.is_group;
    j["is_inverse"]     = flags.is_inverse;
    j["idempotents"]    = set_json(flags.idempotents);
    j["j_classes"]      = classes_json(g.j_classes);
    j["r_classes"]      = classes_json(g.r_classes);
    j["l_classes"]      = classes_json(g.l_classes);
    j["maximal_j_classes"] = maximal_j_classes(g);
    auto generating = ordered_json::array();
    for (auto id : maximal_j_classes(g)) {
      generating.push_back(jclass_generates(s, g.j_classes[id]));
    }
    j["maximal_class_generates"] = std::move(generating);
    return j.dump();
  }

  Verdict verify_certificate(FiniteSemigroup const& s,
                             Sigma                  which,
                             std::string_view       certificate_json) {
    ordered_json j;
    try {
      j = ordered_json::parse(certificate_json);
    } catch (nlohmann::json::exception const& e) {
      fail(ErrorCode::parse_error, std::string("certificate is not JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("value") || !j.contains("carrier_digest")
        || !j["carrier_digest"].is_string()) {
      fail(ErrorCode::parse_error, "certificate needs value and carrier_digest keys");
    }
    auto const flags = structure_flags(s);
    if (which == Sigma::i && !flags.is_inverse) {
      fail(ErrorCode::not_inverse, "the semigroup is not inverse");
    }
    if ((which == Sigma::m || which == Sigma::m_star) && !flags.identity) {
      fail(ErrorCode::no_identity, "the semigroup has no identity");
    }
    if (j["carrier_digest"].get<std::string>() != carrier_digest(s)) {
      return Verdict{false, "carrier digest mismatch: certificate was made for another carrier", {}};
    }

    CoveringResult r;
    auto const&    value = j["value"];
    if (value.is_string() && value.get<std::string>() == "infinite") {
      if (!j.contains("witness") || !j["witness"].is_number_unsigned()) {
        return Verdict{false, "infinite value without a witness", {}};
      }
      auto const w = j["witness"].get<std::uint64_t>();
      if (w >= s.size()) {
        return Verdict{false, "witness " + std::to_string(w) + " is not an element", {}};
      }
      r.witness = static_cast<ElementId>(w);
      return verify_result(s, flags, kind_of(which), r);
    }
    if (!value.is_number_unsigned()) {
      fail(ErrorCode::parse_error, "value must be a non-negative integer or \"infinite\"");
    }
    r.value = NatOrInfinity::finite(value.get<std::size_t>());
    if (!j.contains("parts") || !j["parts"].is_array()) {
      return Verdict{false, "finite value without parts", {}};
    }
    Cover c{kind_of(which), {}};
    for (auto const& part : j["parts"]) {
      ElementSet x(s.size());
      if (!part.is_array()) {
        fail(ErrorCode::parse_error, "each part must be an array of elements");
      }
      for (auto const& e : part) {
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= s.size()) {
          return Verdict{false, "part " + std::to_string(c.parts.size()) + " names a non-element " + e.dump(),
                         c.parts.size()};
        }
        x.insert(e.get<ElementId>());
      }
      c.parts.push_back(std::move(x));
    }
    r.certificate = std::move(c);
    return verify_result(s, flags, kind_of(which), r);
  }

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  Census run_census(std::filesystem::path const& dir, Sigma which) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
      fail(ErrorCode::invalid_argument, "not a directory: " + dir.string());
    }
    Census c;
    c.which = which;
    std::vector<fs::path> files;
    for (auto const& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (auto const& path : files) {
      CensusEntry e;
      e.file = path.filename().string();
      try {
        std::ifstream     in(path, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        auto const s = parse_semigroup(buf.str());
        e.monogenic  = is_monogenic(s).has_value();
        e.group      = structure_flags(s).is_group;
        auto const r = compute_sigma(s, which);
        e.value      = r.value;
        e.case_tag   = std::string(to_string(r.case_tag));
      } catch (Error const& err) {
        e.error = err.what();
      }
      c.entries.push_back(std::move(e));
    }
    return c;
  }

  std::string census_json(Census const& c) {
    std::map<NatOrInfinity, std::size_t> values;
    std::size_t                          errors = 0;
    auto                                 files  = ordered_json::array();
    for (auto const& e : c.entries) {
      ordered_json f;
      f["file"] = e.file;
      if (e.value) {
        ++values[*e.value];
        f["value"] = e.value->is_infinite() ? ordered_json("infinite") : ordered_json(e.value->value());
        f["case"]      = e.case_tag;
        f["monogenic"] = e.monogenic;
        f["group"]     = e.group;
      } else {
        ++errors;
        f["error"] = e.error;
      }
      files.push_back(std::move(f));
    }
    ordered_json histogram = ordered_json::object();
    for (auto const& [v, n] : values) {
      histogram[v.to_string()] = n;
    }
    if (errors) {
      histogram["error"] = errors;
    }
    ordered_json j;
    j["kind"]      = std::string(to_string(c.which));
    j["total"]     = c.entries.size();
    j["histogram"] = std::move(histogram);
    j["files"]     = std::move(files);
    return j.dump();
  }

}  // namespace semicover
