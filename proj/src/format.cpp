// Copyright 2026 The isg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isg/format.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "isg/error.hpp"

namespace isg {

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    struct Line {
      std::size_t        number;  // 1-based
      std::vector<Token> tokens;
      std::size_t        end_column;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      while (!text.empty() || number == 0) {
        auto             nl  = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        Line line{number, {}, raw.size() + 1};
        std::size_t i = 0;
        while (i < raw.size()) {
          if (std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) {
            ++j;
          }
          line.tokens.push_back(Token{raw.substr(i, j - i), i + 1});
          i = j;
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
        if (nl == std::string_view::npos) {
          break;
        }
      }
      return lines;
    }

    class Parser {
     public:
      explicit Parser(std::vector<Line> lines) : _lines(std::move(lines)) {}

      SemigroupSpec parse() {
        SemigroupSpec spec;
        Line const&   header = next_line("'semigroup <name>'");
        keyword(header, 0, "semigroup");
        expect_count(header, 2, "'semigroup <name>'");
        spec.name = identifier(header.tokens[1]);

        Line const& mode = next_line("'table <n> zero <k>' or 'points <m>'");
        if (mode.tokens[0].text == "table") {
          parse_table(mode, spec);
        } else if (mode.tokens[0].text == "points") {
          parse_generators(mode, spec);
        } else {
          throw syntax(mode.number, mode.tokens[0].column,
                       "expected 'table' or 'points'");
        }
        if (_pos < _lines.size()) {
          auto const& extra = _lines[_pos];
          throw syntax(extra.number, extra.tokens[0].column, "expected end of input");
        }
        return spec;
      }

     private:
      static ParseError syntax(std::size_t line, std::size_t col, std::string msg) {
        return ParseError(ErrorCode::SyntaxError, line, col, std::move(msg));
      }

      Line const& next_line(std::string const& expected) {
        if (_pos == _lines.size()) {
          std::size_t line = _lines.empty() ? 1 : _lines.back().number + 1;
          throw syntax(line, 1, "unexpected end of input, expected " + expected);
        }
        return _lines[_pos++];
      }

      static void expect_count(Line const& line, std::size_t n, std::string const& what) {
        if (line.tokens.size() < n) {
          throw syntax(line.number, line.end_column, "expected " + what);
        }
        if (line.tokens.size() > n) {
          throw syntax(line.number, line.tokens[n].column,
                       "unexpected token, expected end of line after " + what);
        }
      }

      static void keyword(Line const& line, std::size_t i, std::string_view word) {
        if (line.tokens[i].text != word) {
          throw syntax(line.number, line.tokens[i].column,
                       "expected '" + std::string(word) + "'");
        }
      }

      std::string identifier(Token const& t) const {
        bool ok = std::isalpha(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_';
        for (char c : t.text) {
          ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        }
        if (!ok) {
          throw syntax(_lines[_pos - 1].number, t.column, "expected an identifier");
        }
        return std::string(t.text);
      }

      std::size_t number(Token const& t) const {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          throw syntax(_lines[_pos - 1].number, t.column, "expected a nonnegative integer");
        }
        return value;
      }

      std::size_t bounded(Token const& t, std::size_t bound) const {
        std::size_t value = number(t);
        if (value >= bound) {
          throw ParseError(ErrorCode::RangeError, _lines[_pos - 1].number, t.column,
                           std::to_string(value) + " is out of range, expected < "
                               + std::to_string(bound));
        }
        return value;
      }

      void parse_table(Line const& line, SemigroupSpec& spec) {
        expect_count(line, 4, "'table <n> zero <k>'");
        keyword(line, 2, "zero");
        std::size_t const n = number(line.tokens[1]);
        if (n == 0) {
          throw ParseError(ErrorCode::RangeError, line.number, line.tokens[1].column,
                           "a table needs at least one element");
        }
        spec.mode = SemigroupSpec::Mode::Table;
        spec.zero = static_cast<Element>(bounded(line.tokens[3], n));
        spec.rows.assign(n, std::vector<Element>(n));
        for (std::size_t a = 0; a < n; ++a) {
          Line const& row = next_line("a table row of " + std::to_string(n) + " entries");
          expect_count(row, n, std::to_string(n) + " entries");
          for (std::size_t b = 0; b < n; ++b) {
            spec.rows[a][b] = static_cast<Element>(bounded(row.tokens[b], n));
          }
        }
      }

      void parse_generators(Line const& line, SemigroupSpec& spec) {
        expect_count(line, 2, "'points <m>'");
        spec.mode   = SemigroupSpec::Mode::Generators;
        spec.degree = number(line.tokens[1]);
        std::set<std::string> names;
        while (_pos < _lines.size()) {
          Line const& gen = _lines[_pos++];
          keyword(gen, 0, "gen");
          if (gen.tokens.size() < 3) {
            throw syntax(gen.number, gen.end_column, "expected 'gen <name> = <images>'");
          }
          GeneratorSpec g{identifier(gen.tokens[1]), {}};
          keyword(gen, 2, "=");
          expect_count(gen, 3 + spec.degree, std::to_string(spec.degree) + " images");
          if (!names.insert(g.name).second) {
            throw ParseError(ErrorCode::DuplicateName, gen.number, gen.tokens[1].column,
                             "generator '" + g.name + "' is already defined");
          }
          for (std::size_t i = 0; i < spec.degree; ++i) {
            Token const& t = gen.tokens[3 + i];
            g.images.push_back(t.text == "_"
                                   ? kUndefined
                                   : static_cast<std::int32_t>(bounded(t, spec.degree)));
          }
          spec.generators.push_back(std::move(g));
        }
      }

      std::vector<Line> _lines;
      std::size_t       _pos = 0;
    };
  }  // namespace

  SemigroupSpec parse_spec(std::string_view text) {
    return Parser(tokenize(text)).parse();
  }

  std::string print_spec(SemigroupSpec const& spec) {
    std::ostringstream out;
    out << "semigroup " << spec.name << "\n";
    if (spec.mode == SemigroupSpec::Mode::Table) {
      out << "table " << spec.rows.size() << " zero " << spec.zero << "\n";
      for (auto const& row : spec.rows) {
        for (std::size_t b = 0; b < row.size(); ++b) {
          out << (b == 0 ? "" : " ") << row[b];
        }
        out << "\n";
      }
    } else {
      out << "points " << spec.degree << "\n";
      for (auto const& g : spec.generators) {
        out << "gen " << g.name << " =";
        for (auto y : g.images) {
          out << " ";
          if (y == kUndefined) {
            out << "_";
          } else {
            out << y;
          }
        }
        out << "\n";
      }
    }
    return out.str();
  }

  InverseSemigroup build_semigroup(SemigroupSpec const& spec, std::size_t max_size) {
    if (spec.mode == SemigroupSpec::Mode::Table) {
      return InverseSemigroup::from_table(spec.rows, spec.zero);
    }
    std::vector<PartialMap> generators;
    for (auto const& g : spec.generators) {
      generators.emplace_back(g.images);
    }
    return from_partial_maps(spec.degree, generators, max_size).semigroup;
  }

}  // namespace isg
