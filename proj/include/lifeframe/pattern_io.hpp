// Copyright 2026 The lifeframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lifeframe/error.hpp"
#include "lifeframe/life_engine.hpp"

namespace lifeframe {

inline constexpr std::string_view kLifeRule = "B3/S23";

/*!
 * A parsed pattern file. Cells are row-major sorted and lie inside
 * [0,width) x [0,height).
 */
struct PatternDocument {
  std::optional<std::string> name;
  std::vector<std::string> comments;  ///< comment lines, verbatim
  std::string rule = std::string(kLifeRule);
  std::vector<Cell> cells;
  std::uint32_t width = 0;
  std::uint32_t height = 0;

  Pattern pattern() const { return Pattern(cells); }

  static PatternDocument from_pattern(const Pattern& p, std::optional<std::string> name = std::nullopt) {
    PatternDocument doc;
    doc.name = std::move(name);
    if (p.empty()) return doc;
    Canonical canon = canonicalize(p);
    Box box = bounding_box(canon.pattern);
    if (box.max_x >= std::numeric_limits<std::uint32_t>::max() || box.max_y >= std::numeric_limits<std::uint32_t>::max()) {
      throw OverflowError("pattern extent exceeds 32-bit RLE dimensions");
    }
    doc.cells.assign(canon.pattern.cells().begin(), canon.pattern.cells().end());
    doc.width = static_cast<std::uint32_t>(box.max_x + 1);
    doc.height = static_cast<std::uint32_t>(box.max_y + 1);
    return doc;
  }
};

namespace detail {

/// Physical lines with their 1-based numbers; a trailing newline adds no line.
struct SourceLine {
  std::string_view text;
  std::size_t number;
};

inline std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 1;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({line, number++});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Accepts B3/S23 in either order or case, or the legacy "23/3" survival/birth form.
inline bool is_life_rule(std::string_view rule) {
  std::string r;
  for (char ch : rule) {
    if (!std::isspace(static_cast<unsigned char>(ch))) r.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  if (r == "B3/S23" || r == "S23/B3" || r == "23/3") return true;
  return false;
}

inline std::uint32_t parse_u32(std::string_view digits, std::size_t line, std::size_t column, const char* what) {
  if (digits.empty()) throw ParseError(std::string("missing ") + what, line, column);
  std::uint64_t v = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError(std::string("bad ") + what, line, column);
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError(std::string(what) + " exceeds 32 bits", line, column);
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace detail

/// Parse an RLE document. Errors carry line and column.
inline PatternDocument parse_rle(std::string_view text) {
  PatternDocument doc;
  auto lines = detail::split_lines(text);
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    std::string_view t = detail::trim(lines[i].text);
    if (t.empty()) continue;
    if (t.front() != '#') break;
    if (t.size() >= 2 && t[1] == 'N') doc.name = std::string(detail::trim(t.substr(2)));
    else doc.comments.emplace_back(lines[i].text);
  }
  if (i == lines.size()) throw ParseError("missing header line 'x = M, y = N'", lines.empty() ? 1 : lines.back().number + 1, 1);

  // Header: comma separated key = value items.
  const auto& header = lines[i];
  bool have_x = false;
  bool have_y = false;
  std::string_view rest = header.text;
  std::size_t col_base = 1;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto eq = item.find('=');
    std::size_t column = col_base + static_cast<std::size_t>(item.find_first_not_of(' ') == std::string_view::npos ? 0 : item.find_first_not_of(' '));
    if (eq == std::string_view::npos) throw ParseError("malformed header item '" + std::string(detail::trim(item)) + "'", header.number, column);
    std::string_view key = detail::trim(item.substr(0, eq));
    std::string_view value = detail::trim(item.substr(eq + 1));
    if (key == "x") {
      doc.width = detail::parse_u32(value, header.number, column, "width");
      have_x = true;
    } else if (key == "y") {
      doc.height = detail::parse_u32(value, header.number, column, "height");
      have_y = true;
    } else if (key == "rule") {
      if (!detail::is_life_rule(value)) throw ParseError("unsupported rule '" + std::string(value) + "'; only B3/S23", header.number, column);
    } else {
      throw ParseError("unknown header key '" + std::string(key) + "'", header.number, column);
    }
    if (comma == std::string_view::npos) break;
    col_base += comma + 1;
    rest.remove_prefix(comma + 1);
  }
  if (!have_x || !have_y) throw ParseError("header must declare both x and y", header.number, 1);

  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool terminated = false;
  for (++i; i < lines.size() && !terminated; ++i) {
    std::string_view line = lines[i].text;
    std::size_t pos = 0;
    while (pos < line.size()) {
      char ch = line[pos];
      std::size_t column = pos + 1;
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos;
        continue;
      }
      std::uint32_t run = 1;
      bool counted = false;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t end = pos;
        while (end < line.size() && std::isdigit(static_cast<unsigned char>(line[end]))) ++end;
        run = detail::parse_u32(line.substr(pos, end - pos), lines[i].number, column, "run count");
        if (run == 0) throw ParseError("run count of zero", lines[i].number, column);
        pos = end;
        counted = true;
        if (pos == line.size()) throw ParseError("run count not followed by a tag", lines[i].number, column);
        ch = line[pos];
        column = pos + 1;
      }
      ++pos;
      switch (ch) {
        case 'b':
          x += run;
          if (x > doc.width) throw ParseError("row exceeds declared width", lines[i].number, column);
          break;
        case 'o':
          if (x + run > doc.width || y >= doc.height) throw ParseError("cells exceed declared bounds", lines[i].number, column);
          for (std::uint32_t k = 0; k < run; ++k) doc.cells.push_back({static_cast<std::int64_t>(x + k), static_cast<std::int64_t>(y)});
          x += run;
          break;
        case '$':
          y += run;
          x = 0;
          if (y > doc.height) throw ParseError("rows exceed declared height", lines[i].number, column);
          break;
        case '!':
          if (counted) {
            throw ParseError("run count before terminator", lines[i].number, column);
          }
          terminated = true;
          break;
        default:
          throw ParseError(std::string("unexpected character '") + ch + "'", lines[i].number, column);
      }
      if (terminated) break;
    }
  }
  if (!terminated) throw ParseError("missing '!' terminator", lines.back().number, lines.back().text.size() + 1);
  return doc;
}

/*!
 * Canonical RLE: minimal bounding box, maximal runs, every non-blank row
 * written to the full width, blank rows folded into the `$` count, body
 * wrapped at 70 columns between tokens. No trailing newline.
 */
inline std::string emit_rle(const PatternDocument& doc) {
  PatternDocument canon = PatternDocument::from_pattern(doc.pattern());
  std::string out;
  if (doc.name) out += "#N " + *doc.name + "\n";
  for (const auto& c : doc.comments) out += c + "\n";
  out += "x = " + std::to_string(canon.width) + ", y = " + std::to_string(canon.height) + ", rule = " + std::string(kLifeRule) + "\n";

  std::vector<std::string> tokens;
  auto push = [&](std::uint64_t run, char tag) {
    tokens.push_back(run == 1 ? std::string(1, tag) : std::to_string(run) + tag);
  };
  std::int64_t row = 0;
  std::int64_t col = 0;
  const auto width = static_cast<std::int64_t>(canon.width);
  auto pad_row = [&] {
    if (col > 0 && col < width) push(static_cast<std::uint64_t>(width - col), 'b');
  };
  const auto& cells = canon.cells;
  for (std::size_t i = 0; i < cells.size();) {
    const Cell& c = cells[i];
    if (c.y != row) {
      pad_row();
      push(static_cast<std::uint64_t>(c.y - row), '$');
      row = c.y;
      col = 0;
    }
    if (c.x > col) push(static_cast<std::uint64_t>(c.x - col), 'b');
    std::size_t j = i;
    while (j + 1 < cells.size() && cells[j + 1].y == c.y && cells[j + 1].x == cells[j].x + 1) ++j;
    push(j - i + 1, 'o');
    col = cells[j].x + 1;
    i = j + 1;
  }
  pad_row();
  tokens.emplace_back("!");

  std::size_t line_len = 0;
  for (const auto& tok : tokens) {
    if (line_len > 0 && line_len + tok.size() > 70) {
      out += "\n";
      line_len = 0;
    }
    out += tok;
    line_len += tok.size();
  }
  return out;
}

/// Plaintext (".O") pattern: `.` dead, `O` or `*` alive, `!` comment lines.
inline PatternDocument parse_plaintext(std::string_view text) {
  PatternDocument doc;
  std::uint64_t row = 0;
  std::size_t width = 0;
  for (const auto& line : detail::split_lines(text)) {
    if (!line.text.empty() && line.text.front() == '!') {
      std::string_view body = line.text.substr(1);
      if (body.substr(0, 5) == "Name:") doc.name = std::string(detail::trim(body.substr(5)));
      else doc.comments.emplace_back(line.text);
      continue;
    }
    for (std::size_t col = 0; col < line.text.size(); ++col) {
      char ch = line.text[col];
      if (ch == 'O' || ch == '*') doc.cells.push_back({static_cast<std::int64_t>(col), static_cast<std::int64_t>(row)});
      else if (ch != '.') throw ParseError(std::string("unexpected character '") + ch + "'", line.number, col + 1);
    }
    width = std::max(width, line.text.size());
    ++row;
    if (row > std::numeric_limits<std::uint32_t>::max() || width > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError("pattern exceeds 32-bit dimensions", line.number, 1);
    }
  }
  doc.width = static_cast<std::uint32_t>(width);
  doc.height = static_cast<std::uint32_t>(row);
  return doc;
}

/// Plaintext over the minimal bounding box, one line per row, newline-terminated.
inline std::string emit_plaintext(const PatternDocument& doc) {
  PatternDocument canon = PatternDocument::from_pattern(doc.pattern());
  std::string out;
  if (doc.name) out += "!Name: " + *doc.name + "\n";
  for (const auto& c : doc.comments) out += (c.empty() || c.front() != '!' ? "!" + c : c) + "\n";
  std::size_t i = 0;
  for (std::uint32_t y = 0; y < canon.height; ++y) {
    std::string line;
    while (i < canon.cells.size() && canon.cells[i].y == y) {
      line.resize(static_cast<std::size_t>(canon.cells[i].x), '.');
      line.push_back('O');
      ++i;
    }
    line.resize(canon.width, '.');
    out += line + "\n";
  }
  return out;
}

/// Dispatch on content: anything whose first meaningful line is `#...` or
/// `x = ...` is RLE; everything else is plaintext.
inline PatternDocument parse_pattern(std::string_view text) {
  for (const auto& line : detail::split_lines(text)) {
    std::string_view t = detail::trim(line.text);
    if (t.empty()) continue;
    if (t.front() == '#' || t.front() == 'x') return parse_rle(text);
    break;
  }
  return parse_plaintext(text);
}

}  // namespace lifeframe
