#include "asmprism/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace asmprism {

ParseError::ParseError(const std::string& what, int line, int column)
    : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
                      Axis::row, line),
      line_(line),
      column_(column) {}

namespace {

struct Located {
  IntMatrix matrix;
  std::vector<int> line_of_row;              // source line per matrix row
  std::vector<std::vector<int>> column_of;   // source column per entry
};

Located parse_located(std::istream& in) {
  std::vector<std::vector<int>> rows;
  Located loc;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::vector<int> row;
    std::vector<int> cols;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
        ++pos;
        continue;
      }
      if (text[pos] == '#' && row.empty()) break;
      std::size_t end = pos;
      while (end < text.size() && std::isspace(static_cast<unsigned char>(text[end])) == 0) ++end;
      int value = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + end;
      // Accept the Unicode minus sign as well as '-'.
      std::string token(first, last);
      if (token.rfind("\xE2\x88\x92", 0) == 0) token = "-" + token.substr(3);
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("expected an integer, found '" + std::string(first, last) + "'", line, static_cast<int>(pos) + 1);
      }
      row.push_back(value);
      cols.push_back(static_cast<int>(pos) + 1);
      pos = end;
    }
    if (row.empty()) continue;
    rows.push_back(std::move(row));
    loc.line_of_row.push_back(line);
    loc.column_of.push_back(std::move(cols));
  }
  if (rows.empty()) throw ParseError("no matrix rows found", line == 0 ? 1 : line, 1);
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      const int col = rows[i].size() > n ? loc.column_of[i][n] : static_cast<int>(loc.column_of[i].back()) + 1;
      throw ParseError("row has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n),
                       loc.line_of_row[i], col);
    }
  }
  loc.matrix = IntMatrix::from_rows(rows);
  return loc;
}

template <class Validate>
auto validate_located(const Located& loc, Validate validate) {
  try {
    return validate(loc.matrix);
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    const int idx = e.index();
    if (e.axis() == ValidationError::Axis::row && idx >= 1) {
      throw ParseError(e.what(), loc.line_of_row[static_cast<std::size_t>(idx - 1)], 1);
    }
    if (e.axis() == ValidationError::Axis::column && idx >= 1) {
      throw ParseError(e.what(), loc.line_of_row.front(), loc.column_of.front()[static_cast<std::size_t>(idx - 1)]);
    }
    throw ParseError(e.what(), loc.line_of_row.front(), 1);
  }
}

}  // namespace

IntMatrix parse_matrix(std::istream& in) { return parse_located(in).matrix; }

IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

Asm parse_asm(std::istream& in) {
  return validate_located(parse_located(in), [](const IntMatrix& m) { return validate_asm(m); });
}

Asm parse_asm(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_asm(in);
}

PartialAsm parse_partial_asm(std::istream& in) {
  return validate_located(parse_located(in), [](const IntMatrix& m) { return validate_partial_asm(m); });
}

PartialAsm parse_partial_asm(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_partial_asm(in);
}

Perm parse_perm(std::string_view text) {
  std::vector<int> w;
  const bool separated = text.find_first_of(" \t,") != std::string_view::npos;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\n' || ch == '\r') {
      ++pos;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in permutation", 1, static_cast<int>(pos) + 1);
    }
    std::size_t end = separated ? text.find_first_of(" \t,\n\r", pos) : pos + 1;
    if (end == std::string_view::npos) end = text.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc() || ptr != text.data() + end) {
      throw ParseError("malformed number in permutation", 1, static_cast<int>(pos) + 1);
    }
    w.push_back(v);
    pos = end;
  }
  try {
    return Perm(std::move(w));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace asmprism
