#include "sdist/io.hpp"

#include <sdist/errors.hpp>
#include <sdist/parse.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sdist::cli {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const bool blank = std::all_of(line.begin(), line.end(),
                                   [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) lines.push_back({number, line});
  }
  return lines;
}

std::string where(const std::string& source, std::size_t line, std::size_t column) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PointSet parse_point_set(std::string_view text, const std::string& source) {
  std::vector<Point> points;
  std::size_t arity = 0;
  for (const Line& line : content_lines(text)) {
    Point p;
    std::size_t pos = 0;
    while (pos < line.text.size()) {
      while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
      if (pos == line.text.size()) break;
      std::size_t end = pos;
      while (end < line.text.size() && !std::isspace(static_cast<unsigned char>(line.text[end]))) ++end;
      try {
        p.push_back(parse_rational(line.text.substr(pos, end - pos)));
      } catch (const ParseError& e) {
        throw InputError(where(source, line.number, pos + e.position() + 1) +
                         "bad coordinate '" + std::string(line.text.substr(pos, end - pos)) + "'");
      }
      pos = end;
    }
    if (points.empty()) arity = p.size();
    if (p.size() != arity) {
      throw InputError(where(source, line.number, 1) + "expected " + std::to_string(arity) +
                       " coordinates, got " + std::to_string(p.size()));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw InputError(source + ": no points");
  try {
    return PointSet(arity, std::move(points));
  } catch (const std::invalid_argument& e) {
    throw InputError(source + ": " + e.what());
  }
}

IdealFile parse_ideal(std::string_view text, std::size_t arity, const std::string& source) {
  const auto lines = content_lines(text);
  std::size_t used = 0;
  for (const Line& line : lines) {
    try {
      used = std::max(used, max_variable_index(line.text));
    } catch (const ParseError& e) {
      throw InputError(where(source, line.number, e.position() + 1) + e.detail());
    }
  }
  if (arity == 0) {
    arity = std::max<std::size_t>(used, 1);
  } else if (used > arity) {
    throw InputError(source + ": variable x" + std::to_string(used) + " exceeds --arity " +
                     std::to_string(arity));
  }
  IdealFile ideal{arity, {}};
  for (const Line& line : lines) {
    try {
      ideal.generators.push_back(parse_polynomial(line.text, arity));
    } catch (const ParseError& e) {
      throw InputError(where(source, line.number, e.position() + 1) + e.detail());
    }
  }
  return ideal;
}

}  // namespace sdist::cli
