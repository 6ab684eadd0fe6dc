#include "mjdt/text.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace mjdt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, std::string_view context) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::ParseError,
                "expected an integer, got '" + std::string(token) + "' in '" +
                    std::string(context) + "'");
  }
  return value;
}

std::vector<int> parse_parts(std::string_view text, std::string_view context) {
  std::vector<int> parts;
  if (trim(text).empty()) return parts;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = text.find(',', pos);
    parts.push_back(parse_int(text.substr(pos, comma - pos), context));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return parts;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    auto end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

}  // namespace

Shape parse_shape_spec(std::string_view text) {
  std::string_view body = trim(text);
  bool shifted = false;
  if (const auto colon = body.find(':'); colon != std::string_view::npos) {
    const std::string_view flag = body.substr(colon + 1);
    if (flag != "shifted") {
      throw Error(ErrorCode::ParseError, "unknown shape flag '" + std::string(flag) + "'");
    }
    shifted = true;
    body = body.substr(0, colon);
  }
  std::string_view outer_text = body;
  std::string_view inner_text;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    outer_text = body.substr(0, slash);
    inner_text = body.substr(slash + 1);
    if (trim(inner_text).empty()) {
      throw Error(ErrorCode::ParseError, "empty inner partition in '" + std::string(text) + "'");
    }
  }
  if (trim(outer_text).empty()) {
    throw Error(ErrorCode::ParseError, "empty outer partition in '" + std::string(text) + "'");
  }
  return make_shape(parse_parts(outer_text, text), parse_parts(inner_text, text), shifted);
}

Filling parse_filling(std::string_view text, const Shape& shape) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    pos = end + 1;
  }
  if (static_cast<int>(lines.size()) != shape.rows()) {
    throw Error(ErrorCode::InvalidFilling, "expected " + std::to_string(shape.rows()) +
                                               " rows, got " + std::to_string(lines.size()));
  }

  std::vector<int> entries(shape.size(), 0);
  for (int row = 1; row <= shape.rows(); ++row) {
    const auto tokens = split_tokens(lines[static_cast<std::size_t>(row - 1)]);
    if (static_cast<int>(tokens.size()) > shape.width()) {
      throw Error(ErrorCode::InvalidFilling,
                  "row " + std::to_string(row) + " is wider than the shape");
    }
    for (int col = 1; col <= shape.width(); ++col) {
      const bool present = col <= static_cast<int>(tokens.size());
      const std::string_view token = present ? tokens[static_cast<std::size_t>(col - 1)] : ".";
      const auto idx = shape.index_of({row, col});
      if (token == ".") {
        if (idx) {
          throw Error(ErrorCode::InvalidFilling,
                      "missing entry for cell " + to_string(Cell{row, col}));
        }
        continue;
      }
      if (!idx) {
        throw Error(ErrorCode::InvalidFilling,
                    "entry at " + to_string(Cell{row, col}) + " lies outside the shape");
      }
      entries[*idx] = parse_int(token, lines[static_cast<std::size_t>(row - 1)]);
    }
  }
  return Filling(shape, std::move(entries));
}

std::string render_filling(const Filling& f) {
  const Shape& shape = f.shape();
  std::string out;
  for (int row = 1; row <= shape.rows(); ++row) {
    for (int col = 1; col <= shape.width(); ++col) {
      if (col > 1) out += ' ';
      const auto idx = shape.index_of({row, col});
      out += idx ? std::to_string(f.at_index(*idx)) : ".";
    }
    out += '\n';
  }
  return out;
}

std::string render_pair(const PairedState& state) {
  return render_filling(state.first) + "--\n" + render_filling(state.second);
}

}  // namespace mjdt
