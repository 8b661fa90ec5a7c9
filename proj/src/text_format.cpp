#include "ditlogic/text_format.hpp"

#include <cctype>
#include <string>

#include "ditlogic/error.hpp"

namespace ditlogic {

namespace {

struct Piece {
  std::string_view text;
  std::size_t offset;
};

std::vector<Piece> split(std::string_view text, std::size_t offset, auto is_separator) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || is_separator(text[i])) {
      out.push_back({text.substr(start, i - start), offset + start});
      start = i + 1;
    }
  }
  return out;
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t parse_index(const Piece& piece) {
  std::size_t i = 0;
  const auto s = piece.text;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  const std::size_t first_digit = i;
  std::size_t value = 0;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    value = value * 10 + static_cast<std::size_t>(s[i] - '0');
    if (value > 1'000'000) {
      throw Error(ErrorKind::parse, "element index too large at position " +
                                        std::to_string(piece.offset + i),
                  piece.offset + i);
    }
  }
  if (i == first_digit) {
    throw Error(ErrorKind::parse,
                "expected an element index at position " + std::to_string(piece.offset + i),
                piece.offset + i);
  }
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i != s.size()) {
    throw Error(ErrorKind::parse,
                "unexpected character '" + std::string(1, s[i]) + "' at position " +
                    std::to_string(piece.offset + i),
                piece.offset + i);
  }
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text, std::optional<std::size_t> size) {
  if (blank(text)) throw Error(ErrorKind::empty_input, "partition text is empty");
  std::vector<Block> blocks;
  std::size_t max_index = 0;
  for (const auto& block_text : split(text, 0, [](char c) { return c == '|'; })) {
    if (blank(block_text.text)) {
      throw Error(ErrorKind::empty_block,
                  "empty block at position " + std::to_string(block_text.offset),
                  block_text.offset);
    }
    Block block;
    for (const auto& element : split(block_text.text, block_text.offset,
                                     [](char c) { return c == ','; })) {
      block.push_back(parse_index(element));
      max_index = std::max(max_index, block.back());
    }
    blocks.push_back(std::move(block));
  }
  return make_partition(blocks, size.value_or(max_index + 1));
}

std::string format_partition(const Partition& pi) {
  std::string out;
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    if (b != 0) out += '|';
    const auto& block = pi.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

ParsedNumbers parse_number_list(std::string_view text) {
  if (blank(text)) throw Error(ErrorKind::empty_input, "number list is empty");
  ParsedNumbers out;
  for (const auto& piece : split(text, 0, [](char c) { return c == ','; })) {
    out.values.push_back(parse_rational(piece.text, piece.offset));
    if (piece.text.find('/') != std::string_view::npos) out.has_fraction = true;
  }
  return out;
}

ParsedMatrix parse_matrix(std::string_view text) {
  ParsedMatrix out;
  for (const auto& line : split(text, 0, [](char c) { return c == '\n' || c == ';'; })) {
    if (blank(line.text)) continue;
    std::vector<Rational> row;
    for (const auto& cell : split(line.text, line.offset, [](char c) { return c == ','; })) {
      auto trimmed = cell.text;
      if (!trimmed.empty() && trimmed.back() == '\r') trimmed.remove_suffix(1);
      row.push_back(parse_rational(trimmed, cell.offset));
      if (trimmed.find('/') != std::string_view::npos) out.has_fraction = true;
    }
    if (!out.rows.empty() && row.size() != out.rows.front().size()) {
      throw Error(ErrorKind::parse,
                  "row at position " + std::to_string(line.offset) + " has " +
                      std::to_string(row.size()) + " cells, expected " +
                      std::to_string(out.rows.front().size()),
                  line.offset);
    }
    out.rows.push_back(std::move(row));
  }
  if (out.rows.empty()) throw Error(ErrorKind::empty_input, "matrix is empty");
  return out;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

std::vector<std::vector<double>> to_doubles(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::vector<double>> out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_doubles(row));
  return out;
}

}  // namespace ditlogic
