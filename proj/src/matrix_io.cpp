#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "ffmat/errors.hpp"
#include "ffmat/matrix_io.hpp"

namespace ffmat {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::vector<Token> tokens;
  std::size_t number;  // 1-based
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    Line line{{}, number};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_blank(raw[i])) ++i;
      if (i == raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      std::size_t tok_start = i;
      while (i < raw.size() && !is_blank(raw[i])) ++i;
      line.tokens.push_back({raw.substr(tok_start, i - tok_start), tok_start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::size_t parse_dimension(const Token& tok, std::size_t line) {
  std::size_t value = 0;
  if (tok.text.empty() || tok.text.size() > 9) throw ParseError("invalid dimension", line, tok.column);
  for (char c : tok.text) {
    if (c < '0' || c > '9') throw ParseError("invalid dimension", line, tok.column);
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

ExactMatrix parse_matrix(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("missing 'ring' header", 1, 1);

  const Line& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0].text != "ring") {
    throw ParseError("expected 'ring Z' or 'ring Q[x]'", header.number, header.tokens[0].column);
  }
  Ring ring;
  if (header.tokens[1].text == "Z") {
    ring = Ring::Z;
  } else if (header.tokens[1].text == "Q[x]") {
    ring = Ring::Qx;
  } else {
    throw ParseError("unknown ring '" + std::string(header.tokens[1].text) + "'", header.number,
                     header.tokens[1].column);
  }

  if (lines.size() < 2) throw ParseError("missing dimension line", header.number + 1, 1);
  const Line& dims = lines[1];
  if (dims.tokens.size() != 2) throw ParseError("expected '<rows> <cols>'", dims.number, 1);
  const std::size_t m = parse_dimension(dims.tokens[0], dims.number);
  const std::size_t n = parse_dimension(dims.tokens[1], dims.number);

  const std::size_t expected_lines = n == 0 ? 0 : m;
  if (lines.size() - 2 != expected_lines) {
    const std::size_t where = lines.size() - 2 < expected_lines ? lines.back().number + 1
                                                                : lines[2 + expected_lines].number;
    throw ParseError("expected " + std::to_string(expected_lines) + " matrix rows, found " +
                         std::to_string(lines.size() - 2),
                     where, 1);
  }

  std::vector<RingElement> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < expected_lines; ++i) {
    const Line& line = lines[2 + i];
    if (line.tokens.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " entries, found " +
                           std::to_string(line.tokens.size()),
                       line.number, line.tokens.front().column);
    }
    for (const Token& tok : line.tokens) {
      try {
        entries.push_back(parse_element(tok.text, ring));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line.number, tok.column + e.column() - 1);
      }
    }
  }
  return ExactMatrix(ring, m, n, std::move(entries));
}

std::string serialize_matrix(const ExactMatrix& a) {
  std::string out = "ring ";
  out += ring_name(a.ring());
  out += '\n';
  out += std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  if (a.cols() == 0) return out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(a(i, j));
    }
    out += '\n';
  }
  return out;
}

ExactMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

}  // namespace ffmat
