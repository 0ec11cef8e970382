#pragma once

// Text formats:
//   cayley n            followed by n rows of n 0-based indices
//   perm d              followed by generators in cycle notation, one per line or
//                       comma separated, e.g. (1 2 3 4),(1 3)

#include <fstream>
#include <sstream>
#include <string>

#include "autcrit/group.hpp"
#include "autcrit/permutation.hpp"

namespace autcrit {

inline std::string write_cayley(const FiniteGroup& g) {
  std::ostringstream out;
  out << "cayley " << g.order() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string strip(std::string s) {
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline std::size_t parse_header(const std::string& line, const std::string& keyword) {
  std::istringstream in(line);
  std::string word;
  long long n = -1;
  if (!(in >> word >> n) || word != keyword || n < 1)
    throw Error(ErrorCode::ParseError, "expected header '" + keyword + " <n>', got '" + line + "'");
  std::string rest;
  if (in >> rest) throw Error(ErrorCode::ParseError, "trailing text in header '" + line + "'");
  return static_cast<std::size_t>(n);
}

}  // namespace detail

/// Parses and validates a `cayley` document. Element 0 must be the identity.
inline FiniteGroup read_cayley(const std::string& text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty Cayley file");
  const std::size_t n = detail::parse_header(lines[0], "cayley");
  if (lines.size() != n + 1)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - 1));
  std::vector<std::vector<Element>> rows(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::istringstream in(lines[a + 1]);
    long long v;
    while (in >> v) {
      if (v < 0) throw Error(ErrorCode::NotLatinSquare, "negative entry");
      rows[a].push_back(static_cast<Element>(v));
    }
    if (!in.eof()) throw Error(ErrorCode::ParseError, "non-numeric entry in row " + std::to_string(a));
  }
  for (std::size_t x = 0; x < n; ++x)
    if (rows[0].size() == n && rows[0][x] != x)
      throw Error(ErrorCode::NoIdentity, "row 0 is not the identity row");
  return FiniteGroup::from_cayley_table(rows);
}

inline std::pair<std::vector<Permutation>, std::size_t> read_permutation_generators(const std::string& text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty permutation file");
  const std::size_t d = detail::parse_header(lines[0], "perm");
  std::vector<Permutation> gens;
  // a line may hold several generators separated by top-level commas
  for (std::size_t i = 1; i < lines.size(); ++i) {
    int depth = 0;
    std::string cur;
    for (char c : lines[i]) {
      depth += (c == '(') - (c == ')');
      if (c == ',' && depth == 0) {
        gens.push_back(parse_cycles(cur, d));
        cur.clear();
      } else {
        cur += c;
      }
    }
    gens.push_back(parse_cycles(cur, d));
  }
  return {std::move(gens), d};
}

inline FiniteGroup read_perm(const std::string& text, std::size_t bound = kDefaultIngestBound) {
  auto [gens, d] = read_permutation_generators(text);
  return from_permutation_generators(gens, d, bound);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Dispatches on the header keyword.
inline FiniteGroup read_group_text(const std::string& text, std::size_t bound = kDefaultIngestBound) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty group file");
  if (lines[0].rfind("cayley", 0) == 0) return read_cayley(text);
  if (lines[0].rfind("perm", 0) == 0) return read_perm(text, bound);
  throw Error(ErrorCode::ParseError, "unknown group file header '" + lines[0] + "'");
}

}  // namespace autcrit
