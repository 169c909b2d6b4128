#pragma once

// Facet-list text format:
//
//   # comment
//   n 6            (optional; default is the largest label seen)
//   1 2 4
//   1 2 5
//
// One facet per line, whitespace-separated positive integers. Blank lines
// and lines starting with '#' are ignored.

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srlc/complex.hpp"

namespace srlc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long parse_int(std::string_view tok, int line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

inline SimplicialComplex parse_facets(std::string_view text) {
  std::vector<std::vector<int>> facets;
  long declared_n = -1;
  int max_label = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().starts_with("#")) continue;
    if (toks.front() == "n") {
      if (toks.size() != 2) throw ParseError(line_no, "header must read 'n <count>'");
      if (declared_n >= 0) throw ParseError(line_no, "duplicate 'n' header");
      if (!facets.empty()) throw ParseError(line_no, "'n' header must precede the facets");
      declared_n = detail::parse_int(toks[1], line_no);
      if (declared_n <= 0 || declared_n > kMaxVertices)
        throw ParseError(line_no, "vertex count must be in 1.." + std::to_string(kMaxVertices));
      continue;
    }
    std::vector<int> facet;
    for (auto tok : toks) {
      long v = detail::parse_int(tok, line_no);
      if (v <= 0) throw ParseError(line_no, "vertex labels must be positive");
      if (v > kMaxVertices || (declared_n > 0 && v > declared_n))
        throw ParseError(line_no, "vertex label " + std::to_string(v) + " out of range");
      for (int w : facet)
        if (w == v) throw ParseError(line_no, "repeated vertex " + std::to_string(v));
      facet.push_back(static_cast<int>(v));
      max_label = std::max(max_label, static_cast<int>(v));
    }
    facets.push_back(std::move(facet));
  }
  int n = declared_n > 0 ? static_cast<int>(declared_n) : max_label;
  if (n <= 0) throw ParseError(line_no, "no vertices: the complex would be void");
  return SimplicialComplex::from_facets(n, facets);
}

inline SimplicialComplex read_facet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open facet file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_facets(buf.str());
}

inline std::string format_facets(const SimplicialComplex& complex) {
  std::string out = "n " + std::to_string(complex.vertex_count()) + "\n";
  for (const auto& f : complex.facets()) {
    for (std::size_t i = 0; i < f.vertices().size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f.vertices()[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace srlc
