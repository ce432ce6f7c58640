#pragma once

// Text format:
//   # comment lines anywhere
//   snf k=<int>[ partial]
//   cell c0 c1 ... c{k-1}
// One cell line per 0-complex, coefficients as signed decimal integers.

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "snf/model.hpp"

namespace snf {

class parse_error : public spec_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : spec_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  if (!s.empty() && s.front() == '+') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

inline FractalSpec parse(std::string_view text) {
  int k = 0;
  bool partial = false;
  bool have_header = false;
  std::vector<CycInt> cells;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = detail::split_spaces(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens[0] != "snf" || tokens.size() < 2 || tokens.size() > 3 || tokens[1].substr(0, 2) != "k=")
        throw parse_error(line_no, "expected header 'snf k=<int>'");
      if (!detail::parse_int(tokens[1].substr(2), k)) throw parse_error(line_no, "bad value for k");
      if (k < 3 || k > max_order)
        throw parse_error(line_no, "k must be in [3, " + std::to_string(max_order) + "], got " + std::to_string(k));
      if (tokens.size() == 3) {
        if (tokens[2] != "partial") throw parse_error(line_no, "unknown header flag '" + std::string(tokens[2]) + "'");
        partial = true;
      }
      have_header = true;
      continue;
    }
    if (tokens[0] != "cell") throw parse_error(line_no, "expected 'cell'");
    if (tokens.size() != static_cast<std::size_t>(k) + 1)
      throw parse_error(line_no, "expected " + std::to_string(k) + " coefficients, got " + std::to_string(tokens.size() - 1));
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      if (!detail::parse_int(tokens[static_cast<std::size_t>(j) + 1], coeffs[static_cast<std::size_t>(j)]))
        throw parse_error(line_no, "bad coefficient '" + std::string(tokens[static_cast<std::size_t>(j) + 1]) + "'");
      if (coeffs[static_cast<std::size_t>(j)] >= coeff_limit || coeffs[static_cast<std::size_t>(j)] <= -coeff_limit)
        throw parse_error(line_no, "coefficient out of range");
    }
    cells.emplace_back(k, std::move(coeffs));
  }
  if (!have_header) throw parse_error(line_no, "missing header");
  if (cells.empty()) throw parse_error(line_no, "no cells");
  return FractalSpec(k, cells, partial);
}

/// Canonical text; `comments` are emitted as leading '# ' lines.
inline std::string serialize(const FractalSpec& spec, const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "snf k=" << spec.k() << (spec.partial() ? " partial" : "") << '\n';
  for (const auto& cell : spec.cells()) {
    os << "cell";
    for (auto v : cell.barycenter.coeffs()) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace snf
