#include "sqs/perm_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>

namespace sqs {

namespace {

struct ParsedLine {
  std::size_t line_no = 0;
  bool cycles = false;
  std::vector<Point> images;
  std::vector<std::vector<Point>> cycle_list;
};

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("generator file line " + std::to_string(line_no) + ": " + what);
}

Point parse_point(std::string_view tok, std::size_t line_no) {
  Point v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line_no, "bad point '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

ParsedLine parse_line(std::string_view line, std::size_t line_no) {
  ParsedLine out;
  out.line_no = line_no;
  if (line.front() != '(') {
    for (auto tok : split_ws(line)) out.images.push_back(parse_point(tok, line_no));
    return out;
  }
  out.cycles = true;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    if (line[i] != '(') fail(line_no, "expected '(' in cycle notation");
    auto close = line.find(')', i);
    if (close == std::string_view::npos) fail(line_no, "unterminated cycle");
    std::vector<Point> cycle;
    for (auto tok : split_ws(line.substr(i + 1, close - i - 1))) cycle.push_back(parse_point(tok, line_no));
    if (!cycle.empty()) out.cycle_list.push_back(std::move(cycle));
    i = close + 1;
  }
  return out;
}

}  // namespace

std::vector<Permutation> parse_generators(std::string_view text) {
  std::vector<ParsedLine> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(parse_line(line, line_no));
  }

  std::optional<std::size_t> degree;
  for (const auto& l : lines) {
    if (l.cycles) continue;
    if (degree && *degree != l.images.size()) fail(l.line_no, "image list length differs from earlier lines");
    degree = l.images.size();
  }
  if (!degree) {
    std::size_t n = 0;
    for (const auto& l : lines) {
      for (const auto& c : l.cycle_list) {
        for (Point x : c) n = std::max<std::size_t>(n, x + 1);
      }
    }
    degree = n;
  }

  std::vector<Permutation> gens;
  for (const auto& l : lines) {
    try {
      gens.push_back(l.cycles ? Permutation::from_cycles(*degree, l.cycle_list) : Permutation(l.images));
    } catch (const std::exception& e) {
      fail(l.line_no, e.what());
    }
  }
  return gens;
}

std::string format_generators(const std::vector<Permutation>& generators) {
  std::string out;
  for (const auto& g : generators) {
    out += g.to_image_string();
    out += '\n';
  }
  return out;
}

}  // namespace sqs
