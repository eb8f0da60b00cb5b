#include "sqs/design_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sqs {

std::string format_design(const Design& d) {
  std::string out = "{\"v\": " + std::to_string(d.v()) + ", \"k\": " + std::to_string(d.k()) + ", \"blocks\": [";
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    if (i > 0) out += ", ";
    out += '[';
    const auto& b = d.block(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(b[j]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

Design parse_design(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw std::invalid_argument("design file line " + std::to_string(line) + ": malformed JSON");
  }
  auto bad = [](const std::string& what) { return std::invalid_argument("design file: " + what); };
  if (!j.is_object()) throw bad("expected an object with v, k, blocks");
  for (const char* key : {"v", "k"}) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) throw bad(std::string("missing or invalid \"") + key + "\"");
  }
  if (!j.contains("blocks") || !j["blocks"].is_array()) throw bad("missing or invalid \"blocks\"");
  const auto v = j["v"].get<std::size_t>();
  const auto k = j["k"].get<std::size_t>();
  if (k == 0 || k > v) throw bad("need 1 <= k <= v");
  std::vector<Block> blocks;
  for (const auto& jb : j["blocks"]) {
    if (!jb.is_array()) throw bad("block " + std::to_string(blocks.size()) + " is not a list");
    Block b;
    for (const auto& p : jb) {
      if (!p.is_number_unsigned()) throw bad("block " + std::to_string(blocks.size()) + " has a non-integer point");
      b.push_back(p.get<Point>());
    }
    blocks.push_back(std::move(b));
  }
  if (auto err = canonical_form_error(v, k, blocks)) {
    throw bad(*err + "; canonical form has each block sorted, blocks in lexicographic order, no duplicates");
  }
  return Design(v, k, std::move(blocks));
}

Design read_design_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_design(ss.str());
}

void write_design_file(const std::filesystem::path& path, const Design& d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_design(d);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sqs
