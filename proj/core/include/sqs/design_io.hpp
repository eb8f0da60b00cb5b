#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sqs/designs.hpp"

namespace sqs {

/// One line: {"v": 8, "k": 4, "blocks": [[0,1,2,3], [0,1,4,5]]} plus a newline.
std::string format_design(const Design& d);

/// Parses the design file format. Throws std::invalid_argument for malformed
/// JSON (with its line number) or blocks that are not in canonical form.
Design parse_design(std::string_view text);

/// Throws std::runtime_error when the file cannot be opened or written.
Design read_design_file(const std::filesystem::path& path);
void write_design_file(const std::filesystem::path& path, const Design& d);

}  // namespace sqs
