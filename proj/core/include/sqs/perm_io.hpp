#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sqs/perm.hpp"

namespace sqs {

/// Reads a generator file: one permutation per line, either as an image list
/// "0 2 1 3" or in cycle notation "(0 1)(2 3)". Blank lines and lines starting
/// with '#' are skipped. Cycle-notation lines take the degree of the image-list
/// lines, or 1 + the largest point mentioned when there are none.
///
/// Throws std::invalid_argument naming the first offending line.
std::vector<Permutation> parse_generators(std::string_view text);

/// One image list per line.
std::string format_generators(const std::vector<Permutation>& generators);

}  // namespace sqs
