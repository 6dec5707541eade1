#pragma once

#include <string>
#include <string_view>

#include "rbd/design.hpp"

namespace rbd {

// Plain-text design format:
//   # label            (first comment line carries the label; later comments are ignored)
//   1 2 3 4 5 6        (one block per line, 1-based varieties, whitespace separated)
//   ...
//                      (one or more blank lines end a replicate)
// k is the length of the first block line; v = k * (blocks in the first replicate).
// Throws ParseError with a 1-based line number.
ResolvableDesign read_design(std::string_view text);

// Canonical text: "# label" when a label is set, sorted blocks with single spaces,
// exactly one blank line between replicates, trailing newline.
std::string write_design(const ResolvableDesign& design);

ResolvableDesign read_design_file(const std::string& path);
void write_design_file(const std::string& path, const ResolvableDesign& design);

}  // namespace rbd
