#pragma once

#include <string>
#include <vector>

#include "mtdual/mtcode.hpp"

namespace mtdual::cli {

/// Contents of a CodeSpec JSON file:
///   {"field": {"p": 2, "e": 4, "modulus": [1,1,0,0,1], "generator": [0,1,0,0]},
///    "shifts": ["1", "g^10", "g^10"], "block_lengths": [3, 4, 4],
///    "rows": [["g^5 + g^10*x + x^2", "0", "..."], ...]}
struct CodeSpec {
  FieldPtr field;
  std::vector<FieldElement> shifts;
  std::vector<int> block_lengths;
  std::vector<PolyVector> rows;

  MTCode code() const { return MTCode::from_generator_rows(field, rows, shifts, block_lengths); }
};

/// Throws ParseError on malformed JSON or notation, PreconditionError on
/// mathematically invalid content (reducible modulus, zero shift, ...).
CodeSpec parse_codespec(const std::string& text);
CodeSpec load_codespec(const std::string& path);

}  // namespace mtdual::cli
