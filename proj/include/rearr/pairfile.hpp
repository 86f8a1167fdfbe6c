#pragma once

#include <string>

#include "rearr/normalize.hpp"

namespace rearr {

// Text format: two blocks headed ">source" and ">target", each with a
// "genes:" line (whitespace-separated names; bare or +NAME forward,
// -NAME or ~NAME reverse, "alpha" for filler) and an "intergenic:" line
// of |genes|+1 non-negative integers. '#' starts a comment. Errors
// carry 1-based line numbers.
NormalizedPair parse_pair_text(const std::string& text);

NormalizedPair load_pair_file(const std::string& path);

// Canonical form of a normalized pair: numeric names, source block
// first. parse(write(p)) == p, and write is idempotent under reparse.
std::string write_pair_text(const NormalizedPair& pair);

}  // namespace rearr
