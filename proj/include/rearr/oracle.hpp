#pragma once

#include <string>

#include "rearr/genome.hpp"
#include "rearr/weights.hpp"

namespace rearr {

// Size guards for the exhaustive search; instances beyond them are
// rejected up front rather than ground through.
struct OracleLimits {
  int max_genes = 4;             // genes per genome (source and target)
  Nucleotides max_total = 12;    // combined nucleotide total of the pair
  long long max_expansions = 4000000;  // dequeued states before giving up
};

struct OracleResult {
  Rational distance{0};
  OpSequence witness;           // replayed against the source before returning
  long long states_expanded = 0;
  std::string exactness_caveat;  // the bounded-model fine print
};

// Minimum-weight operation sequence from source to target, found by
// uniform-cost search over whole genomes. Moves cover every reversal,
// transposition, deletion of filler spans, and insertion of missing
// target runs (both orientations, all region splits) whose intermediate
// genomes keep region weights and totals within a generous cap.
// upper_bound, when given, prunes states that already cost more.
OracleResult exact_distance(const Genome& source, const Genome& target,
                            const WeightScheme& scheme, const OracleLimits& limits = {},
                            const Rational* upper_bound = nullptr);

}  // namespace rearr
