#pragma once

#include <utility>
#include <vector>

#include "rearr/genome.hpp"
#include "rearr/graph.hpp"
#include "rearr/weights.hpp"

namespace rearr {

// One round of the sorting loop: which case fired, the ops it emitted,
// and the measured drops in b / b_g.
struct IterationLog {
  int step = 0;
  OpSequence ops;
  int db = 0;
  int dbg = 0;
};

struct RunReport {
  // Real operations, in order, including the trailing deletions that
  // settle virtual insertions. Applying them to the input source yields
  // final_genome == target.
  OpSequence sequence;
  Rational total_weight{0};
  std::vector<IterationLog> iterations;
  OpSequence materialized;
  Rational lower_bound{0};
  Rational factor{0};
  Measures initial;
  Genome final_genome;
};

// (p1 * b_g + p2 * b) / delta_max for the pair's starting graph.
Rational weighted_lower_bound(const Genome& source, const Genome& target,
                              const WeightScheme& scheme);

// Sorts source into target by repeatedly applying the highest-priority
// applicable case to the leftmost qualifying cycle. Throws defect_error
// if a case misses its claimed drop or the potential stalls.
RunReport run_sorting(const Genome& source, const Genome& target, const WeightScheme& scheme);

}  // namespace rearr
