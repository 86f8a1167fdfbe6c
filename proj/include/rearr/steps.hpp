#pragma once

#include <utility>

#include "rearr/genome.hpp"
#include "rearr/graph.hpp"
#include "rearr/weights.hpp"

namespace rearr {

struct StepContext {
  const Genome& source;
  const Genome& target;
  const VirtualLedger& ledger;
  const BreakpointGraph& graph;
  const WeightScheme& weights;
};

// A short operation sequence plus the (b drop, b_g drop) its
// construction guarantees. Replays must measure at least the claim.
struct StepPlan {
  int step = 0;  // 1..7
  OpSequence ops;
  int claimed_db = 0;
  int claimed_dbg = 0;
};

// The per-step guaranteed (b drop, b_g drop).
std::pair<int, int> step_claim(int step);

// Step 1: a trivial cycle that is unbalanced or labeled; 1-2 indels.
StepPlan step_trivial_bad(const StepContext& ctx, int cycle_id);

// Step 2: an unbalanced clean cycle; one indel (real insertion when the
// source side is short, virtual insertion otherwise).
StepPlan step_unbalanced_clean(const StepContext& ctx, int cycle_id);

// Step 3: a good oriented cycle; one splitting transposition when it
// lands all pieces balanced, else the cheaper feasible of 3
// transpositions or 1 transposition + 2 indels.
StepPlan step_good_oriented(const StepContext& ctx, int cycle_id);

// Step 4: a bad oriented cycle; 1 transposition + up to 2 indels.
StepPlan step_bad_oriented(const StepContext& ctx, int cycle_id);

// Step 5: a labeled divergent cycle; 1 reversal + up to 1 indel.
StepPlan step_labeled_divergent(const StepContext& ctx, int cycle_id);

// Step 6: a good divergent cycle; exactly one reversal.
StepPlan step_good_divergent(const StepContext& ctx, int cycle_id);

// Step 7: no divergent cycle anywhere; up to 3 reversals + up to 2
// indels, chosen to maximize potential drop per weight.
StepPlan step_no_divergent(const StepContext& ctx);

// Turns the ledger into real trailing deletions (ascending by gene);
// applying them to final_source must yield target exactly, else a
// defect is raised.
OpSequence materialize_virtual_insertions(const Genome& final_source, const Genome& target,
                                          const VirtualLedger& ledger);

}  // namespace rearr
