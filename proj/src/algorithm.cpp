#include "rearr/algorithm.hpp"

#include <sstream>

#include "rearr/defect.hpp"
#include "rearr/steps.hpp"

namespace rearr {

namespace {

// Priority order of the sorting cases. Lower value fires first; the
// leftmost qualifying cycle is chosen within a priority.
int cycle_priority(const Cycle& c) {
  if (c.trivial() && !c.good()) return 1;
  if (c.clean() && !c.balanced()) return 2;
  if (c.oriented && c.good()) return 3;
  if (c.oriented && !c.good()) return 4;
  if (c.divergent() && c.labeled()) return 5;
  if (c.divergent() && c.good()) return 6;
  return 0;  // convergent non-oriented non-trivial, or finished
}

}  // namespace

Rational weighted_lower_bound(const Genome& source, const Genome& target,
                              const WeightScheme& scheme) {
  scheme.validate();
  const BreakpointGraph g = build_graph(source, target);
  return (scheme.p1 * Rational(g.measures.b_g) + scheme.p2 * Rational(g.measures.b)) /
         delta_max(scheme);
}

RunReport run_sorting(const Genome& source, const Genome& target, const WeightScheme& scheme) {
  scheme.validate();
  RunReport report;

  Genome cur = source;
  VirtualLedger ledger;
  BreakpointGraph graph = build_graph(cur, target, ledger);

  report.initial = graph.measures;
  report.lower_bound = (scheme.p1 * Rational(graph.measures.b_g) +
                        scheme.p2 * Rational(graph.measures.b)) /
                       delta_max(scheme);
  report.factor = approximation_factor(scheme);

  const int max_iterations = graph.measures.b_g;
  while (!graph.done()) {
    if (static_cast<int>(report.iterations.size()) >= max_iterations)
      throw defect_error("sorting loop exceeded its iteration bound");

    const StepContext ctx{cur, target, ledger, graph, scheme};
    StepPlan plan;
    int chosen_cycle = -1;
    for (int priority = 1; priority <= 6 && chosen_cycle < 0; ++priority) {
      for (const Cycle& c : graph.cycles) {
        if (cycle_priority(c) != priority) continue;
        chosen_cycle = c.id;
        switch (priority) {
          case 1: plan = step_trivial_bad(ctx, c.id); break;
          case 2: plan = step_unbalanced_clean(ctx, c.id); break;
          case 3: plan = step_good_oriented(ctx, c.id); break;
          case 4: plan = step_bad_oriented(ctx, c.id); break;
          case 5: plan = step_labeled_divergent(ctx, c.id); break;
          case 6: plan = step_good_divergent(ctx, c.id); break;
        }
        break;
      }
    }
    if (chosen_cycle < 0) plan = step_no_divergent(ctx);

    const Measures before = graph.measures;
    for (const Op& op : plan.ops) {
      if (const auto* vi = std::get_if<VirtualInsertion>(&op)) {
        ledger.add(vi->target_gene, vi->amount);
      } else {
        cur = rearr::apply(cur, op);
        report.sequence.push_back(op);
      }
    }
    graph = build_graph(cur, target, ledger);
    const auto [db, dbg] = delta_measures(before, graph.measures);
    if (db < plan.claimed_db || dbg < plan.claimed_dbg) {
      std::ostringstream msg;
      msg << "step " << plan.step << " measured (" << db << "," << dbg
          << ") below its claim (" << plan.claimed_db << "," << plan.claimed_dbg << ")";
      throw defect_error(msg.str());
    }
    if (dbg < 1) throw defect_error("sorting iteration left b_g unchanged");
    report.iterations.push_back(IterationLog{plan.step, plan.ops, db, dbg});
  }

  report.materialized = materialize_virtual_insertions(cur, target, ledger);
  for (const Op& op : report.materialized) {
    cur = rearr::apply(cur, op);
    report.sequence.push_back(op);
  }
  if (!(cur == target)) throw defect_error("sorting finished away from the target");

  report.final_genome = cur;
  report.total_weight = scheme.sequence_weight(report.sequence);
  return report;
}

}  // namespace rearr
