// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "rearr/algorithm.hpp"
#include "rearr/bench.hpp"
#include "rearr/genome.hpp"
#include "rearr/graph.hpp"
#include "rearr/instance_gen.hpp"
#include "rearr/oracle.hpp"
#include "rearr/pairfile.hpp"
#include "rearr/steps.hpp"
#include "rearr/weights.hpp"

using namespace rearr;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) {
      ok = false;
      detail = why;
    }
  }
};

WeightScheme scheme(long long wr, long long wt, long long wd, long long p1, long long p2) {
  WeightScheme s;
  s.w_rev = Rational(wr);
  s.w_trans = Rational(wt);
  s.w_indel = Rational(wd);
  s.p1 = Rational(p1);
  s.p2 = Rational(p2);
  return s;
}

std::vector<WeightScheme> theorem_schemes() {
  return {scheme(2, 3, 2, 4, 1), scheme(2, 3, 1, 1, 1), scheme(1, 2, 1, 4, 1),
          scheme(2, 4, 1, 1, 1)};
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return n ? rng() % n : 0; }

Nucleotides pick_amount(std::mt19937_64& rng, Nucleotides cap) {
  return cap <= 0 ? 0 : static_cast<Nucleotides>(pick(rng, static_cast<std::uint64_t>(cap) + 1));
}

// ---------------------------------------------------------------- criterion 1

Outcome check_factors() {
  Outcome out;
  const std::vector<std::pair<WeightScheme, Rational>> table{
      {scheme(2, 3, 2, 4, 1), Rational(10, 3)},
      {scheme(2, 3, 1, 1, 1), Rational(8, 3)},
      {scheme(1, 2, 1, 4, 1), Rational(5, 2)},
      {scheme(2, 4, 1, 1, 1), Rational(2)},
  };
  for (const auto& [s, expect] : table) {
    const Rational got = approximation_factor(s);
    if (got != expect)
      out.fail("scheme " + scheme_label(s) + " gives " + format_rational(got) +
               ", expected " + format_rational(expect));
  }
  return out;
}

// ---------------------------------------------------------------- criterion 2

Outcome check_reference_graph() {
  Outcome out;
  const NormalizedPair pair = load_pair_file(TEST_DATA_DIR "/eight_gene.pair");
  const BreakpointGraph g = build_graph(pair.source, pair.target);

  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) out.fail(what);
  };
  expect(g.measures.pi_len == 7, "pi_len != 7");
  expect(g.measures.c == 4, "c != 4");
  expect(g.measures.c_g == 1, "c_g != 1");
  expect(g.measures.b == 4, "b != 4");
  expect(g.measures.b_g == 7, "b_g != 7");
  expect(g.origin_edges.size() == 8 && g.target_edges.size() == 8, "edge counts off");
  if (!out.ok) return out;

  const std::vector<Nucleotides> weights{3, 2, 0, 1, 2, 2, 3, 2};
  for (int a = 1; a <= 8; ++a) {
    expect(g.origin(a).weight == weights[static_cast<size_t>(a - 1)],
           "origin edge " + std::to_string(a) + " weight off");
    expect(g.origin(a).has_alpha == (a == 1), "origin filler flag off");
  }
  expect(g.target_for(2).run == std::vector<int>{3}, "run label of t_2 off");
  expect(g.target_for(5).run == std::vector<int>{6}, "run label of t_5 off");
  expect(g.target_for(0).weight() == 3, "t_0 weight off");

  int trivial_bad = 0, good_oriented = 0, labeled_convergent = 0, labeled_divergent = 0;
  for (const Cycle& c : g.cycles) {
    if (c.trivial() && !c.good() && c.has_alpha && c.balanced()) ++trivial_bad;
    if (c.good() && c.convergent && c.oriented && !c.trivial()) ++good_oriented;
    if (c.labeled() && c.convergent && !c.oriented && c.balance() > 0) ++labeled_convergent;
    if (c.labeled() && c.divergent() && c.balance() < 0) ++labeled_divergent;
  }
  expect(trivial_bad == 1 && good_oriented == 1 && labeled_convergent == 1 &&
             labeled_divergent == 1,
         "cycle classification off");
  return out;
}

// ---------------------------------------------------------------- criterion 3

Outcome check_worked_example() {
  Outcome out;
  const NormalizedPair pair = load_pair_file(TEST_DATA_DIR "/three_gene.pair");
  const RunReport report = run_sorting(pair.source, pair.target, scheme(2, 3, 2, 4, 1));
  if (report.total_weight != Rational(6))
    out.fail("weight " + format_rational(report.total_weight) + ", expected 6");
  int rev = 0, del = 0;
  for (const Op& op : report.sequence) {
    rev += std::holds_alternative<Reversal>(op);
    del += std::holds_alternative<Deletion>(op);
  }
  if (report.sequence.size() != 3 || rev != 1 || del != 2)
    out.fail("sequence shape is not one reversal plus two deletions");
  if (!(report.final_genome == pair.target)) out.fail("final genome misses the target");
  if (apply_sequence(pair.source, report.sequence) != pair.target)
    out.fail("sequence does not replay to the target");
  if (report.lower_bound != Rational(39, 10))
    out.fail("lower bound " + format_rational(report.lower_bound) + ", expected 39/10");
  return out;
}

// ---------------------------------------------------------------- criterion 4

InstanceSpec spec_for(std::uint64_t idx, int m_lo, int m_hi) {
  InstanceSpec spec;
  spec.m = m_lo + static_cast<int>(idx % static_cast<std::uint64_t>(m_hi - m_lo + 1));
  spec.k = static_cast<int>(idx / 3 % 4);
  spec.max_region = static_cast<Nucleotides>(idx / 7 % 4);
  spec.source_exclusive = static_cast<int>(idx / 5 % 2);
  spec.target_exclusive = static_cast<int>(idx / 11 % 2) % spec.m;
  if (spec.target_exclusive >= spec.m) spec.target_exclusive = 0;
  spec.seed = 0x9000 + idx;
  return spec;
}

// One random valid operation; returns false if this draw found nothing.
bool random_op(std::mt19937_64& rng, const Genome& g, int m, Op& out) {
  const int n = g.size();
  switch (pick(rng, 4)) {
    case 0: {  // reversal
      if (n < 1) return false;
      int i = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(n)));
      int j = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(n)));
      if (i > j) std::swap(i, j);
      out = Reversal{i, j, pick_amount(rng, g.region(i)), pick_amount(rng, g.region(j + 1))};
      return true;
    }
    case 1: {  // transposition
      if (n < 2) return false;
      std::set<int> idx;
      while (idx.size() < 3) idx.insert(1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(n) + 1)));
      auto it = idx.begin();
      const int i = *it++, j = *it++, k = *it;
      out = Transposition{i, j, k, pick_amount(rng, g.region(i)),
                          pick_amount(rng, g.region(j)), pick_amount(rng, g.region(k))};
      return true;
    }
    case 2: {  // deletion: filler span if any, else nucleotides
      std::vector<int> starts;
      for (int i = 1; i <= n; ++i)
        if (g.gene(i) == kAlpha) starts.push_back(i);
      if (!starts.empty() && pick(rng, 2) == 0) {
        const int i = starts[pick(rng, starts.size())];
        int j = i + 1;
        while (j <= n && g.gene(j) == kAlpha && pick(rng, 2) == 0) ++j;
        out = Deletion{i, j, pick_amount(rng, g.region(i)), pick_amount(rng, g.region(j))};
        return true;
      }
      const int i = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(n) + 1));
      const Nucleotides x = pick_amount(rng, g.region(i));
      const Nucleotides y = x + pick_amount(rng, g.region(i) - x);
      out = Deletion{i, i, x, y};
      return true;
    }
    default: {  // insertion: missing genes or bare nucleotides
      const int i = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(n) + 1));
      const Nucleotides x = pick_amount(rng, g.region(i));
      std::set<int> present;
      for (int gene : g.genes) present.insert(std::abs(gene));
      std::vector<int> missing;
      for (int id = 1; id <= m; ++id)
        if (!present.count(id)) missing.push_back(id);
      if (missing.empty() || pick(rng, 2) == 0) {
        out = Insertion{i, {}, {1 + pick_amount(rng, 2)}, x};
        return true;
      }
      const size_t take = 1 + pick(rng, std::min<std::uint64_t>(2, missing.size()));
      std::vector<int> genes;
      std::vector<Nucleotides> regions{pick_amount(rng, 2)};
      for (size_t t = 0; t < take; ++t) {
        const size_t at = pick(rng, missing.size());
        const int id = missing[at];
        missing.erase(missing.begin() + static_cast<long>(at));
        genes.push_back(pick(rng, 2) ? id : -id);
        regions.push_back(pick_amount(rng, 2));
      }
      out = Insertion{i, genes, regions, x};
      return true;
    }
  }
}

Outcome check_op_bounds() {
  Outcome out;
  std::mt19937_64 rng(0xB0D5);
  long long samples = 0;
  std::map<int, int> per_kind;
  for (std::uint64_t idx = 0; samples < 10000; ++idx) {
    const NormalizedPair pair = generate_instance(spec_for(idx, 3, 6), scheme(1, 1, 1, 1, 1));
    const BreakpointGraph before = build_graph(pair.source, pair.target);
    for (int shot = 0; shot < 4 && samples < 10000; ++shot) {
      Op op;
      if (!random_op(rng, pair.source, pair.target.size(), op)) continue;
      Genome next;
      try {
        next = rearr::apply(pair.source, op);
      } catch (const std::invalid_argument&) {
        continue;  // rejection sampling: the draw was out of bounds
      }
      const BreakpointGraph after = build_graph(next, pair.target);
      const auto [db, dbg] = delta_measures(before.measures, after.measures);
      ++samples;
      const int kind = static_cast<int>(op.index());
      ++per_kind[kind];
      int max_db = 0, max_dbg = 0;
      if (std::holds_alternative<Reversal>(op)) max_db = 1, max_dbg = 1;
      if (std::holds_alternative<Transposition>(op)) max_db = 2, max_dbg = 2;
      if (std::holds_alternative<Insertion>(op) || std::holds_alternative<Deletion>(op))
        max_db = 0, max_dbg = 1;
      if (db > max_db || dbg > max_dbg) {
        std::ostringstream why;
        why << "op " << to_string(op) << " on seed " << spec_for(idx, 3, 6).seed
            << " dropped (" << db << "," << dbg << "), cap (" << max_db << "," << max_dbg
            << ")";
        out.fail(why.str());
      }
    }
  }
  for (int kind : {0, 1, 2, 3})
    if (!per_kind.count(kind)) out.fail("sampler produced no ops of one kind");
  if (out.ok)
    out.detail = std::to_string(samples) + " random operations within their caps";
  return out;
}

// ---------------------------------------------------------------- criterion 5

Outcome check_step_guarantees() {
  Outcome out;
  const auto schemes = theorem_schemes();
  int done = 0;
  for (std::uint64_t idx = 0; done < 1000; ++idx) {
    InstanceSpec spec;
    spec.m = 2 + static_cast<int>(idx % 5);
    spec.k = 1 + static_cast<int>(idx / 2 % 4);
    spec.max_region = static_cast<Nucleotides>(idx / 3 % 4);
    spec.source_exclusive = static_cast<int>(idx % 3);
    spec.target_exclusive = static_cast<int>(idx / 5 % 2) % spec.m;
    spec.seed = 0x5000 + idx;
    const WeightScheme& s = schemes[idx % schemes.size()];
    const NormalizedPair pair = generate_instance(spec, s);
    RunReport report;
    try {
      report = run_sorting(pair.source, pair.target, s);
    } catch (const std::exception& e) {
      out.fail("seed " + std::to_string(spec.seed) + ": " + e.what());
      break;
    }
    for (const IterationLog& it : report.iterations) {
      const auto claim = step_claim(it.step);
      if (it.db < claim.first || it.dbg < std::max(claim.second, 1)) {
        out.fail("seed " + std::to_string(spec.seed) + " case " + std::to_string(it.step) +
                 " measured (" + std::to_string(it.db) + "," + std::to_string(it.dbg) +
                 ") under claim");
      }
    }
    if (static_cast<int>(report.iterations.size()) > report.initial.b_g)
      out.fail("seed " + std::to_string(spec.seed) + " ran more iterations than b_g");
    if (!(report.final_genome == pair.target))
      out.fail("seed " + std::to_string(spec.seed) + " did not sort");
    if (report.total_weight > report.factor * report.lower_bound &&
        report.lower_bound > Rational(0))
      out.fail("seed " + std::to_string(spec.seed) + " exceeded factor * lower bound");
    ++done;
    if (!out.ok) break;
  }
  if (out.ok) out.detail = std::to_string(done) + " runs met every per-case claim";
  return out;
}

// ---------------------------------------------------------------- criterion 6

Outcome check_certification() {
  Outcome out;
  const auto schemes = theorem_schemes();
  const WeightScheme neutral = scheme(1, 1, 1, 1, 1);
  const OracleLimits limits;
  int certified = 0;
  for (std::uint64_t idx = 0; certified < 500 && idx < 100000; ++idx) {
    InstanceSpec spec;
    spec.m = 2 + static_cast<int>(idx % 3);
    spec.k = 1 + static_cast<int>(idx / 2 % 3);
    spec.max_region = static_cast<Nucleotides>(idx / 5 % 3);
    spec.source_exclusive = static_cast<int>(idx / 3 % 2);
    spec.target_exclusive = static_cast<int>(idx / 7 % 2) % spec.m;
    spec.seed = 0x6000 + idx;
    const NormalizedPair pair = generate_instance(spec, neutral);
    if (pair.source.size() > limits.max_genes || pair.target.size() > limits.max_genes)
      continue;
    if (pair.source.total_nucleotides() + pair.target.total_nucleotides() > limits.max_total)
      continue;

    for (const WeightScheme& s : schemes) {
      const RunReport report = run_sorting(pair.source, pair.target, s);
      const Rational ub = report.total_weight;
      OracleResult oracle;
      try {
        oracle = exact_distance(pair.source, pair.target, s, limits, &ub);
      } catch (const std::exception& e) {
        out.fail("seed " + std::to_string(spec.seed) + " oracle: " + e.what());
        break;
      }
      if (report.lower_bound > oracle.distance)
        out.fail("seed " + std::to_string(spec.seed) + ": lower bound above optimum");
      if (oracle.distance > report.total_weight)
        out.fail("seed " + std::to_string(spec.seed) + ": optimum above the heuristic");
      if (report.total_weight > approximation_factor(s) * oracle.distance &&
          oracle.distance > Rational(0))
        out.fail("seed " + std::to_string(spec.seed) + " scheme " + scheme_label(s) +
                 ": ratio over the guaranteed factor");
    }
    ++certified;
    if (!out.ok) break;
  }
  if (certified < 500 && out.ok) out.fail("only " + std::to_string(certified) + " instances fit");
  if (out.ok)
    out.detail = std::to_string(certified) + " instances certified against the exact optimum";
  return out;
}

// ---------------------------------------------------------------- criterion 7

Outcome check_conservation() {
  Outcome out;
  std::mt19937_64 rng(0xC0DE);

  // Reversals and transpositions conserve content exactly.
  for (std::uint64_t idx = 0; idx < 400; ++idx) {
    const NormalizedPair pair = generate_instance(spec_for(idx, 3, 6), scheme(1, 1, 1, 1, 1));
    Genome g = pair.source;
    std::multiset<int> genes(g.genes.begin(), g.genes.end());
    const Nucleotides total = g.total_nucleotides();
    for (int t = 0; t < 6; ++t) {
      Op op;
      if (!random_op(rng, g, pair.target.size(), op)) continue;
      if (!std::holds_alternative<Reversal>(op) && !std::holds_alternative<Transposition>(op))
        continue;
      try {
        g = rearr::apply(g, op);
      } catch (const std::invalid_argument&) {
        continue;
      }
    }
    std::multiset<int> end_genes;
    for (int v : g.genes) end_genes.insert(v);
    std::multiset<int> abs_start, abs_end;
    for (int v : genes) abs_start.insert(std::abs(v));
    for (int v : end_genes) abs_end.insert(std::abs(v));
    if (abs_start != abs_end) out.fail("gene content changed under reversals/transpositions");
    if (g.total_nucleotides() != total) out.fail("nucleotide total changed");
    if (!out.ok) break;
  }

  // The reported sequences replay to the target.
  for (std::uint64_t idx = 0; out.ok && idx < 200; ++idx) {
    const NormalizedPair pair = generate_instance(spec_for(idx, 2, 5), scheme(2, 3, 2, 4, 1));
    const RunReport report = run_sorting(pair.source, pair.target, scheme(2, 3, 2, 4, 1));
    if (apply_sequence(pair.source, report.sequence) != pair.target) {
      out.fail("reported sequence fails to replay (seed " +
               std::to_string(spec_for(idx, 2, 5).seed) + ")");
    }
  }

  // Identical batch runs give identical bytes.
  if (out.ok) {
    std::vector<BenchSpec> specs{parse_bench_spec("m=4,k=3,max_region=2,seed=77,count=5")};
    std::vector<WeightScheme> schemes{scheme(2, 3, 2, 4, 1), scheme(1, 2, 1, 4, 1)};
    const BenchReport one = run_bench(specs, schemes, false);
    const BenchReport two = run_bench(specs, schemes, false);
    if (one.csv() != two.csv()) out.fail("batch output is not deterministic");
    if (one.violations != 0) out.fail("batch run flagged violations");
  }
  if (out.ok) out.detail = "conservation, replay and determinism all hold";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* label;
    Outcome (*check)();
  };
  const std::vector<Entry> entries{
      {1, "guaranteed factors", check_factors},
      {2, "reference graph reconstruction", check_reference_graph},
      {3, "worked example end to end", check_worked_example},
      {4, "single-operation drop caps", check_op_bounds},
      {5, "per-case claims over random runs", check_step_guarantees},
      {6, "certification against the exact optimum", check_certification},
      {7, "conservation, replay and determinism", check_conservation},
  };

  bool all_ok = true;
  for (const Entry& e : entries) {
    Outcome out;
    try {
      out = e.check();
    } catch (const std::exception& ex) {
      out.fail(std::string("unexpected exception: ") + ex.what());
    }
    std::cout << "criterion " << e.number << " (" << e.label
              << "): " << (out.ok ? "PASS" : "FAIL")
              << (out.detail.empty() ? "" : " — " + out.detail) << std::endl;
    all_ok = all_ok && out.ok;
  }
  return all_ok ? 0 : 1;
}
