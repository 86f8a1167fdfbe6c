#include <set>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "rearr/algorithm.hpp"
#include "rearr/genome.hpp"
#include "rearr/pairfile.hpp"
#include "rearr/weights.hpp"

using namespace rearr;

namespace {

WeightScheme scheme(long long wr, long long wt, long long wd, long long p1, long long p2) {
  WeightScheme s;
  s.w_rev = Rational(wr);
  s.w_trans = Rational(wt);
  s.w_indel = Rational(wd);
  s.p1 = Rational(p1);
  s.p2 = Rational(p2);
  return s;
}

std::string sequence_text(const OpSequence& ops) {
  std::string out;
  for (const Op& op : ops) {
    if (!out.empty()) out += "; ";
    out += to_string(op);
  }
  return out;
}

}  // namespace

TEST_SUITE("algorithm") {
  TEST_CASE("three-gene pair sorts in three operations") {
    const NormalizedPair pair = load_pair_file(TEST_DATA_DIR "/three_gene.pair");
    const WeightScheme s = scheme(2, 3, 2, 4, 1);
    const RunReport report = run_sorting(pair.source, pair.target, s);

    CHECK(report.total_weight == Rational(6));
    CHECK(report.lower_bound == Rational(39, 10));
    CHECK(report.factor == Rational(10, 3));
    CHECK(report.final_genome == pair.target);
    CHECK(apply_sequence(pair.source, report.sequence) == pair.target);

    int reversals = 0, deletions = 0;
    for (const Op& op : report.sequence) {
      if (std::holds_alternative<Reversal>(op)) ++reversals;
      if (std::holds_alternative<Deletion>(op)) ++deletions;
    }
    CHECK(reversals == 1);
    CHECK(deletions == 2);
    CHECK(report.sequence.size() == 3);

    std::multiset<int> steps;
    for (const IterationLog& it : report.iterations) {
      steps.insert(it.step);
      CHECK(it.dbg >= 1);
    }
    CHECK(steps == std::multiset<int>{1, 1, 6});
    CHECK(report.materialized.empty());
  }

  TEST_CASE("eight-gene pair stays under the guaranteed factor") {
    const NormalizedPair pair = load_pair_file(TEST_DATA_DIR "/eight_gene.pair");
    const WeightScheme s = scheme(1, 2, 1, 4, 1);
    const RunReport report = run_sorting(pair.source, pair.target, s);

    CHECK(report.initial.b == 4);
    CHECK(report.initial.b_g == 7);
    CHECK(report.lower_bound == Rational(32, 5));
    // alg <= potential / worst per-case rate = 32 / 2.
    CHECK(report.total_weight <= Rational(16));
    CHECK(report.total_weight == s.sequence_weight(report.sequence));
    CHECK(static_cast<int>(report.iterations.size()) <= report.initial.b_g);
    for (const IterationLog& it : report.iterations) CHECK(it.dbg >= 1);
    CHECK(report.final_genome == pair.target);
    CHECK(apply_sequence(pair.source, report.sequence) == pair.target);
  }

  TEST_CASE("identical genomes need nothing") {
    const Genome g({1, 2, 3}, {1, 0, 2, 1});
    const RunReport report = run_sorting(g, g, scheme(2, 3, 2, 4, 1));
    CHECK(report.sequence.empty());
    CHECK(report.iterations.empty());
    CHECK(report.total_weight == Rational(0));
    CHECK(report.lower_bound == Rational(0));
  }

  TEST_CASE("pure nucleotide shortfall costs one insertion") {
    const Genome src({1}, {0, 0});
    const Genome tgt({1}, {3, 0});
    const RunReport report = run_sorting(src, tgt, scheme(2, 3, 2, 4, 1));
    REQUIRE(report.sequence.size() == 1);
    CHECK(std::holds_alternative<Insertion>(report.sequence[0]));
    CHECK(report.total_weight == Rational(2));
    CHECK(report.final_genome == tgt);
  }

  TEST_CASE("virtual insertions settle as trailing deletions") {
    const Genome src({3, 2, 1}, {1, 1, 1, 2});
    const Genome tgt({1, 2, 3}, {1, 1, 1, 1});
    const RunReport report = run_sorting(src, tgt, scheme(2, 3, 2, 4, 1));
    CHECK(report.materialized.size() == 1);
    CHECK(std::holds_alternative<Deletion>(report.materialized.back()));
    CHECK(to_string(report.sequence.back()) == to_string(report.materialized.back()));
    CHECK(report.total_weight == scheme(2, 3, 2, 4, 1).sequence_weight(report.sequence));
    CHECK(report.final_genome == tgt);
    CHECK(apply_sequence(src, report.sequence) == tgt);
  }

  TEST_CASE("runs are deterministic") {
    const NormalizedPair pair = load_pair_file(TEST_DATA_DIR "/eight_gene.pair");
    const WeightScheme s = scheme(2, 3, 2, 4, 1);
    const RunReport a = run_sorting(pair.source, pair.target, s);
    const RunReport b = run_sorting(pair.source, pair.target, s);
    CHECK(sequence_text(a.sequence) == sequence_text(b.sequence));
    CHECK(a.total_weight == b.total_weight);
  }
}
