#include <algorithm>

#include "doctest.h"
#include "rearr/genome.hpp"

using namespace rearr;

namespace {

Nucleotides total(const Genome& g) { return g.total_nucleotides(); }

std::vector<int> sorted_ids(const Genome& g) {
  std::vector<int> ids;
  for (int v : g.genes) ids.push_back(std::abs(v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

TEST_SUITE("genome") {
  TEST_CASE("reversal flips signs and splits the cut regions") {
    const Genome g({kAlpha, 1, -3, -2}, {1, 2, 2, 4, 2});
    const Genome r = apply(g, Reversal{3, 4, 1, 0});
    CHECK(r == Genome({kAlpha, 1, 2, 3}, {1, 2, 1, 4, 3}));
    CHECK(total(r) == total(g));
  }

  TEST_CASE("reversal inverse cuts at the same physical nucleotides") {
    const Genome g({1, 2}, {2, 0, 0});
    const Genome once = apply(g, Reversal{1, 2, 2, 0});
    CHECK(once == Genome({-2, -1}, {2, 0, 0}));
    // Mirroring the splits as (y, x) is not an inverse: y = 2 exceeds
    // the region it would cut. Cutting at x' = old region minus x is.
    CHECK_THROWS_AS(apply(once, Reversal{1, 2, 0, 2}), std::invalid_argument);
    CHECK(apply(once, Reversal{1, 2, 2, 0}) == g);
  }

  TEST_CASE("transposition swaps adjacent blocks with junction splits") {
    const Genome g({1, 2, 3}, {3, 0, 0, 0});
    const Genome r = apply(g, Transposition{1, 2, 4, 1, 0, 0});
    CHECK(r == Genome({2, 3, 1}, {1, 0, 2, 0}));
    CHECK(total(r) == total(g));
  }

  TEST_CASE("insertion places a payload inside a region") {
    const Genome g({1, 4}, {5, 0, 0});
    const Genome r = apply(g, Insertion{2, {2, 3}, {1, 0, 2}, 0});
    CHECK(r == Genome({1, 2, 3, 4}, {5, 1, 0, 2, 0}));
  }

  TEST_CASE("insertion of bare nucleotides grows one region") {
    const Genome g({1}, {0, 0});
    CHECK(apply(g, Insertion{1, {}, {3}, 0}) == Genome({1}, {3, 0}));
    CHECK(apply(g, Insertion{2, {}, {3}, 0}) == Genome({1}, {0, 3}));
  }

  TEST_CASE("insertion rejects duplicates and malformed payloads") {
    const Genome g({1, 2}, {0, 0, 0});
    CHECK_THROWS_AS(apply(g, Insertion{1, {2}, {0, 0}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply(g, Insertion{1, {-2}, {0, 0}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply(g, Insertion{1, {3}, {0}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply(g, Insertion{1, {kAlpha}, {0, 0}, 0}), std::invalid_argument);
  }

  TEST_CASE("deletion removes a filler span keeping the cut ends") {
    const Genome g({kAlpha, 1, 2, 3}, {1, 2, 1, 4, 3});
    CHECK(apply(g, Deletion{1, 2, 0, 0}) == Genome({1, 2, 3}, {2, 1, 4, 3}));
  }

  TEST_CASE("deletion of nucleotides only") {
    const Genome g({1, 2, 3}, {2, 1, 4, 3});
    CHECK(apply(g, Deletion{3, 3, 0, 2}) == Genome({1, 2, 3}, {2, 1, 2, 3}));
    CHECK_THROWS_AS(apply(g, Deletion{3, 3, 3, 2}), std::invalid_argument);  // x > y
  }

  TEST_CASE("deletion refuses spans holding real genes") {
    const Genome g({1, 2}, {0, 0, 0});
    CHECK_THROWS_AS(apply(g, Deletion{1, 2, 0, 0}), std::invalid_argument);
  }

  TEST_CASE("three-gene drawing sequence replays to its target") {
    const Genome start({kAlpha, 1, -3, -2}, {1, 2, 2, 4, 2});
    const OpSequence ops = {Reversal{3, 4, 1, 0}, Deletion{1, 2, 0, 0}, Deletion{3, 3, 0, 2}};
    CHECK(apply_sequence(start, ops) == Genome({1, 2, 3}, {2, 1, 2, 3}));
  }

  TEST_CASE("apply_sequence reports the failing op index") {
    const Genome g({1}, {0, 0});
    const OpSequence ops = {Insertion{1, {}, {1}, 0}, Reversal{2, 2, 0, 0}};
    try {
      apply_sequence(g, ops);
      FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("op 2") != std::string::npos);
    }
  }

  TEST_CASE("virtual insertions never touch a genome directly") {
    const Genome g({1}, {0, 0});
    CHECK_THROWS_AS(rearr::apply(g, Op{VirtualInsertion{0, 2}}), std::invalid_argument);
  }

  TEST_CASE("construction validates shape and signs") {
    CHECK_THROWS_AS(Genome({1}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Genome({1}, {-1, 0}), std::invalid_argument);
  }

  TEST_CASE("operations format compactly") {
    CHECK(to_string(Op{Reversal{3, 4, 1, 0}}) == "rev(3,4|1,0)");
    CHECK(to_string(Op{Deletion{1, 2, 0, 0}}) == "del(1,2|0,0)");
    CHECK(to_string(Op{VirtualInsertion{2, 2}}) == "virt(2|2)");
  }

  TEST_CASE("rearrangements preserve gene content") {
    const Genome g({2, kAlpha, -1, 3}, {1, 0, 2, 1, 3});
    const Genome r = apply(g, Reversal{1, 3, 1, 0});
    const Genome t = apply(g, Transposition{1, 2, 5, 0, 0, 1});
    CHECK(sorted_ids(r) == sorted_ids(g));
    CHECK(sorted_ids(t) == sorted_ids(g));
    CHECK(total(r) == total(g));
    CHECK(total(t) == total(g));
  }
}
