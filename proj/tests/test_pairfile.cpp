#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "rearr/genome.hpp"
#include "rearr/pairfile.hpp"

using namespace rearr;

namespace {

const char* kThreeGene =
    ">source\n"
    "genes: alpha +1 -3 -2\n"
    "intergenic: 1 2 2 4 2\n"
    ">target\n"
    "genes: +1 +2 +3\n"
    "intergenic: 2 1 2 3\n";

}  // namespace

TEST_SUITE("pairfile") {
  TEST_CASE("three-gene text parses to the normalized pair") {
    const NormalizedPair pair = parse_pair_text(kThreeGene);
    CHECK(pair.source.genes == std::vector<int>{kAlpha, 1, -3, -2});
    CHECK(pair.source.regions == std::vector<Nucleotides>{1, 2, 2, 4, 2});
    CHECK(pair.target.genes == std::vector<int>{1, 2, 3});
    CHECK(pair.target.regions == std::vector<Nucleotides>{2, 1, 2, 3});
  }

  TEST_CASE("fixture files load") {
    const NormalizedPair pair = load_pair_file(TEST_DATA_DIR "/eight_gene.pair");
    CHECK(pair.source.genes == std::vector<int>{kAlpha, 1, -8, 4, 2, -7, -9, 5});
    CHECK(pair.source.regions == std::vector<Nucleotides>{1, 2, 2, 0, 1, 2, 2, 3, 2});
    CHECK(pair.target.regions == std::vector<Nucleotides>{3, 0, 1, 1, 3, 0, 2, 1, 3, 1});
  }

  TEST_CASE("comments, blank lines and the tilde marker are accepted") {
    const std::string text =
        "# leading comment\n"
        ">source\n"
        "\n"
        "genes: B ~A   # reversed A, forward B\n"
        "intergenic: 0 1 0\n"
        ">target\n"
        "genes: A B\n"
        "intergenic: 0 0 0\n";
    const NormalizedPair pair = parse_pair_text(text);
    CHECK(pair.source.genes == std::vector<int>{2, -1});
    const std::string dashed =
        ">source\ngenes: B -A\nintergenic: 0 1 0\n"
        ">target\ngenes: A B\nintergenic: 0 0 0\n";
    CHECK(parse_pair_text(dashed).source.genes == pair.source.genes);
  }

  TEST_CASE("writing is canonical and stable under reparse") {
    const NormalizedPair pair = parse_pair_text(kThreeGene);
    const std::string text = write_pair_text(pair);
    CHECK(text == std::string(kThreeGene));
    const NormalizedPair again = parse_pair_text(text);
    CHECK(again.source == pair.source);
    CHECK(again.target == pair.target);
    CHECK(write_pair_text(again) == text);
  }

  TEST_CASE("errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_pair_text("genes: A\n"),
                         "line 1: content before any >source/>target header",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_pair_text(">source\ngenes: A +\n"),
                         "line 2: gene token '+' has no name", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_pair_text(">source\ngenes: A\nintergenic: 0 x\n"),
                         "line 3: bad intergenic value 'x'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_pair_text(">source\ngenes: A\nintergenic: 0 -2\n"),
                         "line 3: negative intergenic value -2", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_pair_text(">source\ngenes: A\ngenes: B\n"),
                         "line 3: second genes: line in source", std::invalid_argument);
  }

  TEST_CASE("block-level problems name the genome") {
    const std::string wrong_count =
        ">source\ngenes: A B\nintergenic: 0 0\n"
        ">target\ngenes: A B\nintergenic: 0 0 0\n";
    CHECK_THROWS_WITH_AS(parse_pair_text(wrong_count),
                         "source needs 3 intergenic values, got 2", std::invalid_argument);
    const std::string no_target = ">source\ngenes: A\nintergenic: 0 0\n";
    CHECK_THROWS_WITH_AS(parse_pair_text(no_target),
                         "target block is missing its genes: line", std::invalid_argument);
    const std::string dup =
        ">source\ngenes: A A\nintergenic: 0 0 0\n"
        ">target\ngenes: A\nintergenic: 0 0\n";
    CHECK_THROWS_AS(parse_pair_text(dup), std::invalid_argument);
    CHECK_THROWS_AS(load_pair_file("/nonexistent/x.pair"), std::invalid_argument);
  }
}
