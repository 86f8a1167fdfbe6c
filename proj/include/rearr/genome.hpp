#pragma once

#include <string>
#include <variant>
#include <vector>

namespace rearr {

// Nucleotide counts are non-negative; signed type so arithmetic on
// differences doesn't need casts.
using Nucleotides = long long;

// Gene id used for source-exclusive filler genes. Id 0 is its own
// negation, so filler genes compare equal regardless of orientation.
constexpr int kAlpha = 0;

// A genome: n signed genes and n+1 intergenic regions. region(i) holds
// the nucleotides immediately preceding gene i; region(n+1) trails the
// last gene. All accessors are 1-based to match the operation formulas.
struct Genome {
  std::vector<int> genes;
  std::vector<Nucleotides> regions;

  Genome() = default;
  Genome(std::vector<int> g, std::vector<Nucleotides> r);

  int size() const { return static_cast<int>(genes.size()); }
  int gene(int i) const { return genes[static_cast<size_t>(i - 1)]; }
  int& gene(int i) { return genes[static_cast<size_t>(i - 1)]; }
  Nucleotides region(int i) const { return regions[static_cast<size_t>(i - 1)]; }
  Nucleotides& region(int i) { return regions[static_cast<size_t>(i - 1)]; }

  Nucleotides total_nucleotides() const;

  // Throws std::invalid_argument on shape/negativity violations.
  void validate() const;

  bool operator==(const Genome&) const = default;
};

std::string to_string(const Genome& g);

// Reverses genes i..j (signs flip), keeping x nucleotides of region i on
// the left cut and y nucleotides of region j+1 on the right cut.
struct Reversal {
  int i = 0, j = 0;
  Nucleotides x = 0, y = 0;
};

// Swaps the adjacent blocks [i, j) and [j, k); x/y/z split regions
// i/j/k at the three cut points.
struct Transposition {
  int i = 0, j = 0, k = 0;
  Nucleotides x = 0, y = 0, z = 0;
};

// Inserts genes (with interior regions) into region i, which is split
// at x; regions has |genes|+1 entries padding both ends of the new
// material.
struct Insertion {
  int i = 0;
  std::vector<int> genes;
  std::vector<Nucleotides> regions;
  Nucleotides x = 0;
};

// Deletes genes i..j-1 (i == j deletes nucleotides only) plus the
// nucleotides between the cuts: keeps x of region i and the part of
// region j past y.
struct Deletion {
  int i = 0, j = 0;
  Nucleotides x = 0, y = 0;
};

// Bookkeeping op: adds nucleotides to the target-side account of the
// adjacency following target gene target_gene. Not applicable to a
// genome directly; materialized as a real deletion at the end of a run.
struct VirtualInsertion {
  int target_gene = 0;
  Nucleotides amount = 0;
};

using Op = std::variant<Reversal, Transposition, Insertion, Deletion, VirtualInsertion>;
using OpSequence = std::vector<Op>;

// All apply() overloads validate parameters and throw
// std::invalid_argument with a description on violation.
Genome apply(const Genome& g, const Reversal& op);
Genome apply(const Genome& g, const Transposition& op);
Genome apply(const Genome& g, const Insertion& op);
Genome apply(const Genome& g, const Deletion& op);
Genome apply(const Genome& g, const Op& op);

// Applies ops left to right; error messages carry the 1-based op index.
Genome apply_sequence(const Genome& g, const OpSequence& ops);

std::string to_string(const Op& op);

}  // namespace rearr
