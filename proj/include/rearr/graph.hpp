#pragma once

#include <map>
#include <string>
#include <vector>

#include "rearr/genome.hpp"

namespace rearr {

// Pending target-side weight additions, keyed by the gene x whose
// following adjacency (target edge t_x) absorbs them. Turned into real
// deletions once the main loop finishes.
struct VirtualLedger {
  std::map<int, Nucleotides> amounts;

  Nucleotides extra(int x) const {
    auto it = amounts.find(x);
    return it == amounts.end() ? 0 : it->second;
  }
  void add(int x, Nucleotides amount) {
    if (amount != 0) amounts[x] += amount;
  }
  bool empty() const { return amounts.empty(); }
};

// Origin edge a joins the right extremity of the (a-1)-th kept gene to
// the left extremity of the a-th (caps included); it spans the source
// regions between them, more than one exactly when filler genes sit
// inside.
struct OriginEdge {
  int index = 0;               // 1-based a
  int left_pos = 0;            // drawing position of the left endpoint
  int right_pos = 0;
  int region_lo = 0, region_hi = 0;  // inclusive source region span
  Nucleotides weight = 0;
  bool has_alpha = false;
  int cycle = -1;

  int span() const { return region_hi - region_lo + 1; }
};

// Target edge t_x joins +x to -next where next is the next kept value;
// its run lists the target genes missing from the source in between,
// and extra carries virtual insertions.
struct TargetEdge {
  int x = 0;
  int next = 0;
  int plus_pos = 0;   // drawing position of the +x endpoint
  int minus_pos = 0;  // drawing position of the -next endpoint
  Nucleotides base_weight = 0;
  Nucleotides extra = 0;
  std::vector<int> run;  // missing genes x+1..next-1
  int cycle = -1;

  Nucleotides weight() const { return base_weight + extra; }
};

struct Cycle {
  int id = -1;
  // Edge positions into the graph's edge vectors, in traversal
  // encounter order starting from the rightmost vertex.
  std::vector<int> origin_edges;
  std::vector<int> target_edges;
  std::vector<bool> origin_rl;  // per encounter: traversed right-to-left?
  int leftmost_pos = 0;
  int rightmost_pos = 0;
  Nucleotides origin_sum = 0;
  Nucleotides target_sum = 0;
  bool has_alpha = false;
  bool has_run = false;
  bool convergent = false;
  bool oriented = false;  // meaningful for convergent non-trivial cycles

  bool labeled() const { return has_alpha || has_run; }
  bool clean() const { return !labeled(); }
  bool balanced() const { return origin_sum == target_sum; }
  // Positive: the source side is short and needs real insertions.
  Nucleotides balance() const { return target_sum - origin_sum; }
  bool good() const { return balanced() && clean(); }
  bool trivial() const { return origin_edges.size() == 1; }
  bool divergent() const { return !convergent; }
};

struct Measures {
  int pi_len = 0;  // kept (non-filler) source genes
  int c = 0;
  int c_g = 0;
  int b = 0;    // pi_len + 1 - c
  int b_g = 0;  // pi_len + 1 - c_g

  bool operator==(const Measures&) const = default;
};

struct BreakpointGraph {
  int m = 0;   // target gene count
  int np = 0;  // kept source genes
  std::vector<int> pi;      // pi[0]=0 cap, pi[1..np] signed kept genes, pi[np+1]=m+1
  std::vector<int> pi_pos;  // source position of pi[a]; pi_pos[0]=0, pi_pos[np+1]=n+1
  std::vector<OriginEdge> origin_edges;  // origin_edges[a-1] is edge a
  std::vector<TargetEdge> target_edges;  // ascending x
  std::vector<Cycle> cycles;             // sorted by leftmost position
  Measures measures;

  const OriginEdge& origin(int a) const { return origin_edges[static_cast<size_t>(a - 1)]; }
  // The origin edge whose span contains source region r.
  const OriginEdge& origin_owning_region(int r) const;
  const TargetEdge& target_for(int x) const;
  bool done() const { return measures.b == 0 && measures.b_g == 0; }
};

// Requires tgt to be the positive identity 1..m; src genes must be 0
// (filler) or distinct signed values from 1..m. Throws
// std::invalid_argument otherwise.
BreakpointGraph build_graph(const Genome& src, const Genome& tgt,
                            const VirtualLedger& ledger = {});

// (b drop, b_g drop) going from before to after.
std::pair<int, int> delta_measures(const Measures& before, const Measures& after);

// Graphviz text: vertices in drawing order, solid origin edges, dashed
// target edges, one color per cycle.
std::string to_dot(const BreakpointGraph& g);

}  // namespace rearr
