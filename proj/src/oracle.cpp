#include "rearr/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <vector>

#include "rearr/defect.hpp"
#include "rearr/graph.hpp"

namespace rearr {

namespace {

std::string encode(const Genome& g) {
  std::ostringstream out;
  for (int v : g.genes) out << v << ',';
  out << '|';
  for (Nucleotides r : g.regions) out << r << ',';
  return out.str();
}

bool within_caps(const Genome& g, Nucleotides cap) {
  Nucleotides total = 0;
  for (Nucleotides r : g.regions) {
    if (r > cap) return false;
    total += r;
  }
  return total <= cap;
}

// Two (x, y) splits with the same sums produce identical genomes, so
// moves are enumerated by distinct outcome, not by raw split. Reversals
// need only u = x + y; transpositions only the junction weights (A, B);
// deletions only the kept amount; insertions only the resulting region
// vector.
void moves_from(const Genome& g, const Genome& target, Nucleotides cap,
                std::vector<Op>& out) {
  out.clear();
  const int n = g.size();
  const int m = target.size();

  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const Nucleotides s1 = g.region(i), s2 = g.region(j + 1);
      for (Nucleotides u = 0; u <= s1 + s2; ++u) {
        const Nucleotides x = std::min(u, s1);
        out.push_back(Reversal{i, j, x, u - x});
      }
    }
  }

  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      for (int k = j + 1; k <= n + 1; ++k) {
        const Nucleotides s1 = g.region(i), s2 = g.region(j), s3 = g.region(k);
        const Nucleotides total = s1 + s2 + s3;
        for (Nucleotides a = 0; a <= total; ++a) {
          for (Nucleotides b = 0; a + b <= total; ++b) {
            const Nucleotides x_lo = std::max<Nucleotides>({0, a - s2, s1 - b});
            const Nucleotides x_hi = std::min<Nucleotides>({s1, a, s1 + s3 - b});
            if (x_lo > x_hi) continue;
            const Nucleotides x = x_lo;
            out.push_back(Transposition{i, j, k, x, x + s2 - a, b - s1 + x});
          }
        }
      }
    }
  }

  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i; j <= n + 1; ++j) {
      if (j > i && g.gene(j - 1) != kAlpha) break;
      const Nucleotides s1 = g.region(i), s2 = g.region(j);
      const Nucleotides max_kept = i == j ? s1 : s1 + s2;
      for (Nucleotides kept = 0; kept <= max_kept; ++kept) {
        if (i == j) {
          out.push_back(Deletion{i, i, 0, s1 - kept});
        } else {
          const Nucleotides x = std::min(kept, s1);
          out.push_back(Deletion{i, j, x, s2 - (kept - x)});
        }
      }
    }
  }

  Nucleotides here = 0;
  for (Nucleotides r : g.regions) here += r;
  const Nucleotides slack = std::max<Nucleotides>(cap - here, 0);

  std::set<int> present;
  for (int v : g.genes)
    if (v != kAlpha) present.insert(std::abs(v));

  // Missing contiguous target runs, both orientations, plus the empty
  // run (nucleotide-only growth).
  std::vector<std::vector<int>> payloads = {{}};
  for (int s = 1; s <= m; ++s) {
    if (present.count(s)) continue;
    std::vector<int> fwd, rev;
    for (int e = s; e <= m && !present.count(e); ++e) {
      fwd.push_back(e);
      rev.insert(rev.begin(), -e);
      payloads.push_back(fwd);
      payloads.push_back(rev);
    }
  }

  for (int i = 1; i <= n + 1; ++i) {
    const Nucleotides s1 = g.region(i);
    for (const auto& genes : payloads) {
      const int k = static_cast<int>(genes.size());
      if (k == 0) {
        for (Nucleotides t = 1; t <= slack; ++t) out.push_back(Insertion{i, {}, {t}, 0});
        continue;
      }
      // Resulting region vector v[0..k] with sum = s1 + t, t <= slack,
      // and v[0] + v[k] >= s1 (the old region splits across the ends).
      std::vector<Nucleotides> v(static_cast<size_t>(k) + 1, 0);
      const Nucleotides budget = s1 + slack;
      std::function<void(int, Nucleotides)> emit = [&](int slot, Nucleotides used) {
        if (slot == k) {
          for (Nucleotides last = 0; used + last <= budget; ++last) {
            if (v[0] + last < s1) continue;
            v[static_cast<size_t>(k)] = last;
            const Nucleotides x = std::max<Nucleotides>(0, s1 - last);
            std::vector<Nucleotides> payload(v.size());
            payload[0] = v[0] - x;
            for (int q = 1; q < k; ++q) payload[static_cast<size_t>(q)] = v[static_cast<size_t>(q)];
            payload[static_cast<size_t>(k)] = last - (s1 - x);
            out.push_back(Insertion{i, genes, payload, x});
          }
          return;
        }
        for (Nucleotides w = 0; used + w <= budget; ++w) {
          v[static_cast<size_t>(slot)] = w;
          emit(slot + 1, used + w);
        }
      };
      emit(0, 0);
    }
  }
}

}  // namespace

OracleResult exact_distance(const Genome& source, const Genome& target,
                            const WeightScheme& scheme, const OracleLimits& limits,
                            const Rational* upper_bound) {
  scheme.validate();
  source.validate();
  target.validate();
  const int m = target.size();
  for (int i = 1; i <= m; ++i)
    if (target.gene(i) != i)
      throw std::invalid_argument("exact search needs the sorted target form");
  if (source.size() > limits.max_genes || m > limits.max_genes)
    throw std::invalid_argument("instance too large for the exact search (genes)");
  const Nucleotides cap = source.total_nucleotides() + target.total_nucleotides();
  if (cap > limits.max_total)
    throw std::invalid_argument("instance too large for the exact search (nucleotides)");

  // Admissible, consistent remaining-cost estimate: no operation drops
  // the potential p1*b_g + p2*b faster than delta_max per unit weight.
  const Rational dmax = delta_max(scheme);
  auto heuristic = [&](const Genome& g) {
    const BreakpointGraph bg = build_graph(g, target);
    return (scheme.p1 * Rational(bg.measures.b_g) + scheme.p2 * Rational(bg.measures.b)) / dmax;
  };

  struct Node {
    Genome genome;
    Rational dist{0};
    Rational h{0};
  };
  std::map<std::string, Node> nodes;
  std::map<std::string, std::pair<std::string, Op>> parent;

  using Entry = std::pair<Rational, std::string>;  // (dist + h, key)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;

  const std::string start = encode(source);
  const std::string goal = encode(target);
  nodes[start] = Node{source, Rational(0), heuristic(source)};
  queue.push({nodes[start].h, start});

  OracleResult result;
  std::ostringstream caveat;
  caveat << "exact within the bounded move model: intermediate region weights and totals "
         << "capped at " << cap << " nucleotides; costlier detours are not explored";
  result.exactness_caveat = caveat.str();

  bool found = false;
  std::vector<Op> scratch;
  while (!queue.empty()) {
    const auto [f, key] = queue.top();
    queue.pop();
    const Node& node = nodes.at(key);
    if (f != node.dist + node.h) continue;  // stale entry
    if (key == goal) {
      found = true;
      result.distance = node.dist;
      break;
    }
    if (++result.states_expanded > limits.max_expansions)
      throw defect_error("exact search state budget exceeded");

    const Genome g = node.genome;  // copy: nodes may rehash below
    const Rational d = node.dist;
    moves_from(g, target, cap, scratch);
    for (const Op& op : scratch) {
      Genome next = rearr::apply(g, op);
      if (!within_caps(next, cap)) continue;
      const Rational alt = d + scheme.op_weight(op);
      if (upper_bound && alt > *upper_bound) continue;
      const std::string nkey = encode(next);
      auto it = nodes.find(nkey);
      if (it != nodes.end() && it->second.dist <= alt) continue;
      const Rational h = it != nodes.end() ? it->second.h : heuristic(next);
      nodes[nkey] = Node{std::move(next), alt, h};
      parent[nkey] = {key, op};
      queue.push({alt + h, nkey});
    }
  }

  if (!found) throw defect_error("exact search exhausted without reaching the target");

  std::vector<Op> ops;
  for (std::string key = goal; key != start;) {
    const auto& [pkey, op] = parent.at(key);
    ops.push_back(op);
    key = pkey;
  }
  std::reverse(ops.begin(), ops.end());
  result.witness.assign(ops.begin(), ops.end());
  if (!(apply_sequence(source, result.witness) == target))
    throw defect_error("exact search witness fails to replay");
  if (scheme.sequence_weight(result.witness) != result.distance)
    throw defect_error("exact search witness weight disagrees with its distance");
  return result;
}

}  // namespace rearr
