#include "rearr/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rearr {

namespace {

void check(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string name_of(int signed_value, bool plus_side) {
  // A vertex is named by the signed gene value it touches; the plus
  // side of gene g prints as +g even when g itself is negative.
  int v = plus_side ? signed_value : -signed_value;
  return (v >= 0 ? "+" : "") + std::to_string(v);
}

}  // namespace

const OriginEdge& BreakpointGraph::origin_owning_region(int r) const {
  for (const OriginEdge& e : origin_edges)
    if (e.region_lo <= r && r <= e.region_hi) return e;
  throw std::invalid_argument("no origin edge spans region " + std::to_string(r));
}

const TargetEdge& BreakpointGraph::target_for(int x) const {
  for (const TargetEdge& e : target_edges)
    if (e.x == x) return e;
  throw std::invalid_argument("no target edge follows gene " + std::to_string(x));
}

BreakpointGraph build_graph(const Genome& src, const Genome& tgt,
                            const VirtualLedger& ledger) {
  src.validate();
  tgt.validate();
  const int m = tgt.size();
  for (int i = 1; i <= m; ++i)
    check(tgt.gene(i) == i, "target must be the positive identity");

  BreakpointGraph g;
  g.m = m;

  // Kept genes and their source positions; caps 0 and m+1 bracket them.
  const int n = src.size();
  g.pi = {0};
  g.pi_pos = {0};
  std::set<int> present;
  for (int i = 1; i <= n; ++i) {
    const int v = src.gene(i);
    if (v == kAlpha) continue;
    check(1 <= std::abs(v) && std::abs(v) <= m, "source gene outside target range");
    check(present.insert(std::abs(v)).second, "source repeats a gene");
    g.pi.push_back(v);
    g.pi_pos.push_back(i);
  }
  g.np = static_cast<int>(g.pi.size()) - 1;
  g.pi.push_back(m + 1);
  g.pi_pos.push_back(n + 1);
  const int np = g.np;

  for (const auto& [x, amount] : ledger.amounts) {
    check(amount > 0, "ledger amounts must be positive");
    check(x == 0 || present.count(x) > 0, "ledger entry for a gene not in the source");
  }

  // Origin edge a: right extremity of pi[a-1] (drawing position
  // 2(a-1)) to left extremity of pi[a] (position 2a-1), spanning the
  // source regions between their positions.
  for (int a = 1; a <= np + 1; ++a) {
    OriginEdge e;
    e.index = a;
    e.left_pos = 2 * (a - 1);
    e.right_pos = 2 * a - 1;
    e.region_lo = g.pi_pos[static_cast<size_t>(a - 1)] + 1;
    e.region_hi = g.pi_pos[static_cast<size_t>(a)];
    for (int r = e.region_lo; r <= e.region_hi; ++r) e.weight += src.region(r);
    e.has_alpha = e.span() > 1;
    g.origin_edges.push_back(e);
  }

  // Target edge t_x: +x to -next over the kept values; its weight sums
  // the target regions between gene x and gene next, and its run lists
  // the genes missing in between.
  std::vector<int> kept(present.begin(), present.end());
  kept.insert(kept.begin(), 0);
  // Drawing position of each named extremity: +pi[a] at 2a, -pi[a] at 2a-1.
  std::map<int, int> pos_of_plus, pos_of_minus;  // keyed by |value| with sign folded in
  auto record_positions = [&](int a) {
    const int v = g.pi[static_cast<size_t>(a)];
    // Names: plus side is +v, minus side is -v (v signed). The left cap
    // only exposes its plus side, the right cap only its minus side.
    if (a <= np) pos_of_plus[v] = 2 * a;
    if (a >= 1) pos_of_minus[v] = 2 * a - 1;
  };
  for (int a = 0; a <= np + 1; ++a) record_positions(a);
  auto position_of_name = [&](int name_value, bool name_is_plus) {
    // Vertex named +x sits wherever +pi[a] == +x or -pi[a] == +x.
    int want = name_is_plus ? name_value : -name_value;
    if (auto it = pos_of_plus.find(want); it != pos_of_plus.end()) return it->second;
    if (auto it = pos_of_minus.find(-want); it != pos_of_minus.end()) return it->second;
    throw std::invalid_argument("internal: unknown vertex name");
  };

  for (size_t t = 0; t < kept.size(); ++t) {
    const int x = kept[t];
    const int next = (t + 1 < kept.size()) ? kept[t + 1] : m + 1;
    TargetEdge e;
    e.x = x;
    e.next = next;
    e.plus_pos = position_of_name(x, true);
    e.minus_pos = position_of_name(next, false);
    for (int r = x + 1; r <= next; ++r) e.base_weight += tgt.region(r);
    e.extra = ledger.extra(x);
    for (int missing = x + 1; missing < next; ++missing) e.run.push_back(missing);
    g.target_edges.push_back(e);
  }

  // Adjacency by drawing position.
  const int last_pos = 2 * np + 1;
  std::vector<int> origin_at(static_cast<size_t>(last_pos) + 1, -1);
  std::vector<int> target_at(static_cast<size_t>(last_pos) + 1, -1);
  for (size_t idx = 0; idx < g.origin_edges.size(); ++idx) {
    origin_at[static_cast<size_t>(g.origin_edges[idx].left_pos)] = static_cast<int>(idx);
    origin_at[static_cast<size_t>(g.origin_edges[idx].right_pos)] = static_cast<int>(idx);
  }
  for (size_t idx = 0; idx < g.target_edges.size(); ++idx) {
    target_at[static_cast<size_t>(g.target_edges[idx].plus_pos)] = static_cast<int>(idx);
    target_at[static_cast<size_t>(g.target_edges[idx].minus_pos)] = static_cast<int>(idx);
  }
  for (int p = 0; p <= last_pos; ++p) {
    check(origin_at[static_cast<size_t>(p)] >= 0 && target_at[static_cast<size_t>(p)] >= 0,
          "internal: vertex missing an edge");
  }

  // Collect cycles; then sort by leftmost vertex and traverse each from
  // its rightmost vertex, first moving right-to-left along its origin edge.
  std::vector<bool> seen(static_cast<size_t>(last_pos) + 1, false);
  std::vector<std::vector<int>> cycle_vertices;
  for (int p0 = 0; p0 <= last_pos; ++p0) {
    if (seen[static_cast<size_t>(p0)]) continue;
    std::vector<int> verts;
    int p = p0;
    do {
      seen[static_cast<size_t>(p)] = true;
      verts.push_back(p);
      const OriginEdge& o = g.origin_edges[static_cast<size_t>(origin_at[static_cast<size_t>(p)])];
      p = (p == o.left_pos) ? o.right_pos : o.left_pos;
      seen[static_cast<size_t>(p)] = true;
      verts.push_back(p);
      const TargetEdge& te = g.target_edges[static_cast<size_t>(target_at[static_cast<size_t>(p)])];
      p = (p == te.plus_pos) ? te.minus_pos : te.plus_pos;
    } while (p != p0);
    cycle_vertices.push_back(std::move(verts));
  }
  std::sort(cycle_vertices.begin(), cycle_vertices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return *std::min_element(a.begin(), a.end()) <
                     *std::min_element(b.begin(), b.end());
            });

  for (size_t id = 0; id < cycle_vertices.size(); ++id) {
    const auto& verts = cycle_vertices[id];
    Cycle c;
    c.id = static_cast<int>(id);
    c.leftmost_pos = *std::min_element(verts.begin(), verts.end());
    c.rightmost_pos = *std::max_element(verts.begin(), verts.end());

    int p = c.rightmost_pos;
    do {
      const int oi = origin_at[static_cast<size_t>(p)];
      OriginEdge& o = g.origin_edges[static_cast<size_t>(oi)];
      c.origin_edges.push_back(oi);
      c.origin_rl.push_back(p == o.right_pos);
      o.cycle = c.id;
      c.origin_sum += o.weight;
      c.has_alpha = c.has_alpha || o.has_alpha;
      p = (p == o.left_pos) ? o.right_pos : o.left_pos;

      const int ti = target_at[static_cast<size_t>(p)];
      TargetEdge& te = g.target_edges[static_cast<size_t>(ti)];
      c.target_edges.push_back(ti);
      te.cycle = c.id;
      c.target_sum += te.weight();
      c.has_run = c.has_run || !te.run.empty();
      p = (p == te.plus_pos) ? te.minus_pos : te.plus_pos;
    } while (p != c.rightmost_pos);

    c.convergent = std::all_of(c.origin_rl.begin(), c.origin_rl.end(),
                               [](bool rl) { return rl; });
    if (c.convergent && c.origin_edges.size() > 1) {
      // Oriented: encountered origin indices not strictly decreasing.
      bool strictly_decreasing = true;
      for (size_t t = 1; t < c.origin_edges.size(); ++t) {
        if (g.origin_edges[static_cast<size_t>(c.origin_edges[t])].index >=
            g.origin_edges[static_cast<size_t>(c.origin_edges[t - 1])].index) {
          strictly_decreasing = false;
          break;
        }
      }
      c.oriented = !strictly_decreasing;
    }
    g.cycles.push_back(std::move(c));
  }

  g.measures.pi_len = np;
  g.measures.c = static_cast<int>(g.cycles.size());
  g.measures.c_g = static_cast<int>(
      std::count_if(g.cycles.begin(), g.cycles.end(), [](const Cycle& c) { return c.good(); }));
  g.measures.b = np + 1 - g.measures.c;
  g.measures.b_g = np + 1 - g.measures.c_g;
  return g;
}

std::pair<int, int> delta_measures(const Measures& before, const Measures& after) {
  return {before.b - after.b, before.b_g - after.b_g};
}

std::string to_dot(const BreakpointGraph& g) {
  static const char* palette[] = {"black",  "red",    "blue",   "cyan",
                                  "orange", "green",  "purple", "brown",
                                  "magenta", "gray"};
  constexpr int palette_size = static_cast<int>(sizeof(palette) / sizeof(palette[0]));

  // Rebuild vertex names from the edge endpoints.
  std::map<int, std::string> label;
  for (const OriginEdge& e : g.origin_edges) {
    label[e.left_pos] = name_of(g.pi[static_cast<size_t>(e.index - 1)], true);
    label[e.right_pos] = name_of(g.pi[static_cast<size_t>(e.index)], false);
  }

  std::ostringstream out;
  out << "graph breakpoint {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& [pos, text] : label)
    out << "  v" << pos << " [label=\"" << text << "\"];\n";
  for (const OriginEdge& e : g.origin_edges) {
    out << "  v" << e.left_pos << " -- v" << e.right_pos << " [color="
        << palette[e.cycle % palette_size] << ", label=\"" << e.weight
        << (e.has_alpha ? " a" : "") << "\"];\n";
  }
  for (const TargetEdge& e : g.target_edges) {
    out << "  v" << e.plus_pos << " -- v" << e.minus_pos << " [style=dashed, color="
        << palette[e.cycle % palette_size] << ", label=\"" << e.weight();
    if (!e.run.empty()) {
      out << " {";
      for (size_t t = 0; t < e.run.size(); ++t) out << (t > 0 ? "," : "") << e.run[t];
      out << "}";
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rearr
