#include "rearr/genome.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rearr {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

std::string gene_str(int g) {
  if (g == kAlpha) return "a";
  return (g > 0 ? "+" : "-") + std::to_string(std::abs(g));
}

}  // namespace

Genome::Genome(std::vector<int> g, std::vector<Nucleotides> r)
    : genes(std::move(g)), regions(std::move(r)) {
  validate();
}

Nucleotides Genome::total_nucleotides() const {
  return std::accumulate(regions.begin(), regions.end(), Nucleotides{0});
}

void Genome::validate() const {
  check(regions.size() == genes.size() + 1,
        "genome needs exactly one more region than genes (got " +
            std::to_string(genes.size()) + " genes, " + std::to_string(regions.size()) +
            " regions)");
  for (Nucleotides r : regions) check(r >= 0, "negative intergenic region");
}

std::string to_string(const Genome& g) {
  std::ostringstream out;
  out << "(";
  for (int i = 1; i <= g.size(); ++i) out << (i > 1 ? " " : "") << gene_str(g.gene(i));
  out << ") [";
  for (size_t i = 0; i < g.regions.size(); ++i) out << (i > 0 ? " " : "") << g.regions[i];
  out << "]";
  return out.str();
}

Genome apply(const Genome& g, const Reversal& op) {
  const int n = g.size();
  check(1 <= op.i && op.i <= op.j && op.j <= n, "reversal indices out of range");
  check(0 <= op.x && op.x <= g.region(op.i), "reversal x outside region i");
  check(0 <= op.y && op.y <= g.region(op.j + 1), "reversal y outside region j+1");

  Genome out = g;
  std::reverse(out.genes.begin() + (op.i - 1), out.genes.begin() + op.j);
  for (int p = op.i; p <= op.j; ++p) out.gene(p) = -out.gene(p);
  // Regions strictly inside the reversed block flip order too.
  std::reverse(out.regions.begin() + op.i, out.regions.begin() + op.j);
  out.region(op.i) = op.x + op.y;
  out.region(op.j + 1) = (g.region(op.i) - op.x) + (g.region(op.j + 1) - op.y);
  return out;
}

Genome apply(const Genome& g, const Transposition& op) {
  const int n = g.size();
  check(1 <= op.i && op.i < op.j && op.j < op.k && op.k <= n + 1,
        "transposition indices must satisfy 1 <= i < j < k <= n+1");
  check(0 <= op.x && op.x <= g.region(op.i), "transposition x outside region i");
  check(0 <= op.y && op.y <= g.region(op.j), "transposition y outside region j");
  check(0 <= op.z && op.z <= g.region(op.k), "transposition z outside region k");

  const Nucleotides xp = g.region(op.i) - op.x;
  const Nucleotides yp = g.region(op.j) - op.y;
  const Nucleotides zp = g.region(op.k) - op.z;

  Genome out;
  out.genes.reserve(g.genes.size());
  out.regions.reserve(g.regions.size());
  for (int p = 1; p < op.i; ++p) out.genes.push_back(g.gene(p));
  for (int p = 1; p <= op.i - 1; ++p) out.regions.push_back(g.region(p));

  out.regions.push_back(op.x + yp);
  for (int p = op.j; p < op.k; ++p) out.genes.push_back(g.gene(p));
  for (int p = op.j + 1; p <= op.k - 1; ++p) out.regions.push_back(g.region(p));

  out.regions.push_back(op.z + xp);
  for (int p = op.i; p < op.j; ++p) out.genes.push_back(g.gene(p));
  for (int p = op.i + 1; p <= op.j - 1; ++p) out.regions.push_back(g.region(p));

  out.regions.push_back(op.y + zp);
  for (int p = op.k; p <= n; ++p) out.genes.push_back(g.gene(p));
  for (int p = op.k + 1; p <= n + 1; ++p) out.regions.push_back(g.region(p));

  out.validate();
  return out;
}

Genome apply(const Genome& g, const Insertion& op) {
  const int n = g.size();
  check(1 <= op.i && op.i <= n + 1, "insertion position out of range");
  check(op.regions.size() == op.genes.size() + 1,
        "insertion payload needs |genes|+1 regions");
  check(0 <= op.x && op.x <= g.region(op.i), "insertion x outside region i");
  for (Nucleotides r : op.regions) check(r >= 0, "negative region in insertion payload");
  for (int id : op.genes) {
    check(id != kAlpha, "cannot insert filler genes");
    for (int have : g.genes)
      check(std::abs(have) != std::abs(id), "inserted gene already present");
  }

  Genome out;
  out.genes.reserve(g.genes.size() + op.genes.size());
  out.regions.reserve(g.regions.size() + op.genes.size());
  for (int p = 1; p < op.i; ++p) out.genes.push_back(g.gene(p));
  for (int p = 1; p <= op.i - 1; ++p) out.regions.push_back(g.region(p));

  out.regions.push_back(op.x + op.regions.front());
  for (size_t t = 0; t < op.genes.size(); ++t) {
    out.genes.push_back(op.genes[t]);
    if (t + 1 < op.genes.size()) out.regions.push_back(op.regions[t + 1]);
  }
  if (!op.genes.empty())
    out.regions.push_back(op.regions.back() + (g.region(op.i) - op.x));
  else
    // Pure nucleotide insertion: the single payload region joins the split.
    out.regions.back() += g.region(op.i) - op.x;

  for (int p = op.i; p <= n; ++p) out.genes.push_back(g.gene(p));
  for (int p = op.i + 1; p <= n + 1; ++p) out.regions.push_back(g.region(p));

  out.validate();
  return out;
}

Genome apply(const Genome& g, const Deletion& op) {
  const int n = g.size();
  check(1 <= op.i && op.i <= op.j && op.j <= n + 1, "deletion indices out of range");
  check(0 <= op.x && op.x <= g.region(op.i), "deletion x outside region i");
  check(0 <= op.y && op.y <= g.region(op.j), "deletion y outside region j");
  if (op.i == op.j) check(op.x <= op.y, "nucleotide-only deletion needs x <= y");
  for (int p = op.i; p < op.j; ++p)
    check(g.gene(p) == kAlpha, "deletion may only remove filler genes");

  Genome out;
  out.genes.reserve(g.genes.size());
  out.regions.reserve(g.regions.size());
  for (int p = 1; p < op.i; ++p) out.genes.push_back(g.gene(p));
  for (int p = 1; p <= op.i - 1; ++p) out.regions.push_back(g.region(p));

  out.regions.push_back(op.x + (g.region(op.j) - op.y));
  for (int p = op.j; p <= n; ++p) out.genes.push_back(g.gene(p));
  for (int p = op.j + 1; p <= n + 1; ++p) out.regions.push_back(g.region(p));

  out.validate();
  return out;
}

Genome apply(const Genome& g, const Op& op) {
  return std::visit(
      [&](const auto& concrete) -> Genome {
        using T = std::decay_t<decltype(concrete)>;
        if constexpr (std::is_same_v<T, VirtualInsertion>) {
          fail("virtual insertion cannot be applied to a genome");
        } else {
          return apply(g, concrete);
        }
      },
      op);
}

Genome apply_sequence(const Genome& g, const OpSequence& ops) {
  Genome cur = g;
  for (size_t t = 0; t < ops.size(); ++t) {
    try {
      cur = rearr::apply(cur, ops[t]);
    } catch (const std::invalid_argument& e) {
      fail("op " + std::to_string(t + 1) + " (" + to_string(ops[t]) + "): " + e.what());
    }
  }
  return cur;
}

std::string to_string(const Op& op) {
  std::ostringstream out;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Reversal>) {
          out << "rev(" << o.i << "," << o.j << "|" << o.x << "," << o.y << ")";
        } else if constexpr (std::is_same_v<T, Transposition>) {
          out << "trans(" << o.i << "," << o.j << "," << o.k << "|" << o.x << "," << o.y
              << "," << o.z << ")";
        } else if constexpr (std::is_same_v<T, Insertion>) {
          out << "ins(" << o.i << "|";
          for (size_t t = 0; t < o.genes.size(); ++t)
            out << (t > 0 ? " " : "") << gene_str(o.genes[t]);
          out << "|";
          for (size_t t = 0; t < o.regions.size(); ++t)
            out << (t > 0 ? " " : "") << o.regions[t];
          out << "|" << o.x << ")";
        } else if constexpr (std::is_same_v<T, Deletion>) {
          out << "del(" << o.i << "," << o.j << "|" << o.x << "," << o.y << ")";
        } else {
          out << "virt(" << o.target_gene << "|" << o.amount << ")";
        }
      },
      op);
  return out.str();
}

}  // namespace rearr
