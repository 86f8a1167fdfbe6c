#include "rearr/normalize.hpp"

#include <set>
#include <stdexcept>

namespace rearr {

namespace {

constexpr const char* kAlphaName = "alpha";

void check(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void validate_raw(const RawGenome& g, const char* which, bool allow_alpha) {
  check(g.regions.size() == g.genes.size() + 1,
        std::string(which) + " genome needs |genes|+1 regions");
  for (Nucleotides r : g.regions)
    check(r >= 0, std::string(which) + " genome has a negative region");
  std::set<std::string> seen;
  for (const auto& gene : g.genes) {
    check(!gene.name.empty(), std::string(which) + " genome has an unnamed gene");
    if (gene.name == kAlphaName) {
      check(allow_alpha, "'alpha' is reserved and cannot appear in the target");
      continue;  // filler may repeat
    }
    check(seen.insert(gene.name).second,
          std::string(which) + " genome repeats gene '" + gene.name + "'");
  }
}

}  // namespace

NormalizedPair normalize_pair(const RawGenome& raw_source, const RawGenome& raw_target) {
  validate_raw(raw_source, "source", true);
  validate_raw(raw_target, "target", false);

  std::set<std::string> source_names;
  for (const auto& g : raw_source.genes)
    if (g.name != kAlphaName) source_names.insert(g.name);

  // Number the target left to right, merging runs of target-only genes.
  NormalizedPair out;
  std::map<std::string, bool> target_fwd;
  int next_id = 0;
  const int tn = static_cast<int>(raw_target.genes.size());
  out.target.regions.push_back(raw_target.regions[0]);
  for (int p = 0; p < tn;) {
    const bool shared = source_names.count(raw_target.genes[static_cast<size_t>(p)].name) > 0;
    int q = p;
    if (!shared) {
      while (q + 1 < tn &&
             source_names.count(raw_target.genes[static_cast<size_t>(q + 1)].name) == 0)
        ++q;
    }
    ++next_id;
    for (int t = p; t <= q; ++t) {
      const auto& gene = raw_target.genes[static_cast<size_t>(t)];
      out.name_map[gene.name] = next_id;
      if (shared) target_fwd[gene.name] = gene.forward;
      // Regions inside the run fold into the preceding region.
      if (t > p) out.target.regions.back() += raw_target.regions[static_cast<size_t>(t)];
    }
    out.target.genes.push_back(next_id);
    out.target.regions.push_back(raw_target.regions[static_cast<size_t>(q + 1)]);
    p = q + 1;
  }

  // Rewrite the source against that numbering, merging filler runs.
  const int sn = static_cast<int>(raw_source.genes.size());
  out.source.regions.push_back(raw_source.regions[0]);
  for (int p = 0; p < sn;) {
    const auto& gene = raw_source.genes[static_cast<size_t>(p)];
    const bool filler = gene.name == kAlphaName || out.name_map.count(gene.name) == 0;
    int q = p;
    if (filler) {
      while (q + 1 < sn) {
        const auto& nxt = raw_source.genes[static_cast<size_t>(q + 1)];
        if (nxt.name != kAlphaName && out.name_map.count(nxt.name) > 0) break;
        ++q;
      }
      out.source.genes.push_back(kAlpha);
    } else {
      const int id = out.name_map.at(gene.name);
      const bool same_way = gene.forward == target_fwd.at(gene.name);
      out.source.genes.push_back(same_way ? id : -id);
    }
    for (int t = p + 1; t <= q; ++t)
      out.source.regions.back() += raw_source.regions[static_cast<size_t>(t)];
    out.source.regions.push_back(raw_source.regions[static_cast<size_t>(q + 1)]);
    p = q + 1;
  }

  out.source.validate();
  out.target.validate();
  return out;
}

}  // namespace rearr
