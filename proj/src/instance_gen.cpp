#include "rearr/instance_gen.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rearr {

namespace {

// Unbiased draw from [0, n); hand-rolled so results don't depend on a
// standard library's distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::logic_error("uniform_below(0)");
  const std::uint64_t rem = ((~std::uint64_t{0}) % n + 1) % n;  // 2^64 mod n
  std::uint64_t r = rng();
  while (rem != 0 && r > (~std::uint64_t{0}) - rem) r = rng();
  return r % n;
}

Nucleotides pick_weight(std::mt19937_64& rng, Nucleotides max) {
  return static_cast<Nucleotides>(uniform_below(rng, static_cast<std::uint64_t>(max) + 1));
}

// Integer odds proportional to 1/W(rev) : 1/W(trans) : 1/W(indel).
std::array<long long, 3> type_odds(const WeightScheme& scheme) {
  const Rational q[3] = {Rational(1) / scheme.w_rev, Rational(1) / scheme.w_trans,
                         Rational(1) / scheme.w_indel};
  long long common = 1;
  for (const Rational& v : q) common = std::lcm(common, v.denominator());
  std::array<long long, 3> odds{};
  for (int i = 0; i < 3; ++i) odds[i] = q[i].numerator() * (common / q[i].denominator());
  return odds;
}

void scramble_reversal(std::mt19937_64& rng, Genome& g) {
  const int n = g.size();
  const int i = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  const int j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i + 1)));
  const Nucleotides x = pick_weight(rng, g.region(i));
  const Nucleotides y = pick_weight(rng, g.region(j + 1));
  g = apply(g, Reversal{i, j, x, y});
}

void scramble_transposition(std::mt19937_64& rng, Genome& g) {
  const int n = g.size();
  int a = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n + 1)));
  int b = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n + 1)));
  int c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n + 1)));
  while (a == b || b == c || a == c) {
    b = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n + 1)));
    c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n + 1)));
  }
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  const Nucleotides x = pick_weight(rng, g.region(a));
  const Nucleotides y = pick_weight(rng, g.region(b));
  const Nucleotides z = pick_weight(rng, g.region(c));
  g = apply(g, Transposition{a, b, c, x, y, z});
}

void scramble_alpha_insert(std::mt19937_64& rng, Genome& g, Nucleotides max_region) {
  // Sorting insertions refuse filler genes, so splice the filler in by hand.
  const int i = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.size() + 1)));
  const Nucleotides x = pick_weight(rng, g.region(i));
  const Nucleotides left = pick_weight(rng, max_region);
  const Nucleotides right = pick_weight(rng, max_region);
  std::vector<int> genes = g.genes;
  std::vector<Nucleotides> regions = g.regions;
  genes.insert(genes.begin() + (i - 1), kAlpha);
  regions[static_cast<size_t>(i - 1)] = x + left;
  regions.insert(regions.begin() + i, right + (g.region(i) - x));
  g = Genome(genes, regions);
}

void scramble_indel(std::mt19937_64& rng, Genome& g, Nucleotides max_region) {
  if (uniform_below(rng, 2) == 0) {
    scramble_alpha_insert(rng, g, max_region);
    return;
  }
  // Delete one filler gene if any, else a nucleotide range.
  std::vector<int> alphas;
  for (int i = 1; i <= g.size(); ++i)
    if (g.gene(i) == kAlpha) alphas.push_back(i);
  if (!alphas.empty()) {
    const int i = alphas[uniform_below(rng, alphas.size())];
    const Nucleotides x = pick_weight(rng, g.region(i));
    const Nucleotides y = pick_weight(rng, g.region(i + 1));
    g = apply(g, Deletion{i, i + 1, x, y});
    return;
  }
  const int i = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.size() + 1)));
  const Nucleotides x = pick_weight(rng, g.region(i));
  const Nucleotides y = x + pick_weight(rng, g.region(i) - x);
  g = apply(g, Deletion{i, i, x, y});
}

}  // namespace

void InstanceSpec::validate() const {
  if (m < 1) throw std::invalid_argument("instance spec needs m >= 1");
  if (k < 0 || max_region < 0 || source_exclusive < 0 || target_exclusive < 0)
    throw std::invalid_argument("instance spec counts must be non-negative");
  if (target_exclusive >= m)
    throw std::invalid_argument("instance spec would empty the source of shared genes");
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

NormalizedPair generate_instance(const InstanceSpec& spec, const WeightScheme& scheme) {
  spec.validate();
  scheme.validate();
  std::mt19937_64 rng(spec.seed);

  std::vector<int> ident(static_cast<size_t>(spec.m));
  for (int i = 0; i < spec.m; ++i) ident[static_cast<size_t>(i)] = i + 1;
  std::vector<Nucleotides> tregions;
  for (int i = 0; i <= spec.m; ++i) tregions.push_back(pick_weight(rng, spec.max_region));
  const Genome target(ident, tregions);

  Genome source = target;

  // Remove target-exclusive genes from the source copy (their flanking
  // regions merge), then inject filler.
  for (int t = 0; t < spec.target_exclusive; ++t) {
    const int i = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(source.size())));
    std::vector<int> genes = source.genes;
    std::vector<Nucleotides> regions = source.regions;
    regions[static_cast<size_t>(i - 1)] += regions[static_cast<size_t>(i)];
    genes.erase(genes.begin() + (i - 1));
    regions.erase(regions.begin() + i);
    source = Genome(std::move(genes), std::move(regions));
  }
  for (int s = 0; s < spec.source_exclusive; ++s) scramble_alpha_insert(rng, source, spec.max_region);

  const auto odds = type_odds(scheme);
  const long long total_odds = odds[0] + odds[1] + odds[2];
  for (int step = 0; step < spec.k; ++step) {
    const long long draw =
        static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(total_odds)));
    int kind = draw < odds[0] ? 0 : (draw < odds[0] + odds[1] ? 1 : 2);
    if (kind == 0 && source.size() < 1) kind = 2;
    if (kind == 1 && source.size() < 2) kind = source.size() >= 1 ? 0 : 2;
    switch (kind) {
      case 0: scramble_reversal(rng, source); break;
      case 1: scramble_transposition(rng, source); break;
      default: scramble_indel(rng, source, spec.max_region); break;
    }
  }

  NormalizedPair pair;
  pair.source = std::move(source);
  pair.target = target;
  for (int i = 1; i <= spec.m; ++i) pair.name_map[std::to_string(i)] = i;
  return pair;
}

}  // namespace rearr
