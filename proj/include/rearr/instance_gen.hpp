#pragma once

#include <cstdint>
#include <random>

#include "rearr/normalize.hpp"
#include "rearr/weights.hpp"

namespace rearr {

// Recipe for one random pair: identity target with random regions,
// source derived from it by k random operations plus injected
// exclusive genes. Same spec -> same pair, byte for byte.
struct InstanceSpec {
  int m = 4;                  // target gene count
  int k = 3;                  // scrambling operations
  Nucleotides max_region = 5; // per-region cap for generated weights
  int source_exclusive = 0;   // filler genes injected into the source
  int target_exclusive = 0;   // target genes removed from the source
  std::uint64_t seed = 0;

  void validate() const;
};

// Scrambling op types are drawn with probability proportional to
// 1/W(op) under scheme, so cheap operations dominate the mix.
NormalizedPair generate_instance(const InstanceSpec& spec, const WeightScheme& scheme);

// Deterministic 64-bit mix used to derive per-index seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace rearr
