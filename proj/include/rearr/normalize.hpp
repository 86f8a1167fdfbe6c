#pragma once

#include <map>
#include <string>
#include <vector>

#include "rearr/genome.hpp"

namespace rearr {

// A genome as read from input: named genes with an orientation flag.
// The name "alpha" is reserved for anonymous filler and may repeat;
// every other name must be unique within its genome.
struct RawGenome {
  struct RawGene {
    std::string name;
    bool forward = true;
  };
  std::vector<RawGene> genes;
  std::vector<Nucleotides> regions;
};

struct NormalizedPair {
  Genome source;
  Genome target;
  // Target name -> assigned id (names merged into one run share an id).
  std::map<std::string, int> name_map;
};

// Renumbers the pair so the target reads +1..+m with all genes forward:
//  - shared genes keep source order; sign records whether the source
//    copy runs the same way as the target copy;
//  - source-only genes become anonymous filler, consecutive runs of
//    them merging into a single filler gene;
//  - target-only genes get ids of their own, consecutive runs merging
//    into a single id;
//  - regions interior to a merged run fold into the region preceding it.
// Throws std::invalid_argument on duplicate names, "alpha" in the
// target, or shape violations.
NormalizedPair normalize_pair(const RawGenome& raw_source, const RawGenome& raw_target);

}  // namespace rearr
