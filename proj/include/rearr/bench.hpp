#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rearr/instance_gen.hpp"
#include "rearr/oracle.hpp"
#include "rearr/weights.hpp"

namespace rearr {

// One --spec argument: an instance recipe plus how many instances to
// draw from it (per-index seeds derive from the base seed).
struct BenchSpec {
  InstanceSpec base;
  int count = 1;
  std::string label;  // compact CSV-safe form, e.g. "m4.k3.r5.sx0.tx0.s7"
};

// "m=4,k=3,max_region=5,source_exclusive=0,target_exclusive=0,seed=7,count=100"
// (sx/tx accepted as short keys; omitted keys keep defaults).
BenchSpec parse_bench_spec(const std::string& text);

std::string scheme_label(const WeightScheme& s);

// "WR,WT,WD,P1,P2" with rational entries, or the shorthand "theorem"
// handled by the caller.
WeightScheme parse_scheme(const std::string& text);

struct BenchRow {
  std::string instance;
  std::string scheme;
  Rational alg_weight{0};
  Rational lower_bound{0};
  std::optional<Rational> oracle_weight;
  Rational ratio{0};
  bool violation = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  int violations = 0;
  // Pair files (plus context) for each violating instance, for replay.
  std::vector<std::string> violation_dumps;

  // Header: instance,scheme,alg_weight,lower_bound,oracle_weight,ratio
  std::string csv() const;
  std::string summary() const;  // per-scheme max/mean ratio and checks
};

// Runs every (spec instance, scheme) cell sequentially and
// deterministically. Each scheme scrambles its own copies (op-type
// odds depend on the scheme); rows are comparable within a scheme.
// When with_oracle is set, instances within the oracle's limits get an
// exact distance and the ratio is taken against it.
BenchReport run_bench(const std::vector<BenchSpec>& specs,
                      const std::vector<WeightScheme>& schemes, bool with_oracle,
                      const OracleLimits& limits = {});

}  // namespace rearr
