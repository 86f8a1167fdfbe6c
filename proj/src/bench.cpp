#include "rearr/bench.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "rearr/algorithm.hpp"
#include "rearr/pairfile.hpp"

namespace rearr {

namespace {

long long parse_count(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
}

}  // namespace

BenchSpec parse_bench_spec(const std::string& text) {
  BenchSpec spec;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("spec item '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    const long long v = parse_count(key, value);
    if (key == "m") {
      spec.base.m = static_cast<int>(v);
    } else if (key == "k") {
      spec.base.k = static_cast<int>(v);
    } else if (key == "max_region" || key == "r") {
      spec.base.max_region = v;
    } else if (key == "source_exclusive" || key == "sx") {
      spec.base.source_exclusive = static_cast<int>(v);
    } else if (key == "target_exclusive" || key == "tx") {
      spec.base.target_exclusive = static_cast<int>(v);
    } else if (key == "seed") {
      spec.base.seed = static_cast<std::uint64_t>(v);
    } else if (key == "count") {
      spec.count = static_cast<int>(v);
    } else {
      throw std::invalid_argument("unknown spec key '" + key + "'");
    }
  }
  spec.base.validate();
  if (spec.count < 0) throw std::invalid_argument("spec count must be non-negative");

  std::ostringstream label;
  label << 'm' << spec.base.m << ".k" << spec.base.k << ".r" << spec.base.max_region << ".sx"
        << spec.base.source_exclusive << ".tx" << spec.base.target_exclusive << ".s"
        << spec.base.seed;
  spec.label = label.str();
  return spec;
}

std::string scheme_label(const WeightScheme& s) {
  std::ostringstream out;
  out << format_rational(s.w_rev) << ':' << format_rational(s.w_trans) << ':'
      << format_rational(s.w_indel) << ':' << format_rational(s.p1) << ':'
      << format_rational(s.p2);
  return out.str();
}

WeightScheme parse_scheme(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (parts.size() != 5)
    throw std::invalid_argument("scheme needs 5 comma-separated values (WR,WT,WD,P1,P2), got '" +
                                text + "'");
  WeightScheme s;
  s.w_rev = parse_rational(parts[0]);
  s.w_trans = parse_rational(parts[1]);
  s.w_indel = parse_rational(parts[2]);
  s.p1 = parse_rational(parts[3]);
  s.p2 = parse_rational(parts[4]);
  s.validate();
  return s;
}

std::string BenchReport::csv() const {
  std::ostringstream out;
  out << "instance,scheme,alg_weight,lower_bound,oracle_weight,ratio\n";
  for (const BenchRow& r : rows) {
    out << r.instance << ',' << r.scheme << ',' << format_rational(r.alg_weight) << ','
        << format_rational(r.lower_bound) << ','
        << (r.oracle_weight ? format_rational(*r.oracle_weight) : std::string()) << ','
        << format_rational(r.ratio) << '\n';
  }
  return out.str();
}

std::string BenchReport::summary() const {
  struct Agg {
    Rational max_ratio{0};
    Rational sum{0};
    long long n = 0;
    long long oracle_rows = 0;
  };
  std::map<std::string, Agg> by_scheme;
  for (const BenchRow& r : rows) {
    Agg& a = by_scheme[r.scheme];
    if (r.ratio > a.max_ratio) a.max_ratio = r.ratio;
    a.sum += r.ratio;
    ++a.n;
    if (r.oracle_weight) ++a.oracle_rows;
  }
  std::ostringstream out;
  for (const auto& [scheme, a] : by_scheme) {
    out << "scheme " << scheme << ": rows " << a.n << ", oracle rows " << a.oracle_rows
        << ", max ratio " << format_rational(a.max_ratio) << ", mean ratio "
        << format_rational(a.n ? a.sum / Rational(a.n) : Rational(0)) << '\n';
  }
  out << "violations: " << violations << '\n';
  return out.str();
}

BenchReport run_bench(const std::vector<BenchSpec>& specs,
                      const std::vector<WeightScheme>& schemes, bool with_oracle,
                      const OracleLimits& limits) {
  BenchReport report;
  for (const BenchSpec& spec : specs) {
    for (int index = 0; index < spec.count; ++index) {
      for (const WeightScheme& scheme : schemes) {
        InstanceSpec one = spec.base;
        one.seed = mix64(spec.base.seed ^ mix64(static_cast<std::uint64_t>(index)));
        const NormalizedPair pair = generate_instance(one, scheme);

        BenchRow row;
        row.instance = spec.label + ':' + std::to_string(index);
        row.scheme = scheme_label(scheme);
        const RunReport run = run_sorting(pair.source, pair.target, scheme);
        row.alg_weight = run.total_weight;
        row.lower_bound = run.lower_bound;

        if (with_oracle) {
          const bool fits =
              pair.source.size() <= limits.max_genes && pair.target.size() <= limits.max_genes &&
              pair.source.total_nucleotides() + pair.target.total_nucleotides() <=
                  limits.max_total;
          if (fits) {
            const Rational ub = run.total_weight;
            row.oracle_weight = exact_distance(pair.source, pair.target, scheme, limits, &ub)
                                    .distance;
          }
        }

        const Rational base = row.oracle_weight ? *row.oracle_weight : row.lower_bound;
        row.ratio = base > Rational(0) ? row.alg_weight / base : Rational(1);

        const Rational factor = approximation_factor(scheme);
        bool bad = row.ratio > factor;
        if (row.oracle_weight &&
            (row.lower_bound > *row.oracle_weight || *row.oracle_weight > row.alg_weight))
          bad = true;
        if (bad) {
          row.violation = true;
          ++report.violations;
          std::ostringstream dump;
          dump << "# violation: instance " << row.instance << " scheme " << row.scheme
               << " alg " << format_rational(row.alg_weight) << " lb "
               << format_rational(row.lower_bound) << " oracle "
               << (row.oracle_weight ? format_rational(*row.oracle_weight) : std::string("-"))
               << " factor " << format_rational(factor) << '\n'
               << write_pair_text(pair);
          report.violation_dumps.push_back(dump.str());
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace rearr
