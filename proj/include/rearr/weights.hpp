#pragma once

#include <boost/rational.hpp>

#include <map>
#include <string>

#include "rearr/genome.hpp"

namespace rearr {

// All weights, distances, and bounds are exact rationals; no floating
// point anywhere in the accounting.
using Rational = boost::rational<long long>;

// Parses "3", "-3", "3/2", or a finite decimal like "1.5" exactly.
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// "a/b", or just "a" when the denominator is 1.
std::string format_rational(const Rational& value);

// Operation weights plus the two cycle-counting priorities p1 (good
// cycles) and p2 (all cycles) used by the potential p1*b_g + p2*b.
struct WeightScheme {
  Rational w_rev{1};
  Rational w_trans{1};
  Rational w_indel{1};
  Rational p1{1};
  Rational p2{1};

  // Throws std::invalid_argument unless all three op weights and p1 are
  // positive and p2 is non-negative. (p1 = 0 would zero out the payoff
  // of indel-only progress and break the certified ratio.)
  void validate() const;

  Rational op_weight(const Op& op) const;
  Rational sequence_weight(const OpSequence& ops) const;

  bool operator==(const WeightScheme&) const = default;
};

// Best potential drop per unit weight achievable by any single
// operation: max((p1+p2)/W_rev, 2(p1+p2)/W_trans, p1/W_indel).
Rational delta_max(const WeightScheme& s);

// Guaranteed potential drop per unit weight for each of the seven
// constructions, keyed 1..7.
std::map<int, Rational> step_delta_values(const WeightScheme& s);

// delta_max / min over steps — the certified worst-case ratio of
// emitted weight to the instance lower bound.
Rational approximation_factor(const WeightScheme& s);

}  // namespace rearr
