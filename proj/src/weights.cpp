#include "rearr/weights.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rearr {

namespace {

long long parse_ll(const std::string& text, const std::string& whole) {
  if (text.empty()) throw std::invalid_argument("bad rational: '" + whole + "'");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + whole + "'");
  }
  if (pos != text.size()) throw std::invalid_argument("bad rational: '" + whole + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = t.find('/'); slash != std::string::npos) {
    long long num = parse_ll(t.substr(0, slash), text);
    long long den = parse_ll(t.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string frac = t.substr(dot + 1);
    long long whole = parse_ll(t.substr(0, dot), text);
    if (frac.empty()) return Rational(whole);
    long long fpart = parse_ll(frac, text);
    if (fpart < 0) throw std::invalid_argument("bad rational: '" + text + "'");
    long long scale = 1;
    for (size_t k = 0; k < frac.size(); ++k) {
      if (scale > 1'000'000'000'000'000LL)
        throw std::invalid_argument("decimal too long: '" + text + "'");
      scale *= 10;
    }
    bool neg = t[0] == '-';
    Rational mag = Rational(std::abs(whole)) + Rational(fpart, scale);
    return neg ? -mag : mag;
  }
  return Rational(parse_ll(t, text));
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

void WeightScheme::validate() const {
  auto positive = [](const Rational& r, const char* what) {
    if (r <= Rational(0))
      throw std::invalid_argument(std::string(what) + " must be positive");
  };
  positive(w_rev, "reversal weight");
  positive(w_trans, "transposition weight");
  positive(w_indel, "indel weight");
  positive(p1, "p1");
  if (p2 < Rational(0)) throw std::invalid_argument("p2 must be non-negative");
}

Rational WeightScheme::op_weight(const Op& op) const {
  return std::visit(
      [&](const auto& o) -> Rational {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Reversal>) return w_rev;
        if constexpr (std::is_same_v<T, Transposition>) return w_trans;
        if constexpr (std::is_same_v<T, Insertion>) return w_indel;
        if constexpr (std::is_same_v<T, Deletion>) return w_indel;
        return w_indel;  // virtual insertion costs a real indel later
      },
      op);
}

Rational WeightScheme::sequence_weight(const OpSequence& ops) const {
  Rational total{0};
  for (const Op& op : ops) total += op_weight(op);
  return total;
}

Rational delta_max(const WeightScheme& s) {
  Rational best = (s.p1 + s.p2) / s.w_rev;
  best = std::max(best, Rational(2) * (s.p1 + s.p2) / s.w_trans);
  best = std::max(best, s.p1 / s.w_indel);
  return best;
}

std::map<int, Rational> step_delta_values(const WeightScheme& s) {
  const Rational p1 = s.p1, p2 = s.p2;
  const Rational wr = s.w_rev, wt = s.w_trans, wd = s.w_indel;
  std::map<int, Rational> out;
  out[1] = p1 / (Rational(2) * wd);
  out[2] = p1 / wd;
  out[3] = Rational(2) * (p1 + p2) / std::min(Rational(3) * wt, wt + Rational(2) * wd);
  out[4] = (p1 + Rational(2) * p2) / (wt + wd);
  out[5] = (p1 + p2) / (wr + wd);
  out[6] = (p1 + p2) / wr;
  out[7] = Rational(2) * (p1 + p2) / (Rational(3) * wr + Rational(2) * wd);
  return out;
}

Rational approximation_factor(const WeightScheme& s) {
  auto deltas = step_delta_values(s);
  Rational worst = deltas.at(1);
  for (const auto& [step, d] : deltas) worst = std::min(worst, d);
  return delta_max(s) / worst;
}

}  // namespace rearr
