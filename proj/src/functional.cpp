#include "bsaks/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "bsaks/error.hpp"

namespace bsaks {

namespace {

Number infinite() { return Number::floating(std::numeric_limits<double>::infinity()); }

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Number bound(const Space& space, const FiniteVector& f, const Rational& limit) {
  const auto& entries = f.entries();
  Rational l1{0};
  Rational peak = abs_q(f.tail());
  for (const auto& e : entries) {
    l1 += abs_q(e.second);
    peak = std::max(peak, abs_q(e.second));
  }
  const bool finite = f.tail() == 0;
  switch (space.kind()) {
    case SpaceKind::kLp:
      if (space.p() == 1.0) return Number(peak);
      if (!finite) return infinite();
      if (std::isinf(space.p())) return Number(l1);
      {
        const double q = space.p() / (space.p() - 1.0);
        double s = 0;
        for (const auto& e : entries) s += std::pow(std::fabs(to_double(e.second)), q);
        return Number::floating(std::pow(s, 1.0 / q));
      }
    case SpaceKind::kSup: return finite ? Number(l1) : infinite();
    case SpaceKind::kC: return finite ? Number(l1 + abs_q(limit)) : infinite();
    case SpaceKind::kWeightedAlpha: {
      Rational by_peak = peak / space.alpha();
      return finite ? Number(std::min(l1, by_peak)) : Number(by_peak);
    }
    case SpaceKind::kSchreier: {
      if (!finite) return infinite();
      // cover the support by admissible sets; on each, |f(x)| <= max|f| * ||x||
      Rational covered{0};
      std::size_t i = 0;
      while (i < entries.size()) {
        const std::uint64_t a = entries[i].first.front();
        Rational m{0};
        std::size_t taken = 0;
        while (i < entries.size() && taken < a) {
          m = std::max(m, abs_q(entries[i].second));
          ++i;
          ++taken;
        }
        covered += m;
      }
      return Number(std::min(l1, covered));
    }
    case SpaceKind::kL1Sum:
    case SpaceKind::kSupSum: {
      if (!finite) return infinite();
      std::map<std::uint64_t, std::vector<FiniteVector::Entry>> blocks;
      for (const auto& e : entries) blocks[e.first.front()].emplace_back(e.first.rest(), e.second);
      Number out(0);
      for (auto& [head, list] : blocks) {
        Number b = bound(space.block(head), FiniteVector(std::move(list)), Rational(0));
        out = space.kind() == SpaceKind::kL1Sum ? max(out, b) : out + b;
      }
      return out;
    }
  }
  return infinite();
}

}  // namespace

Functional Functional::coordinate(const CoordIndex& at) {
  Functional f;
  f.kind_ = FunctionalKind::kCoordinate;
  f.coefficients_ = FiniteVector::unit(at);
  return f;
}

Functional Functional::sign_combination(FiniteVector coefficients, Rational limit, Rational budget) {
  Functional f;
  f.kind_ = FunctionalKind::kSignCombination;
  f.coefficients_ = std::move(coefficients);
  f.limit_ = std::move(limit);
  f.budget_ = std::move(budget);
  return f;
}

std::string Functional::to_string() const {
  if (kind_ == FunctionalKind::kCoordinate) {
    return "coordinate(" + coefficients_.entries().front().first.to_string() + ")";
  }
  std::string out = "sign" + coefficients_.to_string();
  if (limit_ != 0) out += " + " + bsaks::to_string(limit_) + "*lim";
  return out;
}

Rational pair(const Functional& f, const FiniteVector& v) {
  const FiniteVector& c = f.coefficients();
  if (c.tail() != 0 && v.tail() != 0) {
    throw Error(ErrorCode::kUndefinedPairing, f.to_string() + " and " + v.to_string() + " both have infinite support");
  }
  Rational out = f.limit() * v.tail();
  if (c.tail() == 0) {
    for (const auto& [idx, coef] : c.entries()) out += coef * v.at(idx);
    return out;
  }
  // finite v against a coefficient tail: sum over the support of v
  for (const auto& [idx, value] : v.entries()) out += c.at(idx) * value;
  return out;
}

Number dual_norm_bound(const Space& space, const Functional& f) {
  return bound(space, f.coefficients(), f.limit());
}

bool within_budget(const Space& space, const Functional& f) {
  return !(dual_norm_bound(space, f) > Number(f.budget()));
}

}  // namespace bsaks
