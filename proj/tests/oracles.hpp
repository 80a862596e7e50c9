#ifndef BSAKS_TESTS_ORACLES_HPP
#define BSAKS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bsaks/rational.hpp"

namespace oracle {

using bsaks::Rational;
using Dense = std::vector<Rational>;  // coordinates 1..n at [0..n-1]

inline Rational l1(const Dense& x) {
  Rational s = 0;
  for (const auto& v : x) s += abs(v);
  return s;
}

inline Rational sup(const Dense& x) {
  Rational s = 0;
  for (const auto& v : x) s = std::max(s, Rational(abs(v)));
  return s;
}

// max over F with #F <= min F of sum_F |x_i|, by subset enumeration
inline Rational schreier(const Dense& x) {
  const std::size_t n = x.size();
  Rational best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t lo = 0;
    while (!(mask >> lo & 1)) ++lo;
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > lo + 1) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s += abs(x[i]);
    }
    best = std::max(best, s);
  }
  return best;
}

inline Dense random_dense(std::mt19937_64& rng, std::size_t n, int range = 4, int den = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> d(1, den);
  Dense x(n);
  for (auto& v : x) v = bsaks::make_rational(num(rng), d(rng));
  return x;
}

}  // namespace oracle

#endif  // BSAKS_TESTS_ORACLES_HPP
