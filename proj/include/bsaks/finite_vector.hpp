#ifndef BSAKS_FINITE_VECTOR_HPP
#define BSAKS_FINITE_VECTOR_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsaks/rational.hpp"

namespace bsaks {

/// Hierarchical coordinate: (k) for flat spaces, (n, k) inside an l1-sum,
/// (component, ...) inside a sup-sum. Every entry is at least one.
class CoordIndex {
 public:
  static constexpr std::size_t kMaxDepth = 4;

  CoordIndex() = default;
  CoordIndex(std::initializer_list<std::uint64_t> path);
  explicit CoordIndex(std::span<const std::uint64_t> path);

  std::size_t depth() const { return depth_; }
  std::uint64_t operator[](std::size_t i) const { return path_[i]; }
  std::uint64_t front() const { return path_[0]; }

  /// The path with its first component removed.
  CoordIndex rest() const;
  /// The path with `head` prepended.
  CoordIndex prepend(std::uint64_t head) const;

  std::string to_string() const;  // "2.4"
  static CoordIndex parse(std::string_view text);

  friend bool operator==(const CoordIndex& a, const CoordIndex& b);
  friend std::strong_ordering operator<=>(const CoordIndex& a, const CoordIndex& b);

 private:
  std::array<std::uint64_t, kMaxDepth> path_{};
  std::uint8_t depth_ = 0;
};

/// Eventually constant rational vector: finitely many listed entries, every
/// other coordinate equal to `tail`. Entries are kept sorted by index, and no
/// stored entry equals the tail.
class FiniteVector {
 public:
  using Entry = std::pair<CoordIndex, Rational>;

  FiniteVector() = default;
  /// Duplicate indices are summed; entries equal to `tail` are dropped.
  explicit FiniteVector(std::vector<Entry> entries, Rational tail = Rational(0));

  static FiniteVector unit(const CoordIndex& at);
  static FiniteVector constant_tail(const Rational& tail) { return FiniteVector({}, tail); }

  const std::vector<Entry>& entries() const { return entries_; }
  const Rational& tail() const { return tail_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty() && tail_ == 0; }

  /// Value at `at` (the tail when the index is not listed).
  Rational at(const CoordIndex& at) const;

  FiniteVector operator-() const;
  FiniteVector& operator+=(const FiniteVector& other);
  FiniteVector& operator-=(const FiniteVector& other);
  FiniteVector& operator*=(const Rational& s);
  FiniteVector& operator/=(const Rational& s);

  friend FiniteVector operator+(FiniteVector a, const FiniteVector& b) { return a += b; }
  friend FiniteVector operator-(FiniteVector a, const FiniteVector& b) { return a -= b; }
  friend FiniteVector operator*(const Rational& s, FiniteVector v) { return v *= s; }
  friend FiniteVector operator*(FiniteVector v, const Rational& s) { return v *= s; }
  friend FiniteVector operator/(FiniteVector v, const Rational& s) { return v /= s; }

  friend bool operator==(const FiniteVector& a, const FiniteVector& b) {
    return a.tail_ == b.tail_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  void merge(const FiniteVector& other, bool subtract);
  void canonicalize();

  std::vector<Entry> entries_;
  Rational tail_{0};
};

/// Mutable sparse accumulator for long sums (Cesaro means, block sums).
class SparseAccumulator {
 public:
  void add(const FiniteVector& v, const Rational& weight = Rational(1));
  /// factor * (sum so far)
  FiniteVector scaled(const Rational& factor) const;
  void clear();

 private:
  // value at i = tail_ + deviation_[i]
  std::map<CoordIndex, Rational> deviation_;
  Rational tail_{0};
};

}  // namespace bsaks

#endif  // BSAKS_FINITE_VECTOR_HPP
