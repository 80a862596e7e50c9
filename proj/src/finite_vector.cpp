#include "bsaks/finite_vector.hpp"

#include <algorithm>
#include <charconv>

#include "bsaks/error.hpp"

namespace bsaks {

CoordIndex::CoordIndex(std::initializer_list<std::uint64_t> path)
    : CoordIndex(std::span<const std::uint64_t>(path.begin(), path.size())) {}

CoordIndex::CoordIndex(std::span<const std::uint64_t> path) {
  if (path.empty() || path.size() > kMaxDepth) {
    throw Error(ErrorCode::kInvalidArgument, "coordinate path must have 1.." + std::to_string(kMaxDepth) + " entries");
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == 0) throw Error(ErrorCode::kInvalidArgument, "coordinate path entries are positive");
    path_[i] = path[i];
  }
  depth_ = static_cast<std::uint8_t>(path.size());
}

CoordIndex CoordIndex::rest() const {
  if (depth_ < 2) throw Error(ErrorCode::kShapeMismatch, "index " + to_string() + " has no inner component");
  return CoordIndex(std::span<const std::uint64_t>(path_.data() + 1, depth_ - 1));
}

CoordIndex CoordIndex::prepend(std::uint64_t head) const {
  if (depth_ + 1u > kMaxDepth) throw Error(ErrorCode::kInvalidArgument, "coordinate path too deep");
  std::array<std::uint64_t, kMaxDepth> p{};
  p[0] = head;
  std::copy(path_.begin(), path_.begin() + depth_, p.begin() + 1);
  return CoordIndex(std::span<const std::uint64_t>(p.data(), depth_ + 1));
}

std::string CoordIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < depth_; ++i) {
    if (i) out += '.';
    out += std::to_string(path_[i]);
  }
  return out;
}

CoordIndex CoordIndex::parse(std::string_view text) {
  std::vector<std::uint64_t> parts;
  while (true) {
    auto dot = text.find('.');
    std::string_view piece = text.substr(0, dot);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || value == 0) {
      throw Error(ErrorCode::kParse, "bad coordinate index '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (dot == std::string_view::npos) break;
    text.remove_prefix(dot + 1);
  }
  return CoordIndex(std::span<const std::uint64_t>(parts));
}

bool operator==(const CoordIndex& a, const CoordIndex& b) {
  if (a.depth_ != b.depth_) return false;
  return std::equal(a.path_.begin(), a.path_.begin() + a.depth_, b.path_.begin());
}

std::strong_ordering operator<=>(const CoordIndex& a, const CoordIndex& b) {
  const std::size_t common = std::min(a.depth_, b.depth_);
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = a.path_[i] <=> b.path_[i]; c != 0) return c;
  }
  return a.depth_ <=> b.depth_;
}

FiniteVector::FiniteVector(std::vector<Entry> entries, Rational tail)
    : entries_(std::move(entries)), tail_(std::move(tail)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().first == e.first) {
      // listed values are absolute values, so duplicates add their deviations from the tail
      merged.back().second += e.second - tail_;
    } else {
      merged.push_back(std::move(e));
    }
  }
  entries_ = std::move(merged);
  canonicalize();
}

FiniteVector FiniteVector::unit(const CoordIndex& at) { return FiniteVector({{at, Rational(1)}}); }

Rational FiniteVector::at(const CoordIndex& at) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), at,
                             [](const Entry& e, const CoordIndex& key) { return e.first < key; });
  if (it != entries_.end() && it->first == at) return it->second;
  return tail_;
}

void FiniteVector::canonicalize() {
  std::erase_if(entries_, [this](const Entry& e) { return e.second == tail_; });
}

void FiniteVector::merge(const FiniteVector& other, bool subtract) {
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  const Rational new_tail = subtract ? Rational(tail_ - other.tail_) : Rational(tail_ + other.tail_);
  auto combine = [&](const Rational& a, const Rational& b) { return subtract ? Rational(a - b) : Rational(a + b); };
  auto push = [&](const CoordIndex& idx, Rational value) {
    if (value != new_tail) out.emplace_back(idx, std::move(value));
  };
  auto i = entries_.begin();
  auto j = other.entries_.begin();
  while (i != entries_.end() || j != other.entries_.end()) {
    if (j == other.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      push(i->first, combine(i->second, other.tail_));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      push(j->first, combine(tail_, j->second));
      ++j;
    } else {
      push(i->first, combine(i->second, j->second));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
  tail_ = new_tail;
}

FiniteVector FiniteVector::operator-() const {
  FiniteVector out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  out.tail_ = -out.tail_;
  return out;
}

FiniteVector& FiniteVector::operator+=(const FiniteVector& other) {
  merge(other, false);
  return *this;
}

FiniteVector& FiniteVector::operator-=(const FiniteVector& other) {
  merge(other, true);
  return *this;
}

FiniteVector& FiniteVector::operator*=(const Rational& s) {
  if (s == 0) {
    entries_.clear();
    tail_ = 0;
    return *this;
  }
  for (auto& e : entries_) e.second *= s;
  tail_ *= s;
  return *this;
}

FiniteVector& FiniteVector::operator/=(const Rational& s) {
  if (s == 0) throw Error(ErrorCode::kInvalidArgument, "division of a vector by zero");
  for (auto& e : entries_) e.second /= s;
  tail_ /= s;
  return *this;
}

std::string FiniteVector::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [idx, value] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += idx.to_string() + ": " + bsaks::to_string(value);
  }
  out += "}";
  if (tail_ != 0) out += " tail " + bsaks::to_string(tail_);
  return out;
}

void SparseAccumulator::add(const FiniteVector& v, const Rational& weight) {
  if (weight == 0) return;
  tail_ += weight * v.tail();
  for (const auto& [idx, value] : v.entries()) {
    deviation_[idx] += weight * (value - v.tail());
  }
}

FiniteVector SparseAccumulator::scaled(const Rational& factor) const {
  std::vector<FiniteVector::Entry> entries;
  entries.reserve(deviation_.size());
  const Rational tail = factor * tail_;
  for (const auto& [idx, dev] : deviation_) {
    if (dev != 0) entries.emplace_back(idx, factor * (tail_ + dev));
  }
  return FiniteVector(std::move(entries), tail);
}

void SparseAccumulator::clear() {
  deviation_.clear();
  tail_ = 0;
}

}  // namespace bsaks
