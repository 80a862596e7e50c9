#include <string>

#include "bsaks/ramsey.hpp"

namespace bsaks {

namespace {

// all subsets of `elems`, built element by element
template <class Fn>
bool each_subset(const IndexSet& elems, std::size_t pos, IndexSet& cur, Fn&& fn) {
  if (pos == elems.size()) return fn(cur);
  if (!each_subset(elems, pos + 1, cur, fn)) return false;
  cur.push_back(elems[pos]);
  const bool ok = each_subset(elems, pos + 1, cur, fn);
  cur.pop_back();
  return ok;
}

std::string show(const IndexSet& s) { return index_set_string(s); }

}  // namespace

VerifyOutcome verify_dichotomy(const HereditaryFamily& family, const DichotomyResult& result) {
  VerifyOutcome out;
  const IndexSet& m = result.m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || m[i] > family.ground() || (i && m[i] <= m[i - 1])) {
      return {false, "M is not an increasing subset of the ground set"};
    }
  }
  IndexSet cur;
  switch (result.which) {
    case DichotomyCase::kUndetermined:
      return {false, "no certificate"};
    case DichotomyCase::kA:
      each_subset(m, 0, cur, [&](const IndexSet& f) {
        const bool in = family.contains(f);
        if (f.size() <= result.d && !in) {
          out = {false, show(f) + " has at most d elements but is not in the family"};
          return false;
        }
        if (f.size() == result.d + 1 && in) {
          out = {false, show(f) + " has d + 1 elements and is in the family"};
          return false;
        }
        return true;
      });
      return out;
    case DichotomyCase::kB:
      if (result.f.size() != m.size()) return {false, "f is not defined on all of M"};
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (result.f[i] < 1 || (i && result.f[i] <= result.f[i - 1])) {
          return {false, "f is not a strictly increasing map to the positive integers"};
        }
      }
      each_subset(m, 0, cur, [&](const IndexSet& f) {
        if (f.empty()) {
          if (!family.contains(f)) out = {false, "the empty set is not in the family"};
          return out.ok;
        }
        std::size_t at = 0;
        while (m[at] != f.front()) ++at;
        if (f.size() <= result.f[at] && !family.contains(f)) {
          out = {false, show(f) + " has at most f(min F) elements but is not in the family"};
          return false;
        }
        return true;
      });
      return out;
  }
  return out;
}

VerifyOutcome verify_monochromatic(const Coloring& coloring, const IndexSet& m) {
  VerifyOutcome out;
  int seen = -1;
  IndexSet cur;
  each_subset(m, 0, cur, [&](const IndexSet& s) {
    if (s.size() != coloring.d) return true;
    const int c = coloring.color(s);
    if (seen < 0) seen = c;
    if (c != seen) {
      out = {false, show(s) + " has a different color"};
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace bsaks
