#include "bsaks/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "bsaks/error.hpp"

namespace bsaks {

namespace {

std::map<std::string, std::function<bool(SetMask)>>& predicates() {
  static std::map<std::string, std::function<bool(SetMask)>> table{
      {"empty-only", [](SetMask s) { return s == 0; }},
  };
  return table;
}

std::mutex& predicate_mutex() {
  static std::mutex m;
  return m;
}

void check_ground(std::uint64_t n) {
  if (n < 1 || n > 64) throw Error(ErrorCode::kCapExceeded, "ground size must lie in 1..64");
}

std::uint64_t parse_count(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kParse, "bad count '" + text + "'");
}

}  // namespace

SetMask mask_of(const IndexSet& s) {
  SetMask m = 0;
  for (auto i : s) {
    if (i < 1 || i > 64) throw Error(ErrorCode::kInvalidArgument, "set elements must lie in 1..64");
    m |= SetMask{1} << (i - 1);
  }
  return m;
}

IndexSet set_of(SetMask m) {
  IndexSet s;
  while (m) {
    s.push_back(static_cast<std::uint64_t>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return s;
}

HereditaryFamily HereditaryFamily::explicit_list(std::uint64_t n, const std::vector<IndexSet>& sets) {
  check_ground(n);
  HereditaryFamily f;
  f.n_ = n;
  f.rule_ = FamilyRule::kExplicit;
  for (const auto& s : sets) {
    for (auto i : s) {
      if (i < 1 || i > n) throw Error(ErrorCode::kInvalidArgument, "listed set leaves the ground set");
    }
    f.listed_.push_back(mask_of(s));
  }
  std::sort(f.listed_.begin(), f.listed_.end());
  f.listed_.erase(std::unique(f.listed_.begin(), f.listed_.end()), f.listed_.end());
  return f;
}

HereditaryFamily HereditaryFamily::schreier(std::uint64_t n) {
  check_ground(n);
  HereditaryFamily f;
  f.n_ = n;
  f.rule_ = FamilyRule::kSchreier;
  return f;
}

HereditaryFamily HereditaryFamily::cardinality_cap(std::uint64_t n, std::uint64_t d) {
  check_ground(n);
  HereditaryFamily f;
  f.n_ = n;
  f.rule_ = FamilyRule::kCardinalityCap;
  f.cap_ = d;
  return f;
}

HereditaryFamily HereditaryFamily::custom(std::uint64_t n, const std::string& id) {
  check_ground(n);
  std::lock_guard lock(predicate_mutex());
  auto it = predicates().find(id);
  if (it == predicates().end()) throw Error(ErrorCode::kUnregisteredFamily, "no predicate '" + id + "'");
  HereditaryFamily f;
  f.n_ = n;
  f.rule_ = FamilyRule::kCustom;
  f.id_ = id;
  f.pred_ = it->second;
  return f;
}

HereditaryFamily HereditaryFamily::parse(const std::string& name, std::uint64_t n) {
  if (name == "schreier") return schreier(n);
  const std::string cap = "cardinality-cap:";
  if (name.rfind(cap, 0) == 0) return cardinality_cap(n, parse_count(name.substr(cap.size())));
  if (name.rfind("cardinality-cap(", 0) == 0 && name.back() == ')') {
    return cardinality_cap(n, parse_count(name.substr(16, name.size() - 17)));
  }
  return custom(n, name);
}

void HereditaryFamily::register_predicate(const std::string& id, std::function<bool(SetMask)> pred) {
  std::lock_guard lock(predicate_mutex());
  predicates()[id] = std::move(pred);
}

std::string HereditaryFamily::name() const {
  switch (rule_) {
    case FamilyRule::kExplicit: return "explicit(" + std::to_string(listed_.size()) + " sets)";
    case FamilyRule::kSchreier: return "schreier(" + std::to_string(n_) + ")";
    case FamilyRule::kCardinalityCap: return "cardinality-cap(" + std::to_string(cap_) + ")";
    case FamilyRule::kCustom: return id_;
  }
  return "?";
}

bool HereditaryFamily::contains(SetMask s) const {
  if (n_ < 64 && (s >> n_) != 0) return false;
  switch (rule_) {
    case FamilyRule::kExplicit: return std::binary_search(listed_.begin(), listed_.end(), s);
    case FamilyRule::kSchreier:
      return s == 0 || static_cast<std::uint64_t>(std::popcount(s)) <= static_cast<std::uint64_t>(std::countr_zero(s)) + 1;
    case FamilyRule::kCardinalityCap: return static_cast<std::uint64_t>(std::popcount(s)) <= cap_;
    case FamilyRule::kCustom: return pred_(s);
  }
  return false;
}

std::optional<std::pair<IndexSet, IndexSet>> hereditary_counterexample(const HereditaryFamily& family) {
  auto removal = [&](SetMask a) -> std::optional<std::pair<IndexSet, IndexSet>> {
    std::optional<SetMask> worst;
    for (SetMask rest = a; rest; rest &= rest - 1) {
      const SetMask b = a & ~(rest & (~rest + 1));
      if (!family.contains(b) && (!worst || set_of(b) < set_of(*worst))) worst = b;
    }
    if (worst) return std::make_pair(set_of(a), set_of(*worst));
    return std::nullopt;
  };
  if (family.rule() == FamilyRule::kExplicit) {
    for (SetMask a : family.listed()) {
      if (auto c = removal(a)) return c;
    }
    return std::nullopt;
  }
  if (family.ground() > 20) return std::nullopt;
  const SetMask top = SetMask{1} << family.ground();
  for (SetMask a = 0; a < top; ++a) {
    if (!family.contains(a)) continue;
    if (auto c = removal(a)) return c;
  }
  return std::nullopt;
}

const char* dichotomy_case_name(DichotomyCase c) {
  switch (c) {
    case DichotomyCase::kA: return "a";
    case DichotomyCase::kB: return "b";
    case DichotomyCase::kUndetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Evaluates both certificates on one M (elements given as positions 0..m-1 in `elems`).
bool try_candidate(const HereditaryFamily& family, const IndexSet& elems, DichotomyResult& out) {
  const std::size_t m = elems.size();
  std::vector<bool> all_in(m + 1, true), any_in(m + 1, false);
  // smallest excluded size among subsets with minimum at position i
  std::vector<std::uint64_t> first_bad(m, m + 1);
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t local = 0; local < count; ++local) {
    SetMask s = 0;
    for (std::uint64_t rest = local; rest; rest &= rest - 1) s |= SetMask{1} << (elems[static_cast<std::size_t>(std::countr_zero(rest))] - 1);
    const auto size = static_cast<std::size_t>(std::popcount(local));
    const bool in = family.contains(s);
    if (in) {
      any_in[size] = true;
    } else {
      all_in[size] = false;
      if (local) {
        const auto lo = static_cast<std::size_t>(std::countr_zero(local));
        first_bad[lo] = std::min<std::uint64_t>(first_bad[lo], size);
      }
    }
  }
  std::size_t d = 0;
  while (d + 1 <= m && all_in[d + 1]) ++d;
  if (all_in[0] && (d == m || !any_in[d + 1])) {
    out.which = DichotomyCase::kA;
    out.m = elems;
    out.d = d;
    return true;
  }
  if (!all_in[0]) return false;
  // g(x_i): largest admissible size; unbounded within M becomes m + i
  std::vector<std::int64_t> g(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t avail = m - i;
    g[i] = first_bad[i] <= avail ? static_cast<std::int64_t>(first_bad[i]) - 1 : static_cast<std::int64_t>(m + i + 1);
  }
  std::vector<std::int64_t> f(m);
  for (std::size_t i = m; i-- > 0;) f[i] = i + 1 < m ? std::min(g[i], f[i + 1] - 1) : g[i];
  if (f[0] < 1) return false;
  out.which = DichotomyCase::kB;
  out.m = elems;
  out.f.assign(f.begin(), f.end());
  return true;
}

}  // namespace

DichotomyResult dichotomy_search(const HereditaryFamily& family, std::uint64_t m, const DichotomyOptions& options) {
  const std::uint64_t n = family.ground();
  if (m < 1 || m > n) throw Error(ErrorCode::kInvalidArgument, "target size must lie in 1..n");
  if (m > options.max_m) throw Error(ErrorCode::kCapExceeded, "target size above the search cap");
  DichotomyResult out;
  const double per = std::ldexp(1.0, static_cast<int>(m));
  double work = 0;
  IndexSet cur;
  std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t from) -> bool {
    if (cur.size() == m) {
      ++out.candidates;
      work += per;
      if (work > options.work_cap) throw Error(ErrorCode::kCapExceeded, "dichotomy search exceeded its work cap");
      return try_candidate(family, cur, out);
    }
    for (std::uint64_t x = from; x + (m - cur.size()) <= n + 1; ++x) {
      cur.push_back(x);
      if (dfs(x + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!dfs(1)) out.which = DichotomyCase::kUndetermined;
  return out;
}

Coloring constant_coloring(std::uint64_t d, std::uint64_t n, int c) {
  return {d, n, "constant:" + std::to_string(c), [c](const IndexSet&) { return c; }};
}

Coloring parity_sum_coloring(std::uint64_t d, std::uint64_t n) {
  return {d, n, "parity-sum", [](const IndexSet& s) {
            std::uint64_t t = 0;
            for (auto i : s) t += i;
            return static_cast<int>(t % 2);
          }};
}

Coloring pentagon_coloring() {
  return {2, 5, "pentagon", [](const IndexSet& s) {
            const std::uint64_t gap = s[1] - s[0];
            return gap == 1 || gap == 4 ? 1 : 0;
          }};
}

Coloring coloring_from_text(const TextBlock& block) {
  Coloring c;
  c.d = parse_count(block.require("d"));
  c.n = parse_count(block.require("n"));
  const int fallback = block.get("default") ? static_cast<int>(parse_count(*block.get("default"))) : 0;
  std::map<SetMask, int> table;
  for (const TextBlock* s : block.children_named("subset")) {
    IndexSet set;
    std::string text = s->require("set");
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      piece.erase(0, piece.find_first_not_of(' '));
      piece.erase(piece.find_last_not_of(' ') + 1);
      set.push_back(parse_count(piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    std::sort(set.begin(), set.end());
    if (set.size() != c.d || set.front() < 1 || set.back() > c.n) {
      throw Error(ErrorCode::kParse, "colored subset must have d elements in 1..n");
    }
    table[mask_of(set)] = static_cast<int>(parse_count(s->require("color")));
  }
  c.name = "file";
  c.color = [table, fallback](const IndexSet& s) {
    auto it = table.find(mask_of(s));
    return it == table.end() ? fallback : it->second;
  };
  return c;
}

Coloring coloring_by_name(const std::string& name, std::uint64_t d, std::uint64_t n) {
  if (name.rfind("constant", 0) == 0) {
    const int c = name.size() > 9 && name[8] == ':' ? static_cast<int>(parse_count(name.substr(9))) : 0;
    return constant_coloring(d, n, c);
  }
  if (name == "parity-sum") return parity_sum_coloring(d, n);
  if (name == "pentagon") return pentagon_coloring();
  throw Error(ErrorCode::kInvalidArgument, "unknown coloring '" + name + "'");
}

RamseyResult ramsey_extract(const Coloring& coloring, std::uint64_t t) {
  if (coloring.d < 1 || coloring.d > 3 || coloring.n > 20 || t > 8) {
    throw Error(ErrorCode::kCapExceeded, "ramsey search needs d <= 3, n <= 20, t <= 8");
  }
  RamseyResult out;
  if (t < coloring.d) {
    IndexSet s(t);
    for (std::uint64_t i = 0; i < t; ++i) s[i] = i + 1;
    if (t <= coloring.n) out.set = s;
    return out;
  }
  IndexSet cur;
  int color = -1;
  // new d-subsets are those containing the element just added
  std::function<bool()> consistent = [&]() {
    if (cur.size() < coloring.d) return true;
    IndexSet pick(coloring.d);
    pick.back() = cur.back();
    const std::size_t head = cur.size() - 1;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
      if (pos + 1 == coloring.d) {
        const int c = coloring.color(pick);
        if (color < 0) color = c;
        return c == color;
      }
      for (std::size_t i = from; i < head; ++i) {
        pick[pos] = cur[i];
        if (!rec(pos + 1, i + 1)) return false;
      }
      return true;
    };
    return rec(0, 0);
  };
  std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t from) -> bool {
    if (cur.size() == t) return true;
    for (std::uint64_t x = from; x + (t - cur.size()) <= coloring.n + 1; ++x) {
      const int saved = color;
      cur.push_back(x);
      if (consistent() && dfs(x + 1)) return true;
      cur.pop_back();
      color = saved;
    }
    return false;
  };
  if (dfs(1)) {
    out.set = cur;
    out.color = color < 0 ? 0 : color;
  }
  return out;
}

}  // namespace bsaks
