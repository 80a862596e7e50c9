#include "bsaks/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "bsaks/error.hpp"
#include "bsaks/norm.hpp"
#include "bsaks/parallel.hpp"
#include "bsaks/window.hpp"

namespace bsaks {

std::string index_set_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

namespace {

// shorter prefix first
bool set_less(const IndexSet& a, const IndexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

}  // namespace

WindowProfile window_profile(const Space& space, const std::vector<FiniteVector>& prefix) {
  const std::size_t n = prefix.size();
  if (n < 2) throw Error(ErrorCode::kHorizonTooSmall, "window profile needs N >= 2");
  DenseBlock block(space, prefix);
  std::vector<Number> row_max(n, Number(0));
  std::vector<std::uint64_t> row_arg(n, 0);
  parallel_for(n, [&](std::size_t k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      Number d = block.distance(k, l);
      if (d > row_max[k]) {
        row_max[k] = d;
        row_arg[k] = l;
      }
    }
  });
  WindowProfile p;
  p.horizon = n;
  p.values.assign(n, Number(0));
  p.argmax.assign(n, {0, 0});
  for (std::size_t k = n; k-- > 0;) {
    if (k + 1 < n) {
      p.values[k] = p.values[k + 1];
      p.argmax[k] = p.argmax[k + 1];
    }
    if (row_arg[k] != 0 && row_max[k] >= p.values[k]) {
      p.values[k] = row_max[k];
      p.argmax[k] = {k + 1, row_arg[k] + 1};
    }
  }
  return p;
}

WindowProfile window_profile(const Space& space, const SequenceSpec& spec, std::uint64_t horizon) {
  if (horizon < 2) throw Error(ErrorCode::kHorizonTooSmall, "window profile needs N >= 2");
  return window_profile(space, generate_prefix(spec, horizon));
}

std::uint64_t head_index(std::uint64_t horizon, const Rational& fraction) {
  const Rational x = Rational(Integer(horizon)) * fraction;
  Integer c = numerator(x) / denominator(x);
  if (Rational(c) < x) c += 1;
  const auto m = c.convert_to<std::uint64_t>();
  return std::clamp<std::uint64_t>(m, 1, horizon);
}

QuantityEstimate ca_estimate(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                             const CaOptions& options) {
  if (horizon < 2) throw Error(ErrorCode::kHorizonTooSmall, "ca needs N >= 2");
  QuantityEstimate e;
  e.quantity = "ca";
  e.horizon = horizon;
  e.params = {{"sequence", spec.name()}, {"space", space.name()}};
  const auto& t = spec.traits();
  if (t.convergent) {
    e.value = Number(0);
    e.bound_kind = BoundKind::kExact;
    e.params.emplace_back("certificate", "eventually-constant");
  } else if (t.ca_closed_form && t.home == space) {
    e.value = Number(*t.ca_closed_form);
    e.bound_kind = BoundKind::kExact;
    e.params.emplace_back("certificate", "closed-form");
  }
  const bool certified = e.bound_kind == BoundKind::kExact;
  if (certified && !options.keep_profile) return e;

  WindowProfile profile = window_profile(space, spec, horizon);
  const std::uint64_t m = head_index(horizon, options.head_fraction);
  e.params.emplace_back("m", std::to_string(m));
  if (!certified) {
    e.value = profile.at(m);
    e.bound_kind = BoundKind::kHeuristic;
    if (profile.argmax[m - 1].first != 0) e.witness_pair = profile.argmax[m - 1];
  }
  if (options.keep_profile) e.profile = std::move(profile);
  return e;
}

QuantityEstimate cca_estimate(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                              const CaOptions& options) {
  QuantityEstimate e = ca_estimate(space, spec.cesaro(), horizon, options);
  e.quantity = "cca";
  e.params[0].second = spec.name();
  return e;
}

Number cesaro_distance(const Space& space, const SequenceSpec& spec, std::uint64_t n, std::uint64_t m) {
  const SequenceSpec c = spec.cesaro();
  return norm(space, generate(c, m) - generate(c, n));
}

std::vector<std::uint64_t> diagonal_indices(const SequenceSpec& spec, std::uint64_t length,
                                            const DiagonalOptions& options) {
  const auto& limit = spec.traits().pointwise_limit;
  if (!limit) throw Error(ErrorCode::kPreconditionViolation, "diagonal extraction needs a declared pointwise limit");
  std::vector<std::uint64_t> out{1};
  std::uint64_t p = 1;
  auto extend_p = [&](const FiniteVector& x) {
    for (const auto& [idx, v] : x.entries()) {
      if (abs(v) >= options.epsilon) p = std::max(p, idx.front() + 1);
    }
  };
  extend_p(generate(spec, 1));
  std::uint64_t k = 1;
  while (out.size() < length) {
    bool found = false;
    while (++k <= options.scan_limit) {
      const FiniteVector x = generate(spec, k);
      const FiniteVector d = x - *limit;
      const bool flat = std::all_of(d.entries().begin(), d.entries().end(),
                                    [](const FiniteVector::Entry& e) { return e.first.depth() == 1; });
      bool close = true;
      if (flat) {
        for (std::uint64_t i = 1; i <= p && close; ++i) close = abs(d.at(CoordIndex{i})) < options.epsilon;
      } else {
        close = abs(d.tail()) < options.epsilon;
        for (const auto& [idx, v] : d.entries()) {
          if (!close || idx.front() > p) break;
          if (abs(v) >= options.epsilon) close = false;
        }
      }
      if (close) {
        out.push_back(k);
        extend_p(x);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return out;
}

namespace {

struct MapCandidate {
  IndexMap map;
  std::string label;
};

std::vector<MapCandidate> subsequence_maps(const SequenceSpec& spec, std::uint64_t horizon,
                                           const SubsequenceFamilyOptions& options) {
  std::vector<MapCandidate> maps{{IndexMap::identity(), "id"}};
  if (options.use_powers) {
    maps.push_back({IndexMap::power(2), "k^2"});
    maps.push_back({IndexMap::power(3), "k^3"});
  }
  if (options.use_diagonal && spec.traits().pointwise_limit && spec.cesaro_depth() == 0) {
    auto idx = diagonal_indices(spec, horizon, options.diagonal);
    maps.push_back({IndexMap::explicit_list(std::move(idx), "diagonal"), "diagonal"});
  }
  std::vector<MapCandidate> kept;
  for (auto& c : maps) {
    const double entries = static_cast<double>(horizon) * (static_cast<double>(c.map(horizon)) + 1.0);
    if (entries <= static_cast<double>(options.budget)) kept.push_back(std::move(c));
  }
  return kept;
}

QuantityEstimate infimum_over_maps(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                                   const SubsequenceFamilyOptions& options, bool cesaro, const std::string& name) {
  auto maps = subsequence_maps(spec, horizon, options);
  std::optional<QuantityEstimate> best;
  std::string tried;
  for (const auto& c : maps) {
    SequenceSpec s = spec.subsequence(c.map);
    QuantityEstimate e = cesaro ? cca_estimate(space, s, horizon, options.ca) : ca_estimate(space, s, horizon, options.ca);
    if (!tried.empty()) tried += ",";
    tried += c.label;
    if (!best || e.value < best->value) {
      e.params.emplace_back("map", c.label);
      best = std::move(e);
    }
  }
  if (!best) throw Error(ErrorCode::kSearchBudgetExceeded, "no index map fits the budget at this horizon");
  best->quantity = name;
  best->bound_kind = BoundKind::kUpper;
  best->params.emplace_back("maps", tried);
  best->params[0].second = spec.name();
  return *best;
}

}  // namespace

QuantityEstimate wca_upper(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                           const SubsequenceFamilyOptions& options) {
  return infimum_over_maps(space, spec, horizon, options, false, "wca");
}

QuantityEstimate tcca_upper(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                            const SubsequenceFamilyOptions& options) {
  return infimum_over_maps(space, spec, horizon, options, true, "tcca");
}

namespace {

bool blocks_less(const IndexSet& f1, const IndexSet& h1, const IndexSet& f2, const IndexSet& h2) {
  if (f1 != f2) return set_less(f1, f2);
  return set_less(h1, h2);
}

struct AsepBest {
  bool found = false;
  Number value;
  IndexSet f, h;

  void offer(const Number& v, const IndexSet& nf, const IndexSet& nh) {
    if (!found || v < value || (v == value && blocks_less(nf, nh, f, h))) {
      found = true;
      value = v;
      f = nf;
      h = nh;
    }
  }
};

Number block_value(const DenseBlock& block, const IndexSet& f, const IndexSet& h) {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  terms.reserve(f.size() + h.size());
  for (auto i : f) terms.emplace_back(i - 1, 1);
  for (auto i : h) terms.emplace_back(i - 1, -1);
  return block.combination(terms, static_cast<std::int64_t>(f.size()));
}

QuantityEstimate asep_result(const AsepBest& best, std::uint64_t horizon, std::uint64_t max_block) {
  QuantityEstimate e;
  e.quantity = "asep";
  e.value = best.value;
  e.bound_kind = BoundKind::kUpper;
  e.horizon = horizon;
  e.params = {{"max_block", std::to_string(max_block)}};
  e.witness_blocks = std::make_pair(best.f, best.h);
  return e;
}

}  // namespace

QuantityEstimate asep_upper(const Space& space, const std::vector<FiniteVector>& prefix, std::uint64_t max_block,
                            const AsepOptions& options) {
  const std::uint64_t n = prefix.size();
  if (max_block < 1 || 2 * max_block > n) {
    throw Error(ErrorCode::kInvalidArgument, "asep needs 1 <= max_block <= N/2");
  }
  double pairs = 0;
  for (std::uint64_t b = 1; b <= max_block; ++b) pairs += binomial(n, 2 * b);
  if (pairs > static_cast<double>(options.pair_cap)) {
    throw Error(ErrorCode::kSearchBudgetExceeded,
                "asep search has " + std::to_string(static_cast<std::uint64_t>(pairs)) + " pairs");
  }
  DenseBlock block(space, prefix);
  // one slot per leading index; each slot scans 2b-subsets in lex order
  std::vector<AsepBest> slots(n);
  parallel_for(n, [&](std::size_t start) {
    AsepBest& best = slots[start];
    for (std::uint64_t b = 1; b <= max_block; ++b) {
      IndexSet s{start + 1};
      std::function<void()> dfs = [&]() {
        if (s.size() == 2 * b) {
          IndexSet f(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(b));
          IndexSet h(s.begin() + static_cast<std::ptrdiff_t>(b), s.end());
          best.offer(block_value(block, f, h), f, h);
          return;
        }
        const std::uint64_t need = 2 * b - s.size();
        for (std::uint64_t i = s.back() + 1; i + need - 1 <= n; ++i) {
          s.push_back(i);
          dfs();
          s.pop_back();
        }
      };
      if (start + 2 * b <= n) dfs();
    }
  });
  AsepBest best;
  for (const auto& s : slots) {
    if (s.found) best.offer(s.value, s.f, s.h);
  }
  return asep_result(best, n, max_block);
}

QuantityEstimate asep_upper(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                            std::uint64_t max_block, const AsepOptions& options) {
  QuantityEstimate e = asep_upper(space, generate_prefix(spec, horizon), max_block, options);
  e.params.insert(e.params.begin(), {"sequence", spec.name()});
  return e;
}

QuantityEstimate asep_sampled(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                              std::uint64_t max_block, std::uint64_t samples, std::uint64_t seed) {
  if (max_block < 1 || 2 * max_block > horizon) {
    throw Error(ErrorCode::kInvalidArgument, "asep needs 1 <= max_block <= N/2");
  }
  DenseBlock block(space, generate_prefix(spec, horizon));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> size_dist(1, max_block);
  IndexSet all(horizon);
  std::iota(all.begin(), all.end(), 1);
  AsepBest best;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const std::uint64_t b = size_dist(rng);
    IndexSet s;
    std::sample(all.begin(), all.end(), std::back_inserter(s), 2 * b, rng);
    IndexSet f(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(b));
    IndexSet h(s.begin() + static_cast<std::ptrdiff_t>(b), s.end());
    best.offer(block_value(block, f, h), f, h);
  }
  QuantityEstimate e = asep_result(best, horizon, max_block);
  e.params.insert(e.params.begin(), {"sequence", spec.name()});
  e.params.emplace_back("samples", std::to_string(samples));
  e.params.emplace_back("seed", std::to_string(seed));
  return e;
}

const char* set_strategy_name(SetStrategy s) {
  switch (s) {
    case SetStrategy::kAuto: return "auto";
    case SetStrategy::kExhaustive: return "exhaustive";
    case SetStrategy::kMaximal: return "maximal";
    case SetStrategy::kSpreading: return "spreading";
  }
  return "?";
}

namespace {

double exhaustive_count(const IndexSet& w, Admissibility rule) {
  const std::uint64_t n = w.size();
  if (rule == Admissibility::kFull) return std::pow(2.0, static_cast<double>(n)) - 1;
  double total = 0;
  for (std::uint64_t p = 0; p < n; ++p) {
    const std::uint64_t later = n - p - 1;
    const std::uint64_t top = std::min<std::uint64_t>(w[p] - 1, later);
    for (std::uint64_t j = 0; j <= top; ++j) total += binomial(later, j);
  }
  return total;
}

double maximal_count(const IndexSet& w, Admissibility rule) {
  if (rule == Admissibility::kFull) return w.empty() ? 0 : 1;
  double total = 0;
  for (std::uint64_t p = 0; p < w.size(); ++p) {
    const std::uint64_t later = w.size() - p - 1;
    total += binomial(later, std::min<std::uint64_t>(w[p] - 1, later));
  }
  return total;
}

void exhaustive_sets(const IndexSet& w, Admissibility rule, std::vector<IndexSet>& out) {
  IndexSet s;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    for (std::size_t p = from; p < w.size(); ++p) {
      if (rule == Admissibility::kSchreier && !s.empty() && s.size() + 1 > s.front()) break;
      if (rule == Admissibility::kSchreier && s.empty() && w[p] < 1) continue;
      s.push_back(w[p]);
      out.push_back(s);
      dfs(p + 1);
      s.pop_back();
    }
  };
  dfs(0);
}

void maximal_sets(const IndexSet& w, Admissibility rule, std::vector<IndexSet>& out) {
  if (rule == Admissibility::kFull) {
    if (!w.empty()) out.push_back(w);
    return;
  }
  for (std::size_t p = 0; p < w.size(); ++p) {
    const std::size_t later = w.size() - p - 1;
    const std::size_t take = std::min<std::size_t>(w[p] - 1, later);
    IndexSet s{w[p]};
    std::function<void(std::size_t)> dfs = [&](std::size_t from) {
      if (s.size() == take + 1) {
        out.push_back(s);
        return;
      }
      const std::size_t need = take + 1 - s.size();
      for (std::size_t q = from; q + need <= w.size(); ++q) {
        s.push_back(w[q]);
        dfs(q + 1);
        s.pop_back();
      }
    };
    dfs(p + 1);
  }
}

void spreading_sets(const IndexSet& w, Admissibility rule, std::vector<IndexSet>& out) {
  for (std::size_t r = 1; r <= w.size(); ++r) {
    std::size_t p = 0;
    if (rule == Admissibility::kSchreier) {
      while (p < w.size() && w[p] < r) ++p;
    }
    if (p + r > w.size()) continue;
    out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + r));
  }
  std::sort(out.begin(), out.end(), set_less);
}

}  // namespace

CandidateSets candidate_sets(const IndexSet& window, Admissibility rule, SetStrategy strategy, std::size_t budget,
                             bool spreading_certified) {
  IndexSet w = window;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (!w.empty() && w.front() == 0) throw Error(ErrorCode::kInvalidArgument, "window indices are positive");
  const auto b = static_cast<double>(budget);
  if (strategy == SetStrategy::kAuto) {
    if (exhaustive_count(w, rule) <= b) {
      strategy = SetStrategy::kExhaustive;
    } else if (maximal_count(w, rule) <= b) {
      strategy = SetStrategy::kMaximal;
    } else if (spreading_certified) {
      strategy = SetStrategy::kSpreading;
    } else {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "window " + std::to_string(w.size()) + " has too many admissible sets and no spreading certificate");
    }
  }
  CandidateSets out;
  out.strategy = strategy;
  switch (strategy) {
    case SetStrategy::kExhaustive:
      if (exhaustive_count(w, rule) > b) throw Error(ErrorCode::kSearchBudgetExceeded, "too many admissible sets");
      exhaustive_sets(w, rule, out.sets);
      break;
    case SetStrategy::kMaximal:
      if (maximal_count(w, rule) > b) throw Error(ErrorCode::kSearchBudgetExceeded, "too many maximal sets");
      maximal_sets(w, rule, out.sets);
      break;
    case SetStrategy::kSpreading:
      if (!spreading_certified) {
        throw Error(ErrorCode::kPreconditionViolation, "spreading strategy needs a right-spreading certificate");
      }
      spreading_sets(w, rule, out.sets);
      break;
    case SetStrategy::kAuto: break;
  }
  return out;
}

namespace {

struct SetSolve {
  CandidateSets candidates;
  std::vector<SetWitness> witnesses;
  bool all_exact = true;
};

SetSolve solve_sets(const Space& space, const SequenceSpec& spec, const IndexSet& window, const SmOptions& options) {
  const auto& t = spec.traits();
  const bool certified = t.spreading_monotone && t.weak_limit.is_zero();
  SetSolve out;
  out.candidates = candidate_sets(window, options.rule, options.strategy, options.set_budget, certified);
  std::uint64_t top = 0;
  for (const auto& s : out.candidates.sets) top = std::max(top, s.back());
  std::vector<FiniteVector> shifted = generate_prefix(spec, top);
  for (auto& v : shifted) v -= t.weak_limit;

  const auto& sets = out.candidates.sets;
  out.witnesses.resize(sets.size());
  parallel_for(sets.size(), [&](std::size_t i) {
    std::vector<FiniteVector> vs;
    vs.reserve(sets[i].size());
    for (auto k : sets[i]) vs.push_back(shifted[k - 1]);
    out.witnesses[i] = {sets[i], crosspolytope_min(space, vs, options.minimizer)};
  });
  for (const auto& w : out.witnesses) {
    if (w.result.method != MinMethod::kFaceLpExact) out.all_exact = false;
  }
  return out;
}

}  // namespace

SmResult sm_delta_upper(const Space& space, const SequenceSpec& spec, const IndexSet& window,
                        const SmOptions& options) {
  if (window.empty()) throw Error(ErrorCode::kInvalidArgument, "empty window");
  SetSolve solved = solve_sets(space, spec, window, options);
  SmResult r;
  r.strategy = solved.candidates.strategy;
  const SetWitness* best = nullptr;
  for (const auto& w : solved.witnesses) {
    if (!best || w.result.value < best->result.value) best = &w;
  }
  auto& e = r.estimate;
  e.quantity = "sm";
  e.horizon = *std::max_element(window.begin(), window.end());
  e.params = {{"sequence", spec.name()},
              {"space", space.name()},
              {"window_size", std::to_string(window.size())},
              {"rule", options.rule == Admissibility::kSchreier ? "schreier" : "full"},
              {"strategy", set_strategy_name(r.strategy)},
              {"sets", std::to_string(solved.witnesses.size())}};
  e.bound_kind = solved.all_exact ? BoundKind::kUpper : BoundKind::kHeuristic;
  if (best) {
    e.value = best->result.value;
    e.witness_set = best->set;
    e.witness_alpha = best->result.alpha;
  }
  if (options.keep_sets) r.sets = std::move(solved.witnesses);
  return r;
}

SmCheck sm_delta_check(const Space& space, const SequenceSpec& spec, const Number& delta, std::uint64_t horizon,
                       const SmOptions& options) {
  if (!(delta > Number(0))) throw Error(ErrorCode::kInvalidArgument, "delta must be positive");
  IndexSet window(horizon);
  std::iota(window.begin(), window.end(), 1);
  SetSolve solved = solve_sets(space, spec, window, options);
  SmCheck c;
  c.strategy = solved.candidates.strategy;
  c.certified = solved.all_exact;
  c.sets_checked = solved.witnesses.size();
  for (auto& w : solved.witnesses) {
    if (w.result.value < delta) c.violations.push_back(std::move(w));
  }
  c.pass = c.violations.empty();
  return c;
}

std::vector<std::string> functional_families() {
  return {"coordinate", "l1-sign", "normalized-sign", "admissible-interval-sign"};
}

bool family_registered(const std::string& family, const Space& space) {
  if (family == "coordinate") return true;
  if (family == "l1-sign") return space.kind() == SpaceKind::kLp && space.p() == 1.0;
  if (family == "normalized-sign") {
    return space.kind() == SpaceKind::kSup || space.kind() == SpaceKind::kC ||
           (space.kind() == SpaceKind::kLp && std::isinf(space.p()));
  }
  if (family == "admissible-interval-sign") return space.kind() == SpaceKind::kSchreier;
  return false;
}

std::uint64_t functional_count(const Functional& f, const std::vector<FiniteVector>& differences,
                               const Rational& epsilon) {
  std::uint64_t count = 0;
  for (const auto& d : differences) {
    if (abs(pair(f, d)) > epsilon) ++count;
  }
  return count;
}

namespace {

Rational sign_of(const Rational& q) { return q > 0 ? Rational(1) : q < 0 ? Rational(-1) : Rational(0); }

std::vector<Functional> family_members(const std::string& family, const std::vector<FiniteVector>& diffs) {
  std::vector<Functional> out;
  if (family == "coordinate") {
    std::set<CoordIndex> seen;
    for (const auto& d : diffs) {
      for (const auto& e : d.entries()) seen.insert(e.first);
    }
    for (const auto& idx : seen) out.push_back(Functional::coordinate(idx));
  } else if (family == "l1-sign") {
    out.push_back(Functional::sign_combination(FiniteVector::constant_tail(Rational(1))));
    for (const auto& d : diffs) {
      std::vector<FiniteVector::Entry> c;
      for (const auto& [idx, v] : d.entries()) c.emplace_back(idx, sign_of(v));
      if (!c.empty()) out.push_back(Functional::sign_combination(FiniteVector(std::move(c))));
    }
  } else if (family == "normalized-sign") {
    for (const auto& d : diffs) {
      std::vector<FiniteVector::Entry> c;
      for (const auto& [idx, v] : d.entries()) c.emplace_back(idx, sign_of(v));
      if (c.empty()) continue;
      const Rational n(static_cast<long long>(c.size()));
      out.push_back(Functional::sign_combination(FiniteVector(std::move(c)) / n));
    }
  } else if (family == "admissible-interval-sign") {
    std::uint64_t top = 1;
    std::map<std::uint64_t, Rational> aggregate;
    for (const auto& d : diffs) {
      for (const auto& [idx, v] : d.entries()) {
        top = std::max(top, idx.front());
        aggregate[idx.front()] += v;
      }
    }
    for (std::uint64_t a = 1; a <= top; ++a) {
      std::vector<FiniteVector::Entry> plus, agg;
      for (std::uint64_t i = a; i <= 2 * a - 1; ++i) {
        plus.emplace_back(CoordIndex{i}, Rational(1));
        auto it = aggregate.find(i);
        const Rational s = it == aggregate.end() ? Rational(0) : sign_of(it->second);
        if (s != 0) agg.emplace_back(CoordIndex{i}, s);
      }
      FiniteVector p(std::move(plus));
      FiniteVector g(std::move(agg));
      out.push_back(Functional::sign_combination(p));
      if (!g.is_zero() && !(g == p)) out.push_back(Functional::sign_combination(g));
    }
  }
  return out;
}

}  // namespace

QuantityEstimate wu_lower(const Space& space, const SequenceSpec& spec, const FiniteVector& limit,
                          std::uint64_t horizon, const WuOptions& options) {
  if (horizon < 2) throw Error(ErrorCode::kHorizonTooSmall, "wu needs N >= 2");
  for (const auto& f : options.families) {
    if (!family_registered(f, space)) {
      throw Error(ErrorCode::kUnregisteredFamily, "family '" + f + "' is not registered for " + space.name());
    }
  }
  std::vector<Rational> grid = options.epsilons;
  if (grid.empty()) {
    for (int j = 1; j <= 40; ++j) grid.push_back(Rational(j, 20) * spec.traits().bound);
  }
  std::sort(grid.begin(), grid.end());
  std::vector<FiniteVector> diffs = generate_prefix(spec, horizon);
  for (auto& d : diffs) d -= limit;
  const std::vector<FiniteVector> half(diffs.begin(), diffs.begin() + static_cast<std::ptrdiff_t>(horizon / 2));

  QuantityEstimate e;
  e.quantity = "wu";
  e.value = Number(0);
  e.bound_kind = BoundKind::kLower;
  e.horizon = horizon;
  std::string fams;
  for (const auto& f : options.families) fams += (fams.empty() ? "" : ",") + f;
  e.params = {{"sequence", spec.name()}, {"space", space.name()}, {"families", fams}, {"relative_to", "searched family"}};

  bool found = false;
  Rational best;
  for (const auto& family : options.families) {
    for (const auto& f : family_members(family, diffs)) {
      for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        if (found && *it <= best) break;
        const std::uint64_t full = functional_count(f, diffs, *it);
        if (full < 2) continue;
        if (full > functional_count(f, half, *it)) {
          found = true;
          best = *it;
          e.value = Number(best);
          e.witness_functional = f;
          e.witness_count = full;
          break;
        }
      }
    }
  }
  return e;
}

QuantityEstimate twu_estimate(const Space& space, const SequenceSpec& spec, const FiniteVector& limit,
                              std::uint64_t horizon, const WuOptions& options) {
  SubsequenceFamilyOptions maps_options;
  maps_options.budget = 2'000'000 * horizon;
  auto maps = subsequence_maps(spec, horizon, maps_options);
  std::optional<QuantityEstimate> best;
  for (const auto& c : maps) {
    if (c.map(horizon) > 2'000'000) continue;
    QuantityEstimate e = wu_lower(space, spec.subsequence(c.map), limit, horizon, options);
    if (!best || e.value < best->value) {
      e.params.emplace_back("map", c.label);
      best = std::move(e);
    }
  }
  best->quantity = "twu";
  best->bound_kind = BoundKind::kHeuristic;
  best->params[0].second = spec.name();
  return *best;
}

namespace {

EvidenceItem item(std::string quantity, std::string member, std::string source, Number value, BoundKind kind) {
  EvidenceItem it;
  it.quantity = std::move(quantity);
  it.member = std::move(member);
  it.source = std::move(source);
  it.value = std::move(value);
  it.kind = kind;
  return it;
}

void check_item(EvidenceItem& item, const CatalogSetRecord& record, const Rational& slack) {
  for (const auto& a : record.analytic) {
    if (a.quantity != item.quantity) continue;
    if (a.kind == BoundKind::kExact || a.kind == BoundKind::kUpper) {
      item.checked = true;
      item.consistent = item.value <= Number(a.value + slack);
      item.relation = item.value.to_string() + " <= " + to_string(a.value) + " + " + to_string(slack);
    }
  }
}

}  // namespace

SetReport set_quantities(const CatalogSetRecord& record, const SetQuantityOptions& options) {
  SetReport report;
  report.record = record;
  const Space& space = record.space;
  for (const auto& member : record.members) {
    const std::string name = member.name();

    SubsequenceFamilyOptions maps;
    maps.ca.keep_profile = false;
    QuantityEstimate t = tcca_upper(space, member, options.tcca_horizon, maps);
    EvidenceItem tcca = item("bs", name, "tcca N=" + std::to_string(options.tcca_horizon), t.value, BoundKind::kHeuristic);
    check_item(tcca, record, options.slack);
    report.evidence.push_back(tcca);

    CaOptions ca;
    ca.keep_profile = false;
    QuantityEstimate c = cca_estimate(space, member, options.cesaro_horizon, ca);
    EvidenceItem cca = item("bs", name, "cca N=" + std::to_string(options.cesaro_horizon), c.value, BoundKind::kHeuristic);
    check_item(cca, record, options.slack);
    report.evidence.push_back(cca);

    QuantityEstimate as = asep_upper(space, member, options.asep_horizon, options.asep_block);
    EvidenceItem half = item("bs", name,
                      "asep/2 N=" + std::to_string(options.asep_horizon) + " B=" + std::to_string(options.asep_block),
                      as.value / Number(2), BoundKind::kHeuristic);
    check_item(half, record, options.slack);
    report.evidence.push_back(half);

    if (member.traits().uniform_distance && member.traits().home == space) {
      EvidenceItem beta = item("beta", name, "uniform distance", Number(*member.traits().uniform_distance),
                        BoundKind::kLower);
      check_item(beta, record, Rational(0));
      report.evidence.push_back(beta);
    }

    IndexSet window(options.sm_window);
    std::iota(window.begin(), window.end(), 1);
    SmOptions sm;
    sm.keep_sets = false;
    QuantityEstimate s = sm_delta_upper(space, member, window, sm).estimate;
    EvidenceItem smi = item("sm", name, "sm window 1.." + std::to_string(options.sm_window), s.value, s.bound_kind);
    check_item(smi, record, options.slack);
    report.evidence.push_back(smi);
  }
  for (const auto& item : report.evidence) {
    if (item.checked && !item.consistent) report.consistent = false;
  }
  return report;
}

}  // namespace bsaks
