#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "bsaks/error.hpp"
#include "bsaks/norm.hpp"
#include "bsaks/suite.hpp"
#include "bsaks/text_format.hpp"

namespace bsaks {

namespace {

struct Instance {
  Space space = Space::sup();
  std::vector<FiniteVector> vectors;
};

Instance random_instance(std::mt19937_64& rng, std::uint64_t dims, std::uint64_t horizon, bool constant) {
  Instance in;
  std::uniform_int_distribution<int> pick_space(0, 2);
  const int s = pick_space(rng);
  in.space = s == 0 ? Space::lp(1) : s == 1 ? Space::sup() : Space::schreier();
  std::uniform_int_distribution<std::uint64_t> pick_h(std::min<std::uint64_t>(4, horizon), horizon);
  std::uniform_int_distribution<std::uint64_t> pick_d(1, dims);
  const std::uint64_t h = pick_h(rng);
  const std::uint64_t d = pick_d(rng);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den_pick(0, 2);
  std::bernoulli_distribution present(0.6);
  auto one = [&]() {
    std::vector<FiniteVector::Entry> e;
    for (std::uint64_t i = 1; i <= d; ++i) {
      if (!present(rng)) continue;
      const int den = 1 << den_pick(rng);
      const int n = num(rng) * den / 4;  // value n/den in [-2, 2]
      if (n) e.emplace_back(CoordIndex{i}, make_rational(n, den));
    }
    return FiniteVector(std::move(e));
  };
  if (constant) {
    in.vectors.assign(h, one());
  } else {
    for (std::uint64_t k = 0; k < h; ++k) in.vectors.push_back(one());
  }
  return in;
}

std::string serialize(const Instance& in) {
  TextBlock b;
  b.add_child("space", in.space.to_text());
  for (const auto& v : in.vectors) b.add_child("vector", vector_to_text(v));
  return format_text(b);
}

std::vector<FiniteVector> cesaro_means(const std::vector<FiniteVector>& xs) {
  std::vector<FiniteVector> ys;
  SparseAccumulator acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    acc.add(xs[i]);
    ys.push_back(acc.scaled(Rational(1, static_cast<long long>(i + 1))));
  }
  return ys;
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first;
};

class Trial {
 public:
  Trial(std::map<std::string, Tally>& tallies, std::uint64_t index, const Instance& in)
      : tallies_(tallies), index_(index), in_(in) {}

  void expect(const std::string& invariant, bool ok, const std::string& what) {
    Tally& t = tallies_[invariant];
    ++t.checked;
    if (ok) return;
    ++t.failed;
    if (t.first.empty()) {
      t.first = "trial " + std::to_string(index_) + " (" + in_.space.name() + "): " + what + "\n" + serialize(in_);
    }
  }

 private:
  std::map<std::string, Tally>& tallies_;
  std::uint64_t index_;
  const Instance& in_;
};

void run_trial(const Instance& in, std::mt19937_64& rng, Trial& t) {
  const Space& space = in.space;
  const auto& xs = in.vectors;
  const std::uint64_t h = xs.size();
  const auto ys = cesaro_means(xs);

  // asep against the Cesaro window, with witness and monotonicity
  const std::uint64_t mb = h / 2;
  const QuantityEstimate a = asep_upper(space, xs, mb);
  for (std::uint64_t n = 1; 2 * n <= h; ++n) {
    const Number rhs = Number(2) * norm(space, ys[2 * n - 1] - ys[n - 1]);
    t.expect("asep-cesaro", a.value <= rhs,
             "asep " + a.value.to_string() + " > 2||y_2n - y_n|| = " + rhs.to_string() + " at n=" + std::to_string(n));
  }
  {
    FiniteVector w;
    for (auto i : a.witness_blocks->first) w += xs[i - 1];
    for (auto i : a.witness_blocks->second) w -= xs[i - 1];
    const Number re = norm(space, w) / Number(Rational(static_cast<long long>(a.witness_blocks->first.size())));
    t.expect("witness", re == a.value, "asep witness re-evaluates to " + re.to_string());
  }
  const std::uint64_t mb2 = (h - 1) / 2;
  if (mb2 >= 1) {
    const std::vector<FiniteVector> shorter(xs.begin(), xs.end() - 1);
    const QuantityEstimate a_short = asep_upper(space, shorter, mb2);
    const QuantityEstimate a_small = asep_upper(space, xs, mb2);
    t.expect("monotonicity", a_small.value <= a_short.value, "asep increased with N");
    t.expect("monotonicity", a.value <= a_small.value, "asep increased with max_block");
  }

  // window profile
  const WindowProfile p = window_profile(space, xs);
  bool nonincreasing = true;
  for (std::uint64_t m = 1; m < h; ++m) nonincreasing = nonincreasing && p.at(m) >= p.at(m + 1);
  t.expect("monotonicity", nonincreasing && p.at(h) == Number(0), "D(m,N) not nonincreasing in m or D(N,N) != 0");
  {
    const WindowProfile shorter = window_profile(space, std::vector<FiniteVector>(xs.begin(), xs.end() - 1));
    bool grows = true;
    for (std::uint64_t m = 1; m < h; ++m) grows = grows && shorter.at(m) <= p.at(m);
    t.expect("monotonicity", grows, "D(m,N) decreased with N");
    bool valid = true;
    for (std::uint64_t m = 1; m <= h; ++m) {
      const auto [k, l] = p.argmax[m - 1];
      if (k == 0) {
        valid = valid && p.at(m) == Number(0);
      } else {
        valid = valid && k >= m && norm(space, xs[k - 1] - xs[l - 1]) == p.at(m);
      }
    }
    t.expect("witness", valid, "profile witness pair does not reproduce D(m,N)");
  }

  // exact LP against the grid oracle and the heuristic
  {
    std::uniform_int_distribution<std::uint64_t> pick_r(1, std::min<std::uint64_t>(4, h));
    const std::uint64_t r = pick_r(rng);
    std::vector<std::uint64_t> idx(h);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<FiniteVector> vs;
    for (std::uint64_t i = 0; i < r; ++i) vs.push_back(xs[idx[i]]);
    CrosspolytopeOptions exact;
    exact.mode = MinMode::kExact;
    const MinimizationResult lp = crosspolytope_min(space, vs, exact);
    const MinimizationResult grid = grid_oracle(space, vs, Rational(1, 24));
    const MinimizationResult heur = crosspolytope_heuristic(space, vs);
    t.expect("lp-vs-grid", lp.value <= grid.value + Number::floating(1e-12),
             "LP " + lp.value.to_string() + " > grid " + grid.value.to_string());
    t.expect("heuristic-vs-grid", heur.value <= grid.value + Number::floating(0.05),
             "heuristic " + heur.value.to_string() + " > grid + 0.05 = " + grid.value.to_string());
    Rational l1 = 0;
    for (const auto& c : lp.alpha) l1 += abs(c);
    t.expect("witness", l1 == 1 && combination_norm(space, vs, lp.alpha) == lp.value, "LP witness does not re-evaluate");
    Number lo = norm(space, vs[0]);
    for (const auto& v : vs) lo = min(lo, norm(space, v));
    t.expect("lp-vs-grid", lp.value <= lo, "LP value above min ||v_i||");
  }

  // sm over nested windows
  {
    const SequenceSpec spec = explicit_sequence(xs, space);
    const std::uint64_t top = std::min<std::uint64_t>(h, 8);
    std::uniform_int_distribution<std::uint64_t> pick_w(1, top - 1);
    const std::uint64_t w = pick_w(rng);
    IndexSet small(w), large(w + 1);
    std::iota(small.begin(), small.end(), 1);
    std::iota(large.begin(), large.end(), 1);
    const SmResult s1 = sm_delta_upper(space, spec, small);
    const SmResult s2 = sm_delta_upper(space, spec, large);
    t.expect("monotonicity", s2.estimate.value <= s1.estimate.value, "sm increased as the window grew");
    std::vector<FiniteVector> vs;
    for (auto k : *s2.estimate.witness_set) vs.push_back(xs[k - 1] - spec.traits().weak_limit);
    t.expect("witness", combination_norm(space, vs, s2.estimate.witness_alpha) == s2.estimate.value,
             "sm witness does not re-evaluate");
  }

  // l1 lower bound on Cesaro differences from the full-set spreading constant
  for (std::uint64_t m = 2; m <= std::min<std::uint64_t>(h, 6); ++m) {
    CrosspolytopeOptions exact;
    exact.mode = MinMode::kExact;
    const Number delta =
        crosspolytope_min(space, std::vector<FiniteVector>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(m)), exact)
            .value;
    for (std::uint64_t n = 1; n < m; ++n) {
      const Number lhs = norm(space, ys[m - 1] - ys[n - 1]);
      const Number rhs = Number(2) * delta * Number(1 - Rational(static_cast<long long>(n), static_cast<long long>(m)));
      t.expect("l1-lower-bound", lhs >= rhs,
               "||y_m - y_n|| = " + lhs.to_string() + " < 2 delta (1 - n/m) = " + rhs.to_string());
    }
  }
}

}  // namespace

VerificationReport fuzz_invariants(const FuzzOptions& options) {
  if (options.trials > options.trial_cap) {
    throw Error(ErrorCode::kCapExceeded, "trial count above the configured cap");
  }
  if (options.horizon < 2 || options.dims < 1) throw Error(ErrorCode::kInvalidArgument, "fuzz needs horizon >= 2, dims >= 1");
  std::map<std::string, Tally> tallies;
  for (const char* name : {"asep-cesaro", "heuristic-vs-grid", "l1-lower-bound", "lp-vs-grid", "monotonicity", "witness"}) {
    tallies[name];
  }
  std::uint64_t errors = 0;
  std::string first_error;
  for (std::uint64_t i = options.first_trial; i < options.first_trial + options.trials; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    const Instance in = random_instance(rng, options.dims, options.horizon, i % 10 == 9);
    Trial t(tallies, i, in);
    try {
      run_trial(in, rng, t);
    } catch (const Error& e) {
      ++errors;
      if (first_error.empty()) first_error = "trial " + std::to_string(i) + ": " + e.what() + "\n" + serialize(in);
    }
  }
  VerificationReport report;
  const std::string base = "bsaks fuzz --seed " + std::to_string(options.seed) + " --dims " +
                           std::to_string(options.dims) + " --horizon " + std::to_string(options.horizon);
  for (const auto& [name, tally] : tallies) {
    CheckRecord r;
    r.id = "fuzz/" + name;
    r.citation = name == "asep-cesaro" ? "finite window form of cca >= asep/2: asep_upper <= 2 ||y_2n - y_n||"
                 : name == "l1-lower-bound" ? "l1 lower bound: ||y_m - y_n|| >= 2 delta (1 - n/m)"
                                            : "estimator invariant";
    r.values = {{"trials", std::to_string(options.trials)},
                {"assertions", std::to_string(tally.checked)},
                {"failures", std::to_string(tally.failed)}};
    r.bound_kinds = {"exact"};
    r.relation = name;
    r.tolerance = name == "heuristic-vs-grid" ? "0.05" : name == "lp-vs-grid" ? "1e-12" : "0 (exact)";
    r.pass = tally.failed == 0;
    r.detail = tally.first;
    r.reproduce = base + " --trials " + std::to_string(options.trials) + " --first-trial " + std::to_string(options.first_trial);
    if (!tally.first.empty()) {
      const auto trial = tally.first.substr(6, tally.first.find(' ', 6) - 6);
      r.reproduce = base + " --trials 1 --first-trial " + trial;
    }
    report.checks.push_back(r);
  }
  CheckRecord err;
  err.id = "fuzz/errors";
  err.citation = "estimator invariant";
  err.values = {{"errors", std::to_string(errors)}};
  err.relation = "no estimator raised an error";
  err.tolerance = "none";
  err.pass = errors == 0;
  err.detail = first_error;
  err.reproduce = base + " --trials " + std::to_string(options.trials);
  report.checks.push_back(err);
  report.sort_by_id();
  return report;
}

}  // namespace bsaks
