#include "bsaks/catalog.hpp"

#include <algorithm>

#include "bsaks/error.hpp"
#include "bsaks/norm.hpp"

namespace bsaks {

namespace {

FiniteVector ones(std::uint64_t from, std::uint64_t to, const Rational& tail = Rational(0)) {
  std::vector<FiniteVector::Entry> e;
  for (std::uint64_t i = from; i <= to; ++i) e.emplace_back(CoordIndex{i}, Rational(1));
  return FiniteVector(std::move(e), tail);
}

std::uint64_t positive_int(const Rational& q, const std::string& what) {
  if (denominator(q) != 1 || q < 1) throw Error(ErrorCode::kInvalidArgument, what + " must be a positive integer");
  return numerator(q).convert_to<std::uint64_t>();
}

void expect_params(const Generator& g, std::size_t n) {
  if (g.params.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                g.id + " takes " + std::to_string(n) + " parameter(s), got " + std::to_string(g.params.size()));
  }
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational exact_or_upper(const Number& n) {
  return n.is_exact() ? n.exact() : Rational(n.to_double());
}

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// "id(a,b)" -> id, {a, b}
std::pair<std::string, std::vector<Rational>> split_call(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos) return {text, {}};
  if (text.back() != ')') throw Error(ErrorCode::kParse, "unbalanced parameters in '" + text + "'");
  std::vector<Rational> params;
  const std::string inside = text.substr(open + 1, text.size() - open - 2);
  if (!inside.empty()) {
    for (const auto& p : split_top(inside, ',')) params.push_back(parse_rational(p));
  }
  return {text.substr(0, open), params};
}

}  // namespace

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExact: return "exact";
    case BoundKind::kUpper: return "upper";
    case BoundKind::kLower: return "lower";
    case BoundKind::kHeuristic: return "heuristic";
  }
  return "?";
}

const std::vector<GeneratorInfo>& catalog_generators() {
  static const std::vector<GeneratorInfo> kInfo = {
      {"ell1-basis", "", "unit vectors e_k in l1", "explicit-sequence theorem, l1 part"},
      {"c0-basis", "", "unit vectors e_k in c0", "explicit-sequence theorem, c0 part"},
      {"schreier-basis", "", "unit vectors e_k in the Schreier space",
       "Schreier space as the weakly null l1-spreading-model example"},
      {"c-signflip", "", "x_k(i) = 1 for i <= k, -1 for i > k, in c", "explicit-sequence theorem, c part"},
      {"c0-summing", "", "x_k = e_1 + ... + e_k in c0", "remarks on the inequality chain, c0 ball"},
      {"c0-summing-flip", "", "x_k = e_1 + ... + e_k - e_{k+1} in c0",
       "remarks on the inequality chain, beta(B_c0) = 2"},
      {"omega-example", "n", "x^n_k = e_k placed in block n of the l1-sum of (l1, |.|_{1/n})",
       "weighted l1-sum example with small bs and large omega"},
      {"schreier-sum-ell1-pair", "eps", "(e_k, eps e_k) in Schreier (+)_inf l1",
       "Schreier variant of the B (+)_inf l1 example"},
      {"explicit", "", "listed vectors, then the last one forever", "user supplied"},
      {"constant", "", "one vector repeated", "user supplied"},
      {"blocks", "", "scale * sum_i alpha_i u_{m0 + k n + i}", "block construction for the spreading-model distortion"},
  };
  return kInfo;
}

Generator make_generator(const std::string& id, std::vector<Rational> params) {
  const auto& info = catalog_generators();
  auto it = std::find_if(info.begin(), info.end(), [&](const GeneratorInfo& g) { return g.id == id; });
  if (it == info.end()) throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + id + "'");
  if (id == "explicit" || id == "constant" || id == "blocks") {
    throw Error(ErrorCode::kInvalidArgument, id + " needs vectors; use the dedicated constructor");
  }
  Generator g;
  g.id = id;
  g.params = std::move(params);
  expect_params(g, it->params.empty() ? 0 : 1);
  if (id == "omega-example") positive_int(g.params[0], "block index n");
  if (id == "schreier-sum-ell1-pair" && g.params[0] < 0) {
    throw Error(ErrorCode::kInvalidArgument, "eps must be nonnegative");
  }
  return g;
}

FiniteVector generate_base(const Generator& g, std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "sequence indices start at 1");
  const std::string& id = g.id;
  if (id == "ell1-basis" || id == "c0-basis" || id == "schreier-basis") return FiniteVector::unit({k});
  if (id == "c-signflip") return ones(1, k, Rational(-1));
  if (id == "c0-summing") return ones(1, k);
  if (id == "c0-summing-flip") {
    FiniteVector v = ones(1, k);
    return v - FiniteVector::unit({k + 1});
  }
  if (id == "omega-example") return FiniteVector::unit({positive_int(g.params[0], "n"), k});
  if (id == "schreier-sum-ell1-pair") {
    return FiniteVector({{CoordIndex{1, k}, Rational(1)}, {CoordIndex{2, k}, g.params[0]}});
  }
  if (id == "explicit") return g.vectors[std::min<std::size_t>(k, g.vectors.size()) - 1];
  if (id == "constant") return g.vectors.front();
  if (id == "blocks") {
    const Rational& scale = g.params[0];
    const std::uint64_t m0 = positive_int(g.params[1] + 1, "offset") - 1;
    const std::uint64_t n = g.params.size() - 2;
    FiniteVector out;
    for (std::uint64_t i = 1; i <= n; ++i) {
      const Rational& a = g.params[1 + i];
      if (a != 0) out += a * generate(*g.inner, m0 + k * n + i);
    }
    return scale * out;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + id + "'");
}

SequenceTraits base_traits(const Generator& g) {
  SequenceTraits t;
  const std::string& id = g.id;
  if (id == "ell1-basis") {
    t.home = Space::lp(1.0);
    t.ca_closed_form = Rational(2);
    t.uniform_distance = Rational(2);
    t.spreading_monotone = true;
    t.pointwise_limit = FiniteVector();
  } else if (id == "c0-basis") {
    t.home = Space::sup();
    t.ca_closed_form = Rational(1);
    t.uniform_distance = Rational(1);
    t.spreading_monotone = true;
    t.pointwise_limit = FiniteVector();
  } else if (id == "schreier-basis") {
    t.home = Space::schreier();
    t.ca_closed_form = Rational(2);  // ||e_k - e_l|| = 2 once k >= 2
    t.spreading_monotone = true;
    t.pointwise_limit = FiniteVector();
  } else if (id == "c-signflip") {
    t.home = Space::c();
    t.ca_closed_form = Rational(2);
    t.uniform_distance = Rational(2);
    t.pointwise_limit = FiniteVector::constant_tail(Rational(1));
  } else if (id == "c0-summing") {
    t.home = Space::sup();
    t.ca_closed_form = Rational(1);
    t.uniform_distance = Rational(1);
    t.pointwise_limit = FiniteVector::constant_tail(Rational(1));
  } else if (id == "c0-summing-flip") {
    t.home = Space::sup();
    t.ca_closed_form = Rational(2);
    t.uniform_distance = Rational(2);
    t.pointwise_limit = FiniteVector::constant_tail(Rational(1));
  } else if (id == "omega-example") {
    t.home = Space::l1_sum_harmonic();
    const Rational n = g.params[0];
    const Rational d = std::max(Rational(2) / n, Rational(1));
    t.ca_closed_form = d;
    t.uniform_distance = d;
    t.spreading_monotone = true;
    t.pointwise_limit = FiniteVector();
  } else if (id == "schreier-sum-ell1-pair") {
    t.home = Space::sup_sum(Space::schreier(), Space::lp(1.0));
    const Rational& eps = g.params[0];
    t.bound = std::max(Rational(1), eps);
    t.ca_closed_form = std::max(Rational(2), 2 * eps);
    t.spreading_monotone = true;
    t.pointwise_limit = FiniteVector();
  } else if (id == "explicit" || id == "constant") {
    t.home = *g.home;
    t.bound = 0;
    for (const auto& v : g.vectors) t.bound = std::max(t.bound, exact_or_upper(norm(t.home, v)));
    t.convergent = true;
    t.ca_closed_form = Rational(0);
    t.weak_limit = g.vectors.back();
    t.pointwise_limit = g.vectors.back();
    if (g.vectors.size() == 1) t.spreading_monotone = false;
  } else if (id == "blocks") {
    const SequenceTraits& in = g.inner->traits();
    t.home = in.home;
    Rational l1{0};
    for (std::size_t i = 2; i < g.params.size(); ++i) l1 += abs_q(g.params[i]);
    t.bound = abs_q(g.params[0]) * l1 * in.bound;
    t.spreading_monotone = in.spreading_monotone;
    if (in.pointwise_limit && in.pointwise_limit->is_zero()) t.pointwise_limit = FiniteVector();
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + id + "'");
  }
  return t;
}

std::string generator_name(const Generator& g) {
  if (g.id == "explicit" || g.id == "constant") {
    return g.id + "[" + std::to_string(g.vectors.size()) + " vector(s) in " + g.home->name() + "]";
  }
  if (g.id == "blocks") {
    std::string out = "blocks(" + g.inner->name() + "; scale " + to_string(g.params[0]) + ", m0 " +
                      to_string(g.params[1]) + ", alpha";
    for (std::size_t i = 2; i < g.params.size(); ++i) out += " " + to_string(g.params[i]);
    return out + ")";
  }
  std::string out = g.id;
  if (!g.params.empty()) {
    out += "(";
    for (std::size_t i = 0; i < g.params.size(); ++i) out += (i ? "," : "") + to_string(g.params[i]);
    out += ")";
  }
  return out;
}

SequenceSpec catalog_sequence(const std::string& text) {
  auto parts = split_top(text, '|');
  auto [id, params] = split_call(parts[0]);
  SequenceSpec spec(make_generator(id, params));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& s = parts[i];
    if (s == "cesaro") {
      spec = spec.cesaro();
    } else if (s.rfind("k^", 0) == 0 || s == "id") {
      spec = spec.subsequence(IndexMap::parse(s));
    } else if (s.rfind("list:", 0) == 0) {
      spec = spec.subsequence(IndexMap::parse(s.substr(5)));
    } else if (s.rfind("scale:", 0) == 0) {
      spec = spec.shift_scale(FiniteVector(), parse_rational(s.substr(6)));
    } else {
      throw Error(ErrorCode::kParse, "unknown sequence stage '" + s + "'");
    }
  }
  return spec;
}

SequenceSpec explicit_sequence(std::vector<FiniteVector> vectors, const Space& home) {
  if (vectors.empty()) throw Error(ErrorCode::kInvalidArgument, "explicit sequence needs at least one vector");
  for (const auto& v : vectors) home.validate(v);
  Generator g;
  g.id = "explicit";
  g.vectors = std::move(vectors);
  g.home = std::make_shared<const Space>(home);
  return SequenceSpec(std::move(g));
}

SequenceSpec constant_sequence(const FiniteVector& v, const Space& home) {
  home.validate(v);
  Generator g;
  g.id = "constant";
  g.vectors = {v};
  g.home = std::make_shared<const Space>(home);
  return SequenceSpec(std::move(g));
}

SequenceSpec blocks_sequence(const SequenceSpec& inner, std::vector<Rational> alpha, std::uint64_t m0,
                             const Rational& scale) {
  if (alpha.empty()) throw Error(ErrorCode::kInvalidArgument, "block coefficients are empty");
  Generator g;
  g.id = "blocks";
  g.params.push_back(scale);
  g.params.push_back(Rational(Integer(m0)));
  for (auto& a : alpha) g.params.push_back(std::move(a));
  g.inner = std::make_shared<const SequenceSpec>(inner);
  return SequenceSpec(std::move(g));
}

std::vector<std::string> catalog_set_ids() { return {"ball-l1", "ball-c0", "ball-c", "omega-A(n)", "A-eps(e)"}; }

CatalogSetRecord catalog_set(const std::string& text) {
  auto [id, params] = split_call(text);
  CatalogSetRecord r;
  r.id = text;
  const std::string thm = "explicit-sequence theorem (balls of l1, c0, c)";
  if (id == "ball-l1") {
    r.summary = "unit ball of l1";
    r.space = Space::lp(1.0);
    r.members = {catalog_sequence("ell1-basis")};
    r.analytic = {{"bs", Rational(2), BoundKind::kExact, thm + ": bs(B_l1) = 2"},
                  {"wbs", Rational(0), BoundKind::kExact, thm + ": wbs(B_l1) = 0 (Schur property)"},
                  {"beta", Rational(2), BoundKind::kExact, "remarks on the inequality chain: beta(B_l1) = 2"}};
  } else if (id == "ball-c0") {
    r.summary = "unit ball of c0";
    r.space = Space::sup();
    r.members = {catalog_sequence("c0-summing"), catalog_sequence("c0-summing-flip"), catalog_sequence("c0-basis")};
    r.analytic = {{"bs", Rational(1), BoundKind::kExact, thm + ": bs(B_c0) = 1"},
                  {"wbs", Rational(0), BoundKind::kExact, thm + ": wbs(B_c0) = 0"},
                  {"beta", Rational(2), BoundKind::kExact,
                   "remarks on the inequality chain: beta(B_c0) = 2 via e_1 + ... + e_k - e_{k+1}"}};
  } else if (id == "ball-c") {
    r.summary = "unit ball of c";
    r.space = Space::c();
    r.members = {catalog_sequence("c-signflip")};
    r.analytic = {{"bs", Rational(2), BoundKind::kExact, thm + ": bs(B_c) = 2"},
                  {"wbs", Rational(0), BoundKind::kExact, thm + ": wbs(B_c) = 0"}};
  } else if (id == "omega-A") {
    if (params.size() != 1) throw Error(ErrorCode::kInvalidArgument, "omega-A takes the block index n");
    const Rational n = params[0];
    positive_int(n, "n");
    r.summary = "A_n = {x^n_k : k >= 1} in the l1-sum of (l1, |.|_{1/n})";
    r.space = Space::l1_sum_harmonic();
    r.members = {catalog_sequence("omega-example(" + to_string(n) + ")")};
    const std::string ex = "weighted l1-sum example";
    r.analytic = {{"beta", Rational(1), BoundKind::kLower, ex + ": distances ||x^n_k - x^n_k'|| >= 1"},
                  {"chi", Rational(1, 2), BoundKind::kLower, ex + ": chi >= beta / 2"},
                  {"omega", Rational(1, 2), BoundKind::kLower, ex + ": Schur property gives omega = chi"},
                  {"bs", Rational(2) / n, BoundKind::kUpper, ex + ": averages have norm max{1/n, 1/m}"}};
  } else if (id == "A-eps") {
    if (params.size() != 1 || params[0] <= 0) throw Error(ErrorCode::kInvalidArgument, "A-eps takes eps > 0");
    const Rational& eps = params[0];
    r.summary = "A_eps = {(e_k, eps e_k)} in Schreier (+)_inf l1";
    r.space = Space::sup_sum(Space::schreier(), Space::lp(1.0));
    r.members = {catalog_sequence("schreier-sum-ell1-pair(" + to_string(eps) + ")")};
    const std::string ex = "Schreier variant of the B (+)_inf l1 example";
    r.analytic = {{"bs", Rational(2), BoundKind::kExact, ex + ": bs(A_eps) = 2"},
                  {"wbs", Rational(0), BoundKind::kExact, ex + ": wbs(A_eps) = 0"},
                  {"omega", eps, BoundKind::kUpper, ex + ": omega(A_eps) <= dist(A_eps, A_0) <= eps"}};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown set record '" + text + "'");
  }
  return r;
}

}  // namespace bsaks
