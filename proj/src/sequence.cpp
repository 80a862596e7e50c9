#include "bsaks/sequence.hpp"

#include <limits>

#include "bsaks/error.hpp"
#include "bsaks/norm.hpp"

namespace bsaks {

namespace {

constexpr std::uint64_t kMaxCesaroPrefix = 2'000'000;

std::uint64_t checked_power(std::uint64_t k, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / k) {
      throw Error(ErrorCode::kInvalidIndexMap, "index " + std::to_string(k) + "^" + std::to_string(e) + " overflows");
    }
    out *= k;
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::uint64_t> split_u64(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = text.substr(start, comma - start);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) throw Error(ErrorCode::kParse, "bad index list '" + text + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

}  // namespace

IndexMap IndexMap::power(unsigned exponent) {
  if (exponent == 0) throw Error(ErrorCode::kInvalidIndexMap, "k^0 is not injective");
  IndexMap m;
  if (exponent == 1) return m;
  m.atoms_.push_back(Atom{exponent, {}, "k^" + std::to_string(exponent)});
  return m;
}

IndexMap IndexMap::explicit_list(std::vector<std::uint64_t> values, std::string label) {
  if (values.empty()) throw Error(ErrorCode::kInvalidIndexMap, "empty index list");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) throw Error(ErrorCode::kInvalidIndexMap, "indices are positive");
    if (i > 0 && values[i] <= values[i - 1]) {
      throw Error(ErrorCode::kInvalidIndexMap, "index list is not strictly increasing at position " + std::to_string(i + 1));
    }
  }
  IndexMap m;
  bool identity = true;
  for (std::size_t i = 0; i < values.size(); ++i) identity = identity && values[i] == i + 1;
  if (identity) return m;
  m.atoms_.push_back(Atom{1, std::move(values), std::move(label)});
  return m;
}

std::uint64_t IndexMap::operator()(std::uint64_t k) const {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "sequence indices start at 1");
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    if (it->values.empty()) {
      k = checked_power(k, it->exponent);
    } else if (k <= it->values.size()) {
      k = it->values[k - 1];
    } else {
      k = it->values.back() + (k - it->values.size());
    }
  }
  return k;
}

std::string IndexMap::name() const {
  if (atoms_.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += " o ";
    const Atom& a = atoms_[i];
    out += a.values.empty() ? a.label : a.label + "[" + join(a.values) + "]";
  }
  return out;
}

IndexMap compose(const IndexMap& f, const IndexMap& g) {
  IndexMap out = f;
  for (const auto& atom : g.atoms_) {
    if (!out.atoms_.empty() && atom.values.empty() && out.atoms_.back().values.empty()) {
      IndexMap::Atom& last = out.atoms_.back();
      last.exponent *= atom.exponent;
      last.label = "k^" + std::to_string(last.exponent);
    } else {
      out.atoms_.push_back(atom);
    }
  }
  return out;
}

TextBlock IndexMap::to_text() const {
  TextBlock b;
  for (const auto& a : atoms_) {
    TextBlock atom;
    if (a.values.empty()) {
      atom.set("power", std::to_string(a.exponent));
    } else {
      atom.set("values", join(a.values)).set("label", a.label);
    }
    b.add_child("atom", atom);
  }
  return b;
}

IndexMap IndexMap::from_text(const TextBlock& block) {
  IndexMap out;
  for (const TextBlock* atom : block.children_named("atom")) {
    if (auto p = atom->get("power")) {
      out = compose(out, power(static_cast<unsigned>(std::stoul(*p))));
    } else {
      out = compose(out, explicit_list(split_u64(atom->require("values")), atom->get("label").value_or("explicit")));
    }
  }
  return out;
}

IndexMap IndexMap::parse(const std::string& text) {
  if (text == "id" || text == "identity") return identity();
  if (text.rfind("k^", 0) == 0) {
    const std::string e = text.substr(2);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(e, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != e.size()) throw Error(ErrorCode::kParse, "bad power map '" + text + "'");
    return power(static_cast<unsigned>(v));
  }
  return explicit_list(split_u64(text));
}

TextBlock vector_to_text(const FiniteVector& v) {
  TextBlock b;
  for (const auto& [idx, value] : v.entries()) b.set(idx.to_string(), to_string(value));
  if (v.tail() != 0) b.set("tail", to_string(v.tail()));
  return b;
}

FiniteVector vector_from_text(const TextBlock& block) {
  std::vector<FiniteVector::Entry> entries;
  Rational tail{0};
  for (const auto& [key, value] : block.values) {
    if (key == "tail") {
      tail = parse_rational(value);
    } else {
      entries.emplace_back(CoordIndex::parse(key), parse_rational(value));
    }
  }
  return FiniteVector(std::move(entries), tail);
}

std::vector<FiniteVector> vectors_from_text(const TextBlock& block) {
  std::vector<FiniteVector> out;
  for (const TextBlock* v : block.children_named("vector")) out.push_back(vector_from_text(*v));
  return out;
}

SequenceSpec::SequenceSpec(Generator generator) : generator_(std::move(generator)) {
  traits_ = base_traits(generator_);
}

std::size_t SequenceSpec::cesaro_depth() const {
  std::size_t n = 0;
  for (const auto& s : stages_) n += s.kind == Stage::Kind::kCesaro;
  return n;
}

void SequenceSpec::push(Stage stage) {
  SequenceTraits& t = traits_;
  switch (stage.kind) {
    case Stage::Kind::kSubsequence:
      if (stage.map.is_identity()) return;
      if (!stages_.empty() && stages_.back().kind == Stage::Kind::kSubsequence) {
        stages_.back().map = compose(stages_.back().map, stage.map);
        return;
      }
      break;
    case Stage::Kind::kAffine: {
      if (stage.scale == 1 && stage.shift.is_zero()) return;
      t.home.validate(stage.shift);
      const Rational mag = stage.scale < 0 ? Rational(-stage.scale) : stage.scale;
      Number shift_norm = norm(t.home, stage.shift);
      t.bound = mag * (t.bound + (shift_norm.is_exact() ? shift_norm.exact() : Rational(shift_norm.to_double())));
      t.weak_limit = stage.scale * (t.weak_limit - stage.shift);
      if (t.pointwise_limit) t.pointwise_limit = stage.scale * (*t.pointwise_limit - stage.shift);
      if (t.ca_closed_form) t.ca_closed_form = mag * *t.ca_closed_form;
      if (t.uniform_distance) {
        if (stage.scale == 0) {
          t.uniform_distance.reset();
        } else {
          t.uniform_distance = mag * *t.uniform_distance;
        }
      }
      t.spreading_monotone = t.spreading_monotone && stage.shift.is_zero();
      if (!stages_.empty() && stages_.back().kind == Stage::Kind::kAffine && stages_.back().scale != 0) {
        Stage& last = stages_.back();
        last.shift = last.shift + stage.shift / last.scale;
        last.scale *= stage.scale;
        if (last.scale == 1 && last.shift.is_zero()) stages_.pop_back();
        return;
      }
      break;
    }
    case Stage::Kind::kCesaro:
      t.ca_closed_form.reset();
      t.uniform_distance.reset();
      t.spreading_monotone = false;
      break;
  }
  if (t.convergent) t.ca_closed_form = Rational(0);
  stages_.push_back(std::move(stage));
}

SequenceSpec SequenceSpec::subsequence(const IndexMap& map) const {
  SequenceSpec out = *this;
  Stage s;
  s.kind = Stage::Kind::kSubsequence;
  s.map = map;
  out.push(std::move(s));
  return out;
}

SequenceSpec SequenceSpec::cesaro() const {
  SequenceSpec out = *this;
  Stage s;
  s.kind = Stage::Kind::kCesaro;
  out.push(std::move(s));
  return out;
}

SequenceSpec SequenceSpec::shift_scale(const FiniteVector& shift, const Rational& scale) const {
  SequenceSpec out = *this;
  Stage s;
  s.kind = Stage::Kind::kAffine;
  s.shift = shift;
  s.scale = scale;
  out.push(std::move(s));
  return out;
}

std::string SequenceSpec::name() const {
  std::string out = generator_name(generator_);
  for (const auto& s : stages_) {
    switch (s.kind) {
      case Stage::Kind::kSubsequence: out += "|" + s.map.name(); break;
      case Stage::Kind::kCesaro: out += "|cesaro"; break;
      case Stage::Kind::kAffine:
        out += "|affine(" + to_string(s.scale) + (s.shift.is_zero() ? "" : "," + s.shift.to_string()) + ")";
        break;
    }
  }
  return out;
}

TextBlock SequenceSpec::to_text() const {
  TextBlock b;
  b.set("generator", generator_.id);
  for (const auto& p : generator_.params) b.set("param", to_string(p));
  for (const auto& v : generator_.vectors) b.add_child("vector", vector_to_text(v));
  if (generator_.inner) b.add_child("inner", generator_.inner->to_text());
  if (generator_.home) b.add_child("space", generator_.home->to_text());
  for (const auto& s : stages_) {
    TextBlock st;
    switch (s.kind) {
      case Stage::Kind::kSubsequence:
        st.set("kind", "subsequence").add_child("map", s.map.to_text());
        break;
      case Stage::Kind::kCesaro: st.set("kind", "cesaro"); break;
      case Stage::Kind::kAffine:
        st.set("kind", "affine").set("scale", to_string(s.scale)).add_child("shift", vector_to_text(s.shift));
        break;
    }
    b.add_child("stage", st);
  }
  return b;
}

SequenceSpec SequenceSpec::from_text(const TextBlock& block) {
  Generator g;
  g.id = block.require("generator");
  for (const auto& [k, v] : block.values) {
    if (k == "param") g.params.push_back(parse_rational(v));
  }
  g.vectors = vectors_from_text(block);
  if (const TextBlock* inner = block.child("inner")) {
    g.inner = std::make_shared<const SequenceSpec>(from_text(*inner));
  }
  if (const TextBlock* home = block.child("space")) g.home = std::make_shared<const Space>(Space::from_text(*home));
  SequenceSpec spec(std::move(g));
  for (const TextBlock* st : block.children_named("stage")) {
    const std::string kind = st->require("kind");
    if (kind == "cesaro") {
      spec = spec.cesaro();
    } else if (kind == "subsequence") {
      const TextBlock* m = st->child("map");
      spec = spec.subsequence(m ? IndexMap::from_text(*m) : IndexMap::identity());
    } else if (kind == "affine") {
      const TextBlock* shift = st->child("shift");
      spec = spec.shift_scale(shift ? vector_from_text(*shift) : FiniteVector(),
                              parse_rational(st->get("scale").value_or("1")));
    } else {
      throw Error(ErrorCode::kParse, "unknown stage kind '" + kind + "'");
    }
  }
  return spec;
}

bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
  return format_text(a.to_text()) == format_text(b.to_text());
}

namespace {

FiniteVector point(const SequenceSpec& spec, std::size_t level, std::uint64_t k);
std::vector<FiniteVector> prefix(const SequenceSpec& spec, std::size_t level, std::uint64_t n);

bool has_cesaro_below(const SequenceSpec& spec, std::size_t level) {
  for (std::size_t i = 0; i < level; ++i) {
    if (spec.stages()[i].kind == Stage::Kind::kCesaro) return true;
  }
  return false;
}

FiniteVector apply_affine(const Stage& s, const FiniteVector& x) { return s.scale * (x - s.shift); }

std::vector<FiniteVector> cesaro_means(const std::vector<FiniteVector>& xs) {
  std::vector<FiniteVector> out;
  out.reserve(xs.size());
  SparseAccumulator acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    acc.add(xs[i]);
    out.push_back(acc.scaled(Rational(Integer(1), Integer(i + 1))));
  }
  return out;
}

FiniteVector point(const SequenceSpec& spec, std::size_t level, std::uint64_t k) {
  if (level == 0) return generate_base(spec.generator(), k);
  const Stage& s = spec.stages()[level - 1];
  switch (s.kind) {
    case Stage::Kind::kSubsequence: return point(spec, level - 1, s.map(k));
    case Stage::Kind::kAffine: return apply_affine(s, point(spec, level - 1, k));
    case Stage::Kind::kCesaro: {
      if (k > kMaxCesaroPrefix) throw Error(ErrorCode::kSearchBudgetExceeded, "Cesaro mean of order " + std::to_string(k));
      SparseAccumulator acc;
      if (has_cesaro_below(spec, level - 1)) {
        for (const auto& x : prefix(spec, level - 1, k)) acc.add(x);
      } else {
        for (std::uint64_t i = 1; i <= k; ++i) acc.add(point(spec, level - 1, i));
      }
      return acc.scaled(Rational(Integer(1), Integer(k)));
    }
  }
  return {};
}

std::vector<FiniteVector> prefix(const SequenceSpec& spec, std::size_t level, std::uint64_t n) {
  std::vector<FiniteVector> out;
  if (level == 0) {
    out.reserve(n);
    for (std::uint64_t k = 1; k <= n; ++k) out.push_back(generate_base(spec.generator(), k));
    return out;
  }
  const Stage& s = spec.stages()[level - 1];
  switch (s.kind) {
    case Stage::Kind::kSubsequence: {
      if (has_cesaro_below(spec, level - 1)) {
        const std::uint64_t top = s.map(n);
        if (top > kMaxCesaroPrefix) {
          throw Error(ErrorCode::kSearchBudgetExceeded, "subsequence of Cesaro means needs prefix " + std::to_string(top));
        }
        auto below = prefix(spec, level - 1, top);
        for (std::uint64_t k = 1; k <= n; ++k) out.push_back(below[s.map(k) - 1]);
      } else {
        for (std::uint64_t k = 1; k <= n; ++k) out.push_back(point(spec, level - 1, s.map(k)));
      }
      return out;
    }
    case Stage::Kind::kAffine: {
      out = prefix(spec, level - 1, n);
      for (auto& x : out) x = apply_affine(s, x);
      return out;
    }
    case Stage::Kind::kCesaro: return cesaro_means(prefix(spec, level - 1, n));
  }
  return out;
}

}  // namespace

FiniteVector generate(const SequenceSpec& spec, std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "sequence indices start at 1");
  return point(spec, spec.stages().size(), k);
}

std::vector<FiniteVector> generate_prefix(const SequenceSpec& spec, std::uint64_t n) {
  if (n > kMaxCesaroPrefix) throw Error(ErrorCode::kSearchBudgetExceeded, "prefix length " + std::to_string(n));
  return prefix(spec, spec.stages().size(), n);
}

}  // namespace bsaks
