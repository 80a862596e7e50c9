#include "bsaks/space.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bsaks/error.hpp"

namespace bsaks {

namespace {

std::string format_p(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream out;
  out << p;
  return out.str();
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw Error(ErrorCode::kParse, "bad exponent '" + text + "'");
  return p;
}

}  // namespace

Space Space::lp(double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::kInvalidArgument, "p must lie in [1, inf]");
  Space s;
  s.kind_ = SpaceKind::kLp;
  s.p_ = p;
  return s;
}

Space Space::sup() {
  Space s;
  s.kind_ = SpaceKind::kSup;
  return s;
}

Space Space::c() {
  Space s;
  s.kind_ = SpaceKind::kC;
  return s;
}

Space Space::weighted_alpha(const Rational& alpha) {
  if (alpha <= 0 || alpha > 1) throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1]");
  Space s;
  s.kind_ = SpaceKind::kWeightedAlpha;
  s.alpha_ = alpha;
  return s;
}

Space Space::schreier() {
  Space s;
  s.kind_ = SpaceKind::kSchreier;
  return s;
}

Space Space::l1_sum(const Space& block) {
  Space s;
  s.kind_ = SpaceKind::kL1Sum;
  s.rule_.kind = BlockRule::Kind::kUniform;
  s.rule_.inner = std::make_shared<const Space>(block);
  return s;
}

Space Space::l1_sum_harmonic(const Rational& scale) {
  if (scale <= 0) throw Error(ErrorCode::kInvalidArgument, "harmonic scale must be positive");
  Space s;
  s.kind_ = SpaceKind::kL1Sum;
  s.rule_.kind = BlockRule::Kind::kHarmonicAlpha;
  s.rule_.scale = scale;
  return s;
}

Space Space::sup_sum(const Space& first, const Space& second) {
  Space s;
  s.kind_ = SpaceKind::kSupSum;
  s.first_ = std::make_shared<const Space>(first);
  s.second_ = std::make_shared<const Space>(second);
  return s;
}

Space Space::block(std::uint64_t n) const {
  if (kind_ == SpaceKind::kL1Sum) {
    if (rule_.kind == BlockRule::Kind::kUniform) return *rule_.inner;
    Rational a = rule_.scale / Rational(Integer(n));
    return weighted_alpha(a > 1 ? Rational(1) : a);
  }
  if (kind_ == SpaceKind::kSupSum) {
    if (n == 1) return *first_;
    if (n == 2) return *second_;
    throw Error(ErrorCode::kShapeMismatch, "sup-sum component must be 1 or 2, got " + std::to_string(n));
  }
  throw Error(ErrorCode::kShapeMismatch, name() + " has no blocks");
}

bool Space::is_polyhedral() const {
  switch (kind_) {
    case SpaceKind::kLp: return p_ == 1.0 || std::isinf(p_);
    case SpaceKind::kL1Sum:
      return rule_.kind == BlockRule::Kind::kHarmonicAlpha || rule_.inner->is_polyhedral();
    case SpaceKind::kSupSum: return first_->is_polyhedral() && second_->is_polyhedral();
    default: return true;
  }
}

void Space::validate_index(const CoordIndex& idx) const {
  if (kind_ == SpaceKind::kL1Sum || kind_ == SpaceKind::kSupSum) {
    if (idx.depth() < 2) {
      throw Error(ErrorCode::kShapeMismatch, "index " + idx.to_string() + " too shallow for " + name());
    }
    block(idx.front()).validate_index(idx.rest());
    return;
  }
  if (idx.depth() != 1) {
    throw Error(ErrorCode::kShapeMismatch, "index " + idx.to_string() + " too deep for " + name());
  }
}

void Space::validate(const FiniteVector& v) const {
  if (v.tail() != 0 && !allows_tail()) {
    throw Error(ErrorCode::kNonRepresentable, "nonzero tail " + to_string(v.tail()) + " in " + name());
  }
  for (const auto& e : v.entries()) validate_index(e.first);
}

std::string Space::name() const {
  switch (kind_) {
    case SpaceKind::kLp:
      if (p_ == 1.0) return "l1";
      if (std::isinf(p_)) return "linf";
      return "lp:" + format_p(p_);
    case SpaceKind::kSup: return "sup";
    case SpaceKind::kC: return "c";
    case SpaceKind::kWeightedAlpha: return "weighted:" + to_string(alpha_);
    case SpaceKind::kSchreier: return "schreier";
    case SpaceKind::kL1Sum:
      if (rule_.kind == BlockRule::Kind::kHarmonicAlpha) {
        return rule_.scale == 1 ? std::string("omega") : "omega:" + to_string(rule_.scale);
      }
      return "l1-sum(" + rule_.inner->name() + ")";
    case SpaceKind::kSupSum: return "sup-sum(" + first_->name() + "," + second_->name() + ")";
  }
  return "?";
}

TextBlock Space::to_text() const {
  TextBlock b;
  switch (kind_) {
    case SpaceKind::kLp: b.set("kind", "lp").set("p", format_p(p_)); break;
    case SpaceKind::kSup: b.set("kind", "sup"); break;
    case SpaceKind::kC: b.set("kind", "c"); break;
    case SpaceKind::kWeightedAlpha: b.set("kind", "weighted-alpha").set("alpha", to_string(alpha_)); break;
    case SpaceKind::kSchreier: b.set("kind", "schreier"); break;
    case SpaceKind::kL1Sum:
      b.set("kind", "l1-sum");
      if (rule_.kind == BlockRule::Kind::kHarmonicAlpha) {
        b.set("block-rule", "harmonic-alpha").set("scale", to_string(rule_.scale));
      } else {
        b.set("block-rule", "uniform").add_child("block", rule_.inner->to_text());
      }
      break;
    case SpaceKind::kSupSum:
      b.set("kind", "sup-sum").add_child("first", first_->to_text()).add_child("second", second_->to_text());
      break;
  }
  return b;
}

Space Space::from_text(const TextBlock& block) {
  const std::string kind = block.require("kind");
  if (kind == "lp") return lp(parse_p(block.require("p")));
  if (kind == "sup") return sup();
  if (kind == "c") return c();
  if (kind == "weighted-alpha") return weighted_alpha(parse_rational(block.require("alpha")));
  if (kind == "schreier") return schreier();
  if (kind == "l1-sum") {
    const std::string rule = block.get("block-rule").value_or("uniform");
    if (rule == "harmonic-alpha") return l1_sum_harmonic(parse_rational(block.get("scale").value_or("1")));
    if (rule != "uniform") throw Error(ErrorCode::kParse, "unknown block rule '" + rule + "'");
    const TextBlock* inner = block.child("block");
    if (!inner) throw Error(ErrorCode::kParse, "uniform l1-sum needs a 'block' child");
    return l1_sum(from_text(*inner));
  }
  if (kind == "sup-sum") {
    const TextBlock* a = block.child("first");
    const TextBlock* b = block.child("second");
    if (!a || !b) throw Error(ErrorCode::kParse, "sup-sum needs 'first' and 'second' children");
    return sup_sum(from_text(*a), from_text(*b));
  }
  throw Error(ErrorCode::kParse, "unknown space kind '" + kind + "'");
}

Space Space::parse_name(const std::string& name) {
  if (name == "l1") return lp(1.0);
  if (name == "linf") return lp(std::numeric_limits<double>::infinity());
  if (name == "sup" || name == "c0") return sup();
  if (name == "c") return c();
  if (name == "schreier") return schreier();
  if (name == "omega") return l1_sum_harmonic();
  if (name == "schreier+l1") return sup_sum(schreier(), lp(1.0));
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    if (head == "lp") return lp(parse_p(arg));
    if (head == "weighted") return weighted_alpha(parse_rational(arg));
    if (head == "omega") return l1_sum_harmonic(parse_rational(arg));
  }
  throw Error(ErrorCode::kParse, "unknown space '" + name + "'");
}

bool operator==(const Space& a, const Space& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case SpaceKind::kLp: return a.p_ == b.p_;
    case SpaceKind::kWeightedAlpha: return a.alpha_ == b.alpha_;
    case SpaceKind::kL1Sum:
      if (a.rule_.kind != b.rule_.kind) return false;
      if (a.rule_.kind == BlockRule::Kind::kHarmonicAlpha) return a.rule_.scale == b.rule_.scale;
      return *a.rule_.inner == *b.rule_.inner;
    case SpaceKind::kSupSum: return *a.first_ == *b.first_ && *a.second_ == *b.second_;
    default: return true;
  }
}

}  // namespace bsaks
