#include "bsaks/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bsaks/error.hpp"

namespace bsaks {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw Error(ErrorCode::kParse, "bad integer '" + std::string(text) + "'");
  Integer value{std::string(body)};
  return negative ? Integer(-value) : value;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kNonRepresentable: return "nonrepresentable";
    case ErrorCode::kUndefinedPairing: return "undefined-pairing";
    case ErrorCode::kHorizonTooSmall: return "horizon-too-small";
    case ErrorCode::kSearchBudgetExceeded: return "search-budget-exceeded";
    case ErrorCode::kCapExceeded: return "cap-exceeded";
    case ErrorCode::kNonPolyhedralNorm: return "non-polyhedral-norm";
    case ErrorCode::kPreconditionViolation: return "precondition-violation";
    case ErrorCode::kBetaEstimateUnstable: return "beta-estimate-unstable";
    case ErrorCode::kUnregisteredFamily: return "unregistered-family";
    case ErrorCode::kInvalidIndexMap: return "invalid-index-map";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "error";
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::kParse, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(ErrorCode::kParse, "bad denominator in '" + std::string(text) + "'");
    Integer den(std::string{den_text});
    if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);  // canonicalizes
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) {
      throw Error(ErrorCode::kParse, "bad decimal '" + std::string(text) + "'");
    }
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer num = Integer{std::string(whole)} * scale + (frac.empty() ? Integer(0) : Integer{std::string(frac)});
    Rational q(num, scale);
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return Rational(Integer(num), Integer(den));
}

Rational from_int128(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                   : static_cast<unsigned __int128>(value);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  Integer result = Integer(hi);
  result <<= 64;
  result += Integer(lo);
  return Rational(negative ? Integer(-result) : result);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool to_int64_pair(const Rational& q, std::int64_t& num, std::int64_t& den) {
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  static const Integer kMax(std::numeric_limits<std::int64_t>::max());
  if (n > kMax || -n > kMax || d > kMax) return false;
  num = n.convert_to<std::int64_t>();
  den = d.convert_to<std::int64_t>();
  return true;
}

const Rational& Number::exact() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw std::logic_error("Number::exact() on a floating value");
}

double Number::to_double() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return bsaks::to_double(*q);
  return std::get<Floating>(value_).v;
}

std::string Number::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return bsaks::to_string(*q);
  std::ostringstream out;
  out.precision(17);
  out << std::get<Floating>(value_).v;
  return out.str();
}

Number operator+(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(a.exact() + b.exact());
  return Number::floating(a.to_double() + b.to_double());
}

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(a.exact() - b.exact());
  return Number::floating(a.to_double() - b.to_double());
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(a.exact() * b.exact());
  return Number::floating(a.to_double() * b.to_double());
}

Number operator/(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) {
    if (b.exact() == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero");
    return Number(a.exact() / b.exact());
  }
  return Number::floating(a.to_double() / b.to_double());
}

Number Number::operator-() const {
  if (is_exact()) return Number(Rational(-exact()));
  return Number::floating(-to_double());
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.exact() < b.exact()) return std::partial_ordering::less;
    if (a.exact() > b.exact()) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

Number abs(const Number& x) { return x < Number(0) ? -x : x; }
Number max(const Number& a, const Number& b) { return a < b ? b : a; }
Number min(const Number& a, const Number& b) { return b < a ? b : a; }

}  // namespace bsaks
