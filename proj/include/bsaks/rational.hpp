#ifndef BSAKS_RATIONAL_HPP
#define BSAKS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

namespace bsaks {

/// Exact scalar used by every polyhedral computation. Expression templates are
/// disabled so the type behaves as a plain value (and as an Eigen scalar).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "p/q" or a finite decimal such as "-0.25"; the result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

Rational make_rational(std::int64_t num, std::int64_t den);
Rational from_int128(__int128 value);
double to_double(const Rational& value);

/// Returns true and stores the value when q fits a signed 64-bit numerator and denominator.
bool to_int64_pair(const Rational& q, std::int64_t& num, std::int64_t& den);

/// A norm or quantity value: exact when every input was polyhedral, floating otherwise.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  Number(int v) : value_(Rational(v)) {}    // NOLINT(google-explicit-constructor)
  static Number floating(double v) { return Number(Floating{v}); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  /// Throws std::logic_error for floating values.
  const Rational& exact() const;
  double to_double() const;
  std::string to_string() const;

  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  friend Number operator/(const Number& a, const Number& b);
  Number operator-() const;

  friend bool operator==(const Number& a, const Number& b);
  friend std::partial_ordering operator<=>(const Number& a, const Number& b);

 private:
  struct Floating {
    double v;
  };
  explicit Number(Floating f) : value_(f) {}

  std::variant<Rational, Floating> value_;
};

Number abs(const Number& x);
Number max(const Number& a, const Number& b);
Number min(const Number& a, const Number& b);

}  // namespace bsaks

#endif  // BSAKS_RATIONAL_HPP
