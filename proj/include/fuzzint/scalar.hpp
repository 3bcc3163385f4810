/*
 *   Copyright 2026 The fuzzint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FUZZINT_SCALAR_HPP
#define FUZZINT_SCALAR_HPP

#include <charconv>
#include <climits>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "fuzzint/error.hpp"

namespace fuzzint {

using rational = boost::multiprecision::cpp_rational;
using big_int = boost::multiprecision::cpp_int;

enum class Realization { exact, floating };

inline const char* to_string(Realization r) noexcept
{
  return r == Realization::exact ? "exact" : "float";
}

namespace detail {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

/// Exact value p/q in lowest terms with 0 < q < 2^63; the common case.
struct Frac {
  std::int64_t num;
  std::int64_t den;
};

inline u128 gcd128(u128 a, u128 b)
{
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline big_int to_big(u128 v)
{
  big_int r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

} // namespace detail

/// A number in [0,1], either an exact rational (kept in lowest terms) or a
/// double. Immutable. Every operation combining two values requires both to
/// share the same realization and throws realization_mismatch otherwise.
///
/// Exact values whose numerator and denominator fit in 64 bits live inline;
/// anything larger falls back to an arbitrary-precision rational.
class Value {
 public:
  /// Exact zero.
  Value() : rep_(detail::Frac{0, 1}) {}

  static Value exact(rational q)
  {
    if (q < 0 || q > 1) {
      throw domain_error("value " + q.str() + " outside [0,1]");
    }
    return from_rational(std::move(q));
  }
  static Value exact(std::int64_t num, std::int64_t den)
  {
    if (den == 0) {
      throw domain_error("zero denominator");
    }
    detail::i128 n = num;
    detail::i128 d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n < 0 || n > d) {
      throw domain_error("value " + std::to_string(num) + "/" + std::to_string(den) + " outside [0,1]");
    }
    return from_parts(static_cast<detail::u128>(n), static_cast<detail::u128>(d));
  }
  static Value floating(double d)
  {
    if (!(d >= 0.0 && d <= 1.0)) {
      throw domain_error("value " + std::to_string(d) + " outside [0,1]");
    }
    return Value(d);
  }

  static Value zero(Realization r) { return r == Realization::exact ? Value(detail::Frac{0, 1}) : Value(0.0); }
  static Value one(Realization r) { return r == Realization::exact ? Value(detail::Frac{1, 1}) : Value(1.0); }

  Realization realization() const noexcept
  {
    return std::holds_alternative<double>(rep_) ? Realization::floating : Realization::exact;
  }
  bool is_exact() const noexcept { return realization() == Realization::exact; }

  rational as_rational() const
  {
    if (const auto* f = std::get_if<detail::Frac>(&rep_)) {
      return rational(f->num, f->den);
    }
    if (const auto* q = std::get_if<rational>(&rep_)) {
      return *q;
    }
    throw unsupported_realization("float value has no exact rational form");
  }
  double as_double() const
  {
    if (const auto* f = std::get_if<detail::Frac>(&rep_)) {
      constexpr std::int64_t exact_limit = std::int64_t{1} << 53;
      if (f->den <= exact_limit) {
        return static_cast<double>(f->num) / static_cast<double>(f->den);
      }
      return rational(f->num, f->den).convert_to<double>();
    }
    if (const auto* q = std::get_if<rational>(&rep_)) {
      return q->convert_to<double>();
    }
    return std::get<double>(rep_);
  }

  // Exact values are canonical (inline whenever they fit), so a big rational
  // is never 0 or 1.
  bool is_zero() const
  {
    if (const auto* f = std::get_if<detail::Frac>(&rep_)) {
      return f->num == 0;
    }
    return std::holds_alternative<double>(rep_) && std::get<double>(rep_) == 0.0;
  }
  bool is_one() const
  {
    if (const auto* f = std::get_if<detail::Frac>(&rep_)) {
      return f->num == f->den;
    }
    return std::holds_alternative<double>(rep_) && std::get<double>(rep_) == 1.0;
  }

  /// Same value carried into another realization. Exact -> float rounds;
  /// float -> exact is the exact binary fraction of the double.
  Value to(Realization r) const
  {
    if (r == realization()) {
      return *this;
    }
    if (r == Realization::floating) {
      return Value(as_double());
    }
    return from_rational(rational(std::get<double>(rep_)));
  }

  /// Three-way comparison: negative, zero or positive.
  friend int compare(const Value& x, const Value& y)
  {
    x.require_same(y);
    const auto* fx = std::get_if<detail::Frac>(&x.rep_);
    const auto* fy = std::get_if<detail::Frac>(&y.rep_);
    if (fx && fy) {
      const detail::i128 a = static_cast<detail::i128>(fx->num) * fy->den;
      const detail::i128 b = static_cast<detail::i128>(fy->num) * fx->den;
      return a < b ? -1 : (b < a ? 1 : 0);
    }
    if (x.is_exact()) {
      const rational a = x.as_rational();
      const rational b = y.as_rational();
      return a < b ? -1 : (b < a ? 1 : 0);
    }
    const double a = std::get<double>(x.rep_);
    const double b = std::get<double>(y.rep_);
    return a < b ? -1 : (b < a ? 1 : 0);
  }

  friend bool operator==(const Value& x, const Value& y) { return compare(x, y) == 0; }
  friend bool operator!=(const Value& x, const Value& y) { return compare(x, y) != 0; }
  friend bool operator<(const Value& x, const Value& y) { return compare(x, y) < 0; }
  friend bool operator<=(const Value& x, const Value& y) { return compare(x, y) <= 0; }
  friend bool operator>(const Value& x, const Value& y) { return compare(x, y) > 0; }
  friend bool operator>=(const Value& x, const Value& y) { return compare(x, y) >= 0; }

  void require_same(const Value& other) const
  {
    if (realization() != other.realization()) {
      throw realization_mismatch();
    }
  }

 private:
  explicit Value(detail::Frac f) : rep_(f) {}
  explicit Value(rational q) : rep_(std::move(q)) {}
  explicit Value(double d) : rep_(d) {}

  // n/d with 0 <= n <= d, d > 0.
  static Value from_parts(detail::u128 n, detail::u128 d)
  {
    const detail::u128 g = detail::gcd128(n, d);
    n /= g;
    d /= g;
    constexpr auto limit = static_cast<detail::u128>(INT64_MAX);
    if (d <= limit) {
      return Value(detail::Frac{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)});
    }
    return Value(rational(detail::to_big(n), detail::to_big(d)));
  }

  static Value from_rational(rational q)
  {
    const big_int& num = boost::multiprecision::numerator(q);
    const big_int& den = boost::multiprecision::denominator(q);
    if (den <= INT64_MAX && num <= INT64_MAX && num >= 0) {
      return Value(detail::Frac{num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>()});
    }
    return Value(std::move(q));
  }

  // Exact binary operation: 128-bit arithmetic on inline fractions, big
  // rationals otherwise.
  template <class Small, class Big>
  static Value exact_op(const Value& x, const Value& y, Small small, Big big)
  {
    const auto* fx = std::get_if<detail::Frac>(&x.rep_);
    const auto* fy = std::get_if<detail::Frac>(&y.rep_);
    if (fx && fy) {
      return small(*fx, *fy);
    }
    return from_rational(big(x.as_rational(), y.as_rational()));
  }

  std::variant<detail::Frac, rational, double> rep_;

  friend Value v_add_clamped(const Value&, const Value&);
  friend Value v_sub_floored(const Value&, const Value&);
  friend Value v_mul(const Value&, const Value&);
  friend Value v_complement(const Value&);
};

/// x ∨ y
inline Value v_join(const Value& x, const Value& y) { return x < y ? y : x; }

/// x ∧ y
inline Value v_meet(const Value& x, const Value& y) { return y < x ? y : x; }

/// (x + y) ∧ 1
inline Value v_add_clamped(const Value& x, const Value& y)
{
  x.require_same(y);
  if (x.is_exact()) {
    return Value::exact_op(
        x, y,
        [](detail::Frac a, detail::Frac b) {
          const auto n = static_cast<detail::u128>(a.num) * static_cast<detail::u128>(b.den)
                         + static_cast<detail::u128>(b.num) * static_cast<detail::u128>(a.den);
          const auto d = static_cast<detail::u128>(a.den) * static_cast<detail::u128>(b.den);
          return n >= d ? Value::one(Realization::exact) : Value::from_parts(n, d);
        },
        [](const rational& a, const rational& b) {
          rational s = a + b;
          return s > 1 ? rational(1) : s;
        });
  }
  const double s = std::get<double>(x.rep_) + std::get<double>(y.rep_);
  return Value(s > 1.0 ? 1.0 : s);
}

/// (x - y) ∨ 0
inline Value v_sub_floored(const Value& x, const Value& y)
{
  x.require_same(y);
  if (x.is_exact()) {
    return Value::exact_op(
        x, y,
        [](detail::Frac a, detail::Frac b) {
          const auto p = static_cast<detail::u128>(a.num) * static_cast<detail::u128>(b.den);
          const auto q = static_cast<detail::u128>(b.num) * static_cast<detail::u128>(a.den);
          if (p <= q) {
            return Value::zero(Realization::exact);
          }
          return Value::from_parts(p - q, static_cast<detail::u128>(a.den) * static_cast<detail::u128>(b.den));
        },
        [](const rational& a, const rational& b) {
          rational d = a - b;
          return d < 0 ? rational(0) : d;
        });
  }
  const double d = std::get<double>(x.rep_) - std::get<double>(y.rep_);
  return Value(d < 0.0 ? 0.0 : d);
}

/// x · y (closed in [0,1])
inline Value v_mul(const Value& x, const Value& y)
{
  x.require_same(y);
  if (x.is_exact()) {
    return Value::exact_op(
        x, y,
        [](detail::Frac a, detail::Frac b) {
          return Value::from_parts(static_cast<detail::u128>(a.num) * static_cast<detail::u128>(b.num),
                                   static_cast<detail::u128>(a.den) * static_cast<detail::u128>(b.den));
        },
        [](const rational& a, const rational& b) { return rational(a * b); });
  }
  return Value(std::get<double>(x.rep_) * std::get<double>(y.rep_));
}

/// 1 - x
inline Value v_complement(const Value& x)
{
  if (const auto* f = std::get_if<detail::Frac>(&x.rep_)) {
    return Value(detail::Frac{f->den - f->num, f->den});
  }
  if (x.is_exact()) {
    return Value(rational(1 - x.as_rational()));
  }
  const double c = 1.0 - std::get<double>(x.rep_);
  return Value(c < 0.0 ? 0.0 : (c > 1.0 ? 1.0 : c));
}

/// Absolute tolerance used by every float comparison in law checks.
/// Exact values are always compared exactly.
struct Tolerance {
  double epsilon = 1e-9;
};

/// x ≤ y, exactly for rationals and up to the tolerance for floats.
inline bool le_tol(const Value& x, const Value& y, Tolerance tol = {})
{
  x.require_same(y);
  if (x.is_exact()) {
    return x <= y;
  }
  return x.as_double() <= y.as_double() + tol.epsilon;
}

inline bool eq_tol(const Value& x, const Value& y, Tolerance tol = {})
{
  x.require_same(y);
  if (x.is_exact()) {
    return x == y;
  }
  return std::fabs(x.as_double() - y.as_double()) <= tol.epsilon;
}

namespace detail {

inline big_int parse_digits(std::string_view digits)
{
  big_int out = 0;
  for (char ch : digits) {
    out *= 10;
    out += ch - '0';
  }
  return out;
}

inline bool all_digits(std::string_view s)
{
  if (s.empty()) {
    return false;
  }
  for (char ch : s) {
    if (ch < '0' || ch > '9') {
      return false;
    }
  }
  return true;
}

inline big_int pow10(std::size_t e)
{
  big_int p = 1;
  for (std::size_t i = 0; i < e; ++i) {
    p *= 10;
  }
  return p;
}

// Exact reading of "p/q", "12", "0.125", ".5", "2.5e-1".
inline rational parse_rational(std::string_view text)
{
  const auto fail = [&] { return parse_error("cannot parse '" + std::string(text) + "' as a rational"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw fail();
    }
    big_int d = parse_digits(den);
    if (d == 0) {
      throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    return rational(parse_digits(num), d);
  }
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    auto exp_text = text.substr(e + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 4) {
      throw fail();
    }
    exponent = std::stol(std::string(exp_text));
    if (negative) {
      exponent = -exponent;
    }
  }
  std::string digits;
  std::size_t frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto int_part = mantissa.substr(0, dot);
    auto frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))
        || (int_part.empty() && frac_part.empty())) {
      throw fail();
    }
    digits = std::string(int_part) + std::string(frac_part);
    frac_len = frac_part.size();
  } else {
    if (!all_digits(mantissa)) {
      throw fail();
    }
    digits = std::string(mantissa);
  }
  rational q(parse_digits(digits), pow10(frac_len));
  if (exponent > 0) {
    q *= pow10(static_cast<std::size_t>(exponent));
  } else if (exponent < 0) {
    q /= pow10(static_cast<std::size_t>(-exponent));
  }
  return q;
}

} // namespace detail

/// Reads a value in the requested realization. Exact mode accepts "p/q" and
/// decimal strings, converting decimals exactly ("0.4" is 2/5).
inline Value parse_value(std::string_view text, Realization r = Realization::exact)
{
  while (!text.empty() && text.front() == ' ') {
    text.remove_prefix(1);
  }
  while (!text.empty() && text.back() == ' ') {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw parse_error("empty value");
  }
  if (r == Realization::exact || text.find('/') != std::string_view::npos) {
    rational q = detail::parse_rational(text);
    if (q < 0 || q > 1) {
      throw domain_error("value '" + std::string(text) + "' outside [0,1]");
    }
    return r == Realization::exact ? Value::exact(std::move(q)) : Value::floating(q.convert_to<double>());
  }
  double d = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw parse_error("cannot parse '" + std::string(text) + "' as a float");
  }
  return Value::floating(d);
}

/// "p/q" (or "p" when q = 1) for exact values; shortest round-trip decimal
/// for floats.
inline std::string render(const Value& v)
{
  if (v.is_exact()) {
    const rational q = v.as_rational();
    big_int num = boost::multiprecision::numerator(q);
    big_int den = boost::multiprecision::denominator(q);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v.as_double());
  return std::string(buf, ptr);
}

namespace literals {

/// "3/10"_q is the exact value 3/10.
inline Value operator""_q(const char* text, std::size_t len)
{
  return parse_value(std::string_view(text, len), Realization::exact);
}

} // namespace literals

} // namespace fuzzint

#endif
