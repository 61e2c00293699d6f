#include "actual_cause/rational.hpp"

#include <charconv>
#include <limits>

#include "actual_cause/errors.hpp"

namespace actual_cause {
namespace {

using Wide = __int128;

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_normalized(Wide num, Wide den) {
  if (den == 0) {
    throw ArithmeticError("zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw ArithmeticError("rational overflow");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw ArithmeticError("zero denominator");
  }
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = gcd_wide(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n < std::numeric_limits<std::int64_t>::min() || n > std::numeric_limits<std::int64_t>::max() ||
      d > std::numeric_limits<std::int64_t>::max()) {
    throw ArithmeticError("rational overflow");
  }
  num_ = static_cast<std::int64_t>(n);
  den_ = static_cast<std::int64_t>(d);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_normalized(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_normalized(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_normalized(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational Rational::operator-() const { return make_normalized(-Wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto parse_digits = [](std::string_view digits) -> std::optional<std::int64_t> {
    if (digits.empty()) return std::nullopt;
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return out;
  };
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_digits(text.substr(0, slash));
      auto den = parse_digits(text.substr(slash + 1));
      if (!num || !den || *den == 0) return std::nullopt;
      Rational r(*num, *den);
      return negative ? -r : r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      auto whole = parse_digits(text.substr(0, dot));
      std::string_view frac_text = text.substr(dot + 1);
      auto frac = parse_digits(frac_text);
      if (!whole || !frac || frac_text.size() > 18) return std::nullopt;
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac_text.size(); ++i) scale *= 10;
      Rational r = Rational(*whole) + Rational(*frac, scale);
      return negative ? -r : r;
    }
    auto whole = parse_digits(text);
    if (!whole) return std::nullopt;
    return negative ? -Rational(*whole) : Rational(*whole);
  } catch (const ArithmeticError&) {
    return std::nullopt;
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace actual_cause
