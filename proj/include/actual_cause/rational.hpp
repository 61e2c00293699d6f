#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace actual_cause {

/// Exact rational number, always normalized (lowest terms, positive
/// denominator). Arithmetic throws ArithmeticError on int64 overflow.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of literals
  Rational(std::int64_t num, std::int64_t den);

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Canonical text: "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;

  /// Accepts "p", "-p", "p/q" and finite decimals such as "0.5" or "-1.25".
  static std::optional<Rational> parse(std::string_view text);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using Value = Rational;

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace actual_cause
