#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bsurf {

// Exact rational with a positive denominator, always in lowest terms.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  // Accepts integers, plain decimals ("-3.25") and fractions ("p/q").
  static Rational parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational midpoint(const Rational& other) const;

  bool operator==(const Rational& other) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  // Terminating decimal when the denominator allows it, otherwise "p/q".
  std::string to_string() const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace bsurf
