#include "bsurf/rational.hpp"

#include "bsurf/error.hpp"

#include <charconv>
#include <numeric>

namespace bsurf {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(value);
}

Rational make(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(text) + "'");
  }
  return value;
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("zero denominator");
  }
  std::int64_t g = std::gcd(numerator, denominator);
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string digits(body.substr(0, dot));
  std::int64_t den = 1;
  if (dot != std::string_view::npos) {
    std::string_view frac = body.substr(dot + 1);
    if (frac.size() > 17) {
      throw Error(ErrorCode::ParseError, "too many decimal places in '" + std::string(text) + "'");
    }
    digits += frac;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  }
  if (digits.empty()) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::ParseError, "bad number '" + std::string(text) + "'");
    }
  }
  std::int64_t num = parse_int(digits);
  return Rational(negative ? -num : num, den);
}

Rational Rational::operator+(const Rational& other) const {
  return make(static_cast<Wide>(num_) * other.den_ + static_cast<Wide>(other.num_) * den_,
              static_cast<Wide>(den_) * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
  return make(static_cast<Wide>(num_) * other.den_ - static_cast<Wide>(other.num_) * den_,
              static_cast<Wide>(den_) * other.den_);
}

Rational Rational::operator*(const Rational& other) const {
  return make(static_cast<Wide>(num_) * other.num_, static_cast<Wide>(den_) * other.den_);
}

Rational Rational::midpoint(const Rational& other) const {
  return make(static_cast<Wide>(num_) * other.den_ + static_cast<Wide>(other.num_) * den_,
              static_cast<Wide>(den_) * other.den_ * 2);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  Wide lhs = static_cast<Wide>(num_) * other.den_;
  Wide rhs = static_cast<Wide>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  int places = std::max(twos, fives);
  Wide scaled = num_;
  Wide scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  scaled = scaled * (scale / den_);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  } while (scaled != 0);
  if (places > 0) {
    while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
    digits.insert(digits.end() - places, '.');
  }
  return (negative ? "-" : "") + digits;
}

} // namespace bsurf
