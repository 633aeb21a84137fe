#include "norbit/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "norbit/error.hpp"

namespace norbit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Bound: return "bound";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Recipe: return "recipe";
    case ErrorKind::Oracle: return "oracle";
    case ErrorKind::Overflow: return "overflow";
  }
  return "unknown";
}

namespace {

__extension__ typedef __int128 Wide;

Rational make_reduced(Wide num, Wide den) {
  if (den == 0) throw Error(ErrorKind::Usage, "rational with zero denominator");
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
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw Error(ErrorKind::Overflow, "rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::Usage, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) throw Error(ErrorKind::Validation, "rational " + to_string() + " is not an integer");
  return num_;
}

Rational Rational::operator-() const { return make_reduced(-Wide{num_}, Wide{den_}); }

Rational& Rational::operator+=(const Rational& rhs) {
  return *this = make_reduced(Wide{num_} * rhs.den_ + Wide{rhs.num_} * den_, Wide{den_} * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
  return *this = make_reduced(Wide{num_} * rhs.den_ - Wide{rhs.num_} * den_, Wide{den_} * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
  return *this = make_reduced(Wide{num_} * rhs.num_, Wide{den_} * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorKind::Usage, "division by zero rational");
  return *this = make_reduced(Wide{num_} * rhs.den_, Wide{den_} * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  return Wide{lhs.num_} * rhs.den_ <=> Wide{rhs.num_} * lhs.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorKind::Usage, "cannot parse rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::int64_t floor(const Rational& value) {
  std::int64_t q = value.num() / value.den();
  if (value.num() % value.den() != 0 && value.num() < 0) --q;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace norbit
