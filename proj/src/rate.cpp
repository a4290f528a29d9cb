#include "shallowcast/rate.hpp"

#include <algorithm>
#include <cctype>

namespace shallowcast {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_digits(std::string_view s) {
  BigInt out = 0;
  for (char c : s) out = out * 10 + (c - '0');
  return out;
}

Rational checked(Rational value) {
  if (value < 0) throw RateDomainError("rate would become negative: " + value.str());
  return value;
}

}  // namespace

Rate::Rate(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw RateDomainError("rate with zero denominator");
  value_ = Rational(BigInt(numerator), BigInt(denominator));
}

Rate::Rate(const Rational& value) : value_(checked(value)) {}

BigInt Rate::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rate::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rate::is_integer() const { return denominator() == 1; }

Rate& Rate::operator+=(const Rate& other) {
  value_ += other.value_;
  return *this;
}

Rate& Rate::operator-=(const Rate& other) {
  if (other.value_ > value_) {
    throw RateDomainError("rate subtraction below zero: " + to_string() + " - " + other.to_string());
  }
  value_ -= other.value_;
  return *this;
}

Rate operator*(const Rate& lhs, const Rate& rhs) { return Rate(lhs.value_ * rhs.value_); }

Rate operator*(const Rate& lhs, std::uint64_t k) { return Rate(lhs.value_ * BigInt(k)); }

Rate operator/(const Rate& lhs, const Rate& rhs) {
  if (rhs.is_zero()) throw RateDomainError("rate division by zero");
  return Rate(lhs.value_ / rhs.value_);
}

Rate operator/(const Rate& lhs, std::uint64_t k) {
  if (k == 0) throw RateDomainError("rate division by zero");
  return Rate(lhs.value_ / BigInt(k));
}

std::strong_ordering operator<=>(const Rate& lhs, const Rate& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rate::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rate::to_fraction_string() const { return numerator().str() + "/" + denominator().str(); }

std::ostream& operator<<(std::ostream& os, const Rate& rate) { return os << rate.to_string(); }

Rate rate_from_string(std::string_view text) {
  const std::string quoted = "'" + std::string(text) + "'";
  if (text.empty()) throw RateParseError("empty rate string");
  if (text.front() == '-') throw RateParseError("negative rate " + quoted);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw RateParseError("malformed fraction " + quoted);
    BigInt d = parse_digits(den);
    if (d == 0) throw RateParseError("zero denominator in " + quoted);
    return Rate(Rational(parse_digits(num), d));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    // "5." and ".5" are rejected; both sides need at least one digit.
    if (!all_digits(whole) || !all_digits(frac)) throw RateParseError("malformed decimal " + quoted);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return Rate(Rational(parse_digits(whole) * scale + parse_digits(frac), scale));
  }

  if (!all_digits(text)) throw RateParseError("malformed rate " + quoted);
  return Rate(Rational(parse_digits(text)));
}

const Rate& Bound::finite() const {
  if (!finite_) throw std::logic_error("unbounded value has no finite rate");
  return *finite_;
}

std::ostream& operator<<(std::ostream& os, const Bound& bound) { return os << bound.to_string(); }

}  // namespace shallowcast
