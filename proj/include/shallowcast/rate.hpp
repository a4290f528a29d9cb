#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shallowcast {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when text cannot be read as a rate.
class RateParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation would leave the non-negative domain.
class RateDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Exact non-negative rational bandwidth or stream rate.
 *
 * The value is always held in lowest terms with a positive denominator.
 * No operation rounds; subtraction below zero throws RateDomainError
 * instead of clamping.
 */
class Rate {
 public:
  Rate() = default;
  Rate(std::uint64_t numerator, std::uint64_t denominator = 1);  // NOLINT(google-explicit-constructor)
  explicit Rate(const Rational& value);

  static Rate zero() { return Rate(); }

  const Rational& value() const { return value_; }
  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const;

  Rate& operator+=(const Rate& other);
  Rate& operator-=(const Rate& other);

  friend Rate operator+(Rate lhs, const Rate& rhs) { return lhs += rhs; }
  friend Rate operator-(Rate lhs, const Rate& rhs) { return lhs -= rhs; }
  friend Rate operator*(const Rate& lhs, const Rate& rhs);
  friend Rate operator*(const Rate& lhs, std::uint64_t k);
  friend Rate operator*(std::uint64_t k, const Rate& rhs) { return rhs * k; }
  /// Division by zero throws RateDomainError.
  friend Rate operator/(const Rate& lhs, const Rate& rhs);
  friend Rate operator/(const Rate& lhs, std::uint64_t k);

  friend bool operator==(const Rate& lhs, const Rate& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rate& lhs, const Rate& rhs);

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const;
  /// Always "a/b", even for integers.
  std::string to_fraction_string() const;

 private:
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rate& rate);

/// Parses "10", "3/2" or a finite decimal such as "0.25" into an exact Rate.
Rate rate_from_string(std::string_view text);

/// A Rate or the distinguished unbounded value (for example a missing
/// downlink capacity, or a scale factor when every stream rate is zero).
class Bound {
 public:
  Bound() = default;  // unbounded
  Bound(Rate finite) : finite_(std::move(finite)) {}  // NOLINT(google-explicit-constructor)

  static Bound unbounded() { return Bound(); }

  bool is_unbounded() const { return !finite_.has_value(); }
  bool is_finite() const { return finite_.has_value(); }
  /// Throws std::logic_error when unbounded.
  const Rate& finite() const;

  /// True when `rate` does not exceed this bound.
  bool admits(const Rate& rate) const { return is_unbounded() || rate <= *finite_; }

  friend bool operator==(const Bound&, const Bound&) = default;

  std::string to_string() const { return is_unbounded() ? "unbounded" : finite_->to_string(); }

 private:
  std::optional<Rate> finite_;
};

std::ostream& operator<<(std::ostream& os, const Bound& bound);

}  // namespace shallowcast
