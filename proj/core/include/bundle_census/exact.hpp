#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bundle_census {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when an operation is called outside its mathematical domain
/// (negative Stirling indices, mismatched ambient dimensions, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(const BigInt& value); // NOLINT(google-explicit-constructor)
    ExactRational(long long value) : ExactRational(BigInt(value)) {} // NOLINT(google-explicit-constructor)
    ExactRational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const;
    BigInt denominator() const;
    bool is_integer() const { return denominator() == 1; }

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const;
    /// Accepts "p" or "p/q" with optional leading sign; the result is
    /// normalized. Throws std::invalid_argument on malformed text or a zero
    /// denominator.
    static ExactRational parse(std::string_view text);

    double to_double() const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }

private:
    using Rep = boost::multiprecision::cpp_rational;
    Rep value_{0};
};

/// Parses a base-10 integer with optional sign. Throws std::invalid_argument.
BigInt parse_big_int(std::string_view text);

/// Exact binomial coefficient C(n, k) for 0 <= k; zero when k > n >= 0.
BigInt binomial(long n, long k);

/// True when |value| <= 2^53 - 1, i.e. representable without loss as an
/// IEEE double / JSON number.
bool fits_in_safe_integer(const BigInt& value);

} // namespace bundle_census
