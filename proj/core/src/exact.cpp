#include "bundle_census/exact.hpp"

#include <cctype>

namespace bundle_census {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

ExactRational::ExactRational(const BigInt& value) : value_(value) {}

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("ExactRational: zero denominator");
    value_ = denominator < 0 ? Rep(-numerator, -denominator) : Rep(numerator, denominator);
}

BigInt ExactRational::numerator() const { return boost::multiprecision::numerator(value_); }

BigInt ExactRational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string ExactRational::to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_big_int(text));
    const BigInt num = parse_big_int(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    const BigInt den = parse_big_int(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return ExactRational(num, den);
}

double ExactRational::to_double() const { return value_.convert_to<double>(); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.value_ == 0) throw DomainError("ExactRational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigInt parse_big_int(std::string_view text) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    BigInt value{std::string(digits)};
    return negative ? BigInt(-value) : value;
}

BigInt binomial(long n, long k) {
    if (k < 0) throw DomainError("binomial: negative k");
    if (n >= 0 && k > n) return 0;
    // Falling-factorial product; valid for negative n as well.
    BigInt result = 1;
    for (long i = 0; i < k; ++i) {
        result *= BigInt(n - i);
        result /= BigInt(i + 1);
    }
    return result;
}

bool fits_in_safe_integer(const BigInt& value) {
    static const BigInt limit = (BigInt(1) << 53) - 1;
    return abs(value) <= limit;
}

} // namespace bundle_census
