#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace nilform {

/// Exact rational scalar. Always normalized: gcd(num, den) = 1 and den > 0.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& integer) : v_(integer) {}
    explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or q = 0.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    /// "p" when the denominator is 1, otherwise "p/q".
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_{0};
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace nilform
