#pragma once

// Exact rational arithmetic over arbitrary-precision integers.  Every value
// is stored reduced with positive denominator, so equality is fieldwise.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cohsys {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(const Int& n) : num_(n) {}
    Rational(Int num, Int den);  // reduces; throws std::domain_error on den == 0

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;

    Rational& operator+=(const Rational& r);
    Rational& operator-=(const Rational& r);
    Rational& operator*=(const Rational& r);
    Rational& operator/=(const Rational& r);  // throws std::domain_error on r == 0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        // denominators are positive, cross-multiplication preserves order
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // canonical form: "num/den", with "/den" omitted when den == 1
    std::string str() const;

    // accepts optional whitespace around tokens, normalizes unreduced input,
    // rejects den == 0 and malformed text
    static Rational parse(std::string_view s);  // throws std::invalid_argument
    static std::optional<Rational> try_parse(std::string_view s);

    // display-only decimal approximation, never fed back into computation
    double approx() const;

private:
    Int num_{0};
    Int den_{1};

    void reduce();
};

}  // namespace cohsys
