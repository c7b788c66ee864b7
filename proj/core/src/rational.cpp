#include "cohsys/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace cohsys {

using boost::multiprecision::gcd;

void Rational::reduce() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& r) {
    num_ = num_ * r.den_ + r.num_ * den_;
    den_ *= r.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& r) {
    num_ = num_ * r.den_ - r.num_ * den_;
    den_ *= r.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& r) {
    num_ *= r.num_;
    den_ *= r.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= r.den_;
    den_ *= r.num_;
    reduce();
    return *this;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

// [+-]?digits, at least one digit
bool take_integer(std::string_view& s, Int& out) {
    skip_ws(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) return false;
    Int v = 0;
    while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
        v = v * 10 + (s.front() - '0');
        s.remove_prefix(1);
    }
    out = neg ? Int(-v) : v;
    return true;
}

}  // namespace

std::optional<Rational> Rational::try_parse(std::string_view s) {
    Int num, den = 1;
    if (!take_integer(s, num)) return std::nullopt;
    skip_ws(s);
    if (!s.empty() && s.front() == '/') {
        s.remove_prefix(1);
        if (!take_integer(s, den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    skip_ws(s);
    if (!s.empty()) return std::nullopt;
    return Rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view s) {
    auto r = try_parse(s);
    if (!r) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    return *r;
}

double Rational::approx() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

}  // namespace cohsys
