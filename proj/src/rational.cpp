#include "lagsub/rational.hpp"

#include <ostream>

#include "lagsub/error.hpp"

namespace lagsub {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const std::string& s) {
    if (v_.set_str(s, 10) != 0) throw ParseError("Rational: cannot parse '" + s + "'");
    if (sgn(v_.get_den()) == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
    v_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e < 0 ? base.inverse() : base;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (k > 0) {
        if (k & 1UL) acc *= b;
        b *= b;
        k >>= 1UL;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

} // namespace lagsub
