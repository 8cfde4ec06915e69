#include "alphaspec/ratfunc.hpp"

#include <stdexcept>

namespace alphaspec {

namespace {
Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}
} // namespace

RatFunc::RatFunc(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = BivarPoly::constant(1);
        return;
    }
    Int c = int_gcd(num_.content(), den_.content());
    if (den_.leading_coeff_lex() < 0) c = -c;
    if (c != 1) {
        num_ = exact_div(num_, BivarPoly::constant(c));
        den_ = exact_div(den_, BivarPoly::constant(c));
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const BivarPoly& p) const { return RatFunc(num_ * p, den_); }

bool RatFunc::equals(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

Rational RatFunc::eval(const Rational& x0, const Rational& a0) const {
    const Rational d = den_.eval(x0, a0);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x0, a0) / d;
}

std::string RatFunc::to_string() const {
    if (den_ == BivarPoly::constant(1)) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace alphaspec
