#ifndef ALPHASPEC_RATFUNC_HPP
#define ALPHASPEC_RATFUNC_HPP

#include "alphaspec/bivar_poly.hpp"

#include <string>

namespace alphaspec {

/// Quotient of two integer bivariate polynomials. Kept content-normalized with
/// a positively signed denominator; common polynomial factors are not forced
/// out (the denominators that arise here are known charpoly factors, so callers
/// compare via cross multiplication instead of full gcd).
class RatFunc {
public:
    RatFunc() : num_(), den_(BivarPoly::constant(1)) {} // zero
    RatFunc(BivarPoly num, BivarPoly den);

    static RatFunc from_poly(BivarPoly p) { return RatFunc(std::move(p), BivarPoly::constant(1)); }
    static RatFunc one() { return from_poly(BivarPoly::constant(1)); }

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const BivarPoly& p) const;

    /// Field equality: num*o.den == o.num*den.
    bool equals(const RatFunc& o) const;

    Rational eval(const Rational& x0, const Rational& a0) const; // throws on zero den

    std::string to_string() const; // "num / den", or just "num" when den == 1

private:
    BivarPoly num_;
    BivarPoly den_;
    void normalize();
};

} // namespace alphaspec

#endif
