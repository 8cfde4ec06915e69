#ifndef ALPHASPEC_UNIVAR_POLY_HPP
#define ALPHASPEC_UNIVAR_POLY_HPP

#include "alphaspec/rational.hpp"

#include <string>
#include <vector>

namespace alphaspec {

/// Polynomial in x with exact rational coefficients; coeffs_[k] multiplies x^k,
/// trimmed so the top coefficient is nonzero.
class UnivarPoly {
public:
    UnivarPoly() = default; // zero
    explicit UnivarPoly(std::vector<Rational> coeffs);

    static UnivarPoly constant(Rational c);
    static UnivarPoly var_x();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const; // 0 beyond the degree
    const Rational& leading() const { return coeffs_.back(); }

    UnivarPoly operator-() const;
    UnivarPoly operator+(const UnivarPoly& o) const;
    UnivarPoly operator-(const UnivarPoly& o) const;
    UnivarPoly operator*(const UnivarPoly& o) const;
    UnivarPoly operator*(const Rational& k) const;
    bool operator==(const UnivarPoly& o) const = default;

    Rational eval(const Rational& x0) const;
    UnivarPoly derivative() const;

    /// Quotient and remainder over the rationals.
    std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& den) const;

    /// Exact multiplicity of x0 as a root (0 when not a root).
    int root_multiplicity(const Rational& x0) const;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

/// Monic gcd over the rationals (Euclid); gcd(0,0) = 0.
UnivarPoly poly_gcd(UnivarPoly a, UnivarPoly b);

} // namespace alphaspec

#endif
