#ifndef ALPHASPEC_BIVAR_POLY_HPP
#define ALPHASPEC_BIVAR_POLY_HPP

#include "alphaspec/rational.hpp"
#include "alphaspec/univar_poly.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace alphaspec {

/// Integer-coefficient polynomial in x (spectral variable) and a (the convexity
/// parameter alpha). Dense storage over the bounding box of degrees; trimmed so
/// equal polynomials compare equal coefficient-wise. Characteristic polynomials
/// of n-vertex graphs stay within degree n in each variable, so the dense grid
/// is small.
class BivarPoly {
public:
    BivarPoly() = default; // zero polynomial

    static BivarPoly constant(Int c);
    static BivarPoly monomial(int deg_x, int deg_a, Int c);
    static BivarPoly var_x() { return monomial(1, 0, 1); }
    static BivarPoly var_a() { return monomial(0, 1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int deg_x() const { return dx_; }
    int deg_a() const { return da_; }

    const Int& coeff(int i, int j) const; // 0 outside the stored box

    BivarPoly operator-() const;
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator*(const Int& k) const;
    bool operator==(const BivarPoly& o) const = default;

    /// Substitute x -> x + shift, where shift has x-degree 0 (a polynomial in a
    /// alone). Used for the join formula's P(x - alpha*n) arguments.
    BivarPoly shift_x(const BivarPoly& shift) const;

    Rational eval(const Rational& x0, const Rational& a0) const;
    UnivarPoly eval_alpha(const Rational& a0) const; // x-polynomial at fixed a

    /// Greatest common divisor of all coefficients (0 for the zero polynomial).
    Int content() const;

    /// Leading coefficient in lexicographic (x, then a) term order.
    Int leading_coeff_lex() const;

    /// Terms sorted by descending x-degree then a-degree, alpha rendered as 'a':
    /// e.g. "x^2 - 2*a*x + 2*a - 1".
    std::string to_string() const;

    /// [deg_x, deg_a, coefficient-as-string] triples in the same term order.
    std::vector<std::tuple<int, int, std::string>> terms() const;

    /// Canonical length-prefixed coefficient bytes; equal byte strings iff
    /// equal polynomials.
    std::string encode() const;

private:
    int dx_ = -1;
    int da_ = -1;
    std::vector<Int> coeffs_; // row-major: index = i*(da_+1) + j

    Int& at(int i, int j) { return coeffs_[static_cast<size_t>(i) * (da_ + 1) + j]; }
    const Int& at(int i, int j) const {
        return coeffs_[static_cast<size_t>(i) * (da_ + 1) + j];
    }
    void trim();

    friend BivarPoly exact_div(const BivarPoly& num, const BivarPoly& den);
    friend class BivarBuilder;
};

/// Exact quotient num/den in the integer bivariate ring. Throws
/// std::domain_error when den is zero or the division is not exact.
BivarPoly exact_div(const BivarPoly& num, const BivarPoly& den);

/// Mutable coefficient grid for assembling polynomials term by term.
class BivarBuilder {
public:
    BivarBuilder(int max_deg_x, int max_deg_a);
    void add(int deg_x, int deg_a, const Int& c);
    BivarPoly build();

private:
    int dx_, da_;
    std::vector<Int> coeffs_;
};

} // namespace alphaspec

#endif
