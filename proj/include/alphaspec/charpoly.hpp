#ifndef ALPHASPEC_CHARPOLY_HPP
#define ALPHASPEC_CHARPOLY_HPP

#include "alphaspec/bivar_poly.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/univar_poly.hpp"

#include <vector>

namespace alphaspec {

/// A_alpha(G) = alpha*D + (1-alpha)*A at a fixed rational alpha, exact entries.
struct AlphaMatrix {
    int n;
    Rational alpha;
    std::vector<std::vector<Rational>> entries;
};

AlphaMatrix a_alpha_matrix(const Graph& g, const Rational& alpha);

/// Symbolic form: entries are polynomials in a (degree <= 1).
std::vector<std::vector<BivarPoly>> a_alpha_symbolic(const Graph& g);

/// Practical bound for exact bivariate work; determinant coefficients grow
/// combinatorially past this.
constexpr int kDefaultExactOrderBound = 12;

/// det(xI - A_alpha(G)) over the integer bivariate ring, monic of x-degree n.
/// Faddeev-LeVerrier over matrices with entries in Z[a]; every division by the
/// step index is exact and asserted. Cross-validated against bivar_det in the
/// test suite.
BivarPoly charpoly_exact(const Graph& g, int max_order = kDefaultExactOrderBound);

/// Fraction-free Bareiss determinant of a square matrix over the bivariate
/// ring. Independent route used by the coronal and as the charpoly oracle.
BivarPoly bivar_det(std::vector<std::vector<BivarPoly>> m);

/// The matrix xI - A_alpha(G) with bivariate entries.
std::vector<std::vector<BivarPoly>> char_matrix(const Graph& g);

/// Characteristic polynomial at a fixed rational alpha, computed directly over
/// a scaled integer matrix (no bivariate detour); monic with rational
/// coefficients. Agrees with charpoly_exact(g).eval_alpha(alpha).
UnivarPoly charpoly_at(const Graph& g, const Rational& alpha);

/// Integer characteristic polynomial of an integer matrix (Faddeev-LeVerrier;
/// index-divisions are exact). coeffs[k] multiplies x^k, coeffs[n] == 1.
std::vector<Int> int_charpoly(const std::vector<std::vector<Int>>& m);

} // namespace alphaspec

#endif
