#ifndef ALPHASPEC_JOINS_HPP
#define ALPHASPEC_JOINS_HPP

#include "alphaspec/charpoly.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/ratfunc.hpp"

#include <optional>
#include <string>

namespace alphaspec {

/// Gamma_M(x) = 1^T (xI - M)^{-1} 1 for M = A_alpha(G): a rational function in
/// x whose coefficients are polynomials in a. The denominator always divides
/// the characteristic polynomial.
struct Coronal {
    RatFunc value;
};

/// Exact coronal. Row sums of A_alpha(G) equal the vertex degrees, so a
/// regular graph short-circuits to n/(x - r); otherwise the adjugate-sum
/// identity 1^T adj(B) 1 = det(B + J) - det(B) keeps everything in polynomial
/// arithmetic (no symbolic inverse).
Coronal coronal(const Graph& g, int max_order = kDefaultExactOrderBound);

/// Characteristic polynomial of G1 v G2 assembled from the two factors'
/// charpolys and coronals (shift arguments, multiply, clear the coronal
/// denominators). Equals charpoly_exact(join(g1, g2)) exactly.
BivarPoly join_charpoly(const Graph& g1, const Graph& g2,
                        int max_order = kDefaultExactOrderBound);

enum class RegularJoinForm {
    Corrected, // f(x) = (x-a*n2-r1)(x-a*n1-r2) - (1-a)^2 n1 n2
    AsPrinted, // f(x) = (x-a*n2-r1)(x-a*n1-r2) - n1 n2 (fails for alpha != 0)
};

/// Regular-graph specialization: divides the two simple-root factors out of
/// the shifted charpolys and multiplies by the balancing factor f(x). The
/// corrected form carries the (1-a)^2 weight that the join factorization
/// forces on the n1*n2 term; AsPrinted is kept for the regression suite that
/// demonstrates the discrepancy. Throws std::domain_error when the inputs lack
/// the divisibility expected of regular-graph charpolys.
BivarPoly join_charpoly_regular(int n1, int r1, const BivarPoly& p1, int n2, int r2,
                                const BivarPoly& p2,
                                RegularJoinForm form = RegularJoinForm::Corrected);

enum class SpectralMode { Symbolic, Fixed };

struct CospectralCertificate {
    SpectralMode mode = SpectralMode::Symbolic;
    std::optional<Rational> alpha; // set in fixed mode
    Graph left;
    Graph right;
    BivarPoly shared_charpoly;      // symbolic mode
    UnivarPoly shared_charpoly_at;  // fixed mode
    std::string coronal_left;
    std::string coronal_right;
};

/// Thrown when a forge precondition fails; the message carries the differing
/// charpolys or coronals.
struct ForgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Builds the certificate for (g1 v h1, g2 v h2). Pass the same graph for g1
/// and g2 for the one-sided construction; both-sided inputs must be cospectral
/// with equal coronals in the stated mode, as must h1/h2. The joined pair is
/// checked non-isomorphic and the shared charpoly is recomputed on both sides.
/// max_order bounds the symbolic-mode exact work (joined orders up to 16 stay
/// comfortably fast); fixed mode has no such limit.
CospectralCertificate forge_cospectral_pair(const Graph& g1, const Graph& g2,
                                            const Graph& h1, const Graph& h2,
                                            SpectralMode mode,
                                            const std::optional<Rational>& alpha = {},
                                            int max_order = 16);

/// One-sided convenience (Corollary-style: common G, varying H).
CospectralCertificate forge_cospectral_pair(const Graph& g, const Graph& h1, const Graph& h2,
                                            SpectralMode mode,
                                            const std::optional<Rational>& alpha = {},
                                            int max_order = 16);

/// Coronal at a fixed alpha as a pair of univariate polynomials (num, den).
std::pair<UnivarPoly, UnivarPoly> coronal_at(const Graph& g, const Rational& alpha,
                                             int max_order = kDefaultExactOrderBound);

} // namespace alphaspec

#endif
