#ifndef ALPHASPEC_INVARIANTS_HPP
#define ALPHASPEC_INVARIANTS_HPP

#include "alphaspec/rational.hpp"
#include "alphaspec/univar_poly.hpp"

#include <optional>

namespace alphaspec {

/// Degree-moment data readable off an A_alpha characteristic polynomial.
/// The two degree sums are spectrum-determined only for alpha > 0; they stay
/// unset at alpha = 0 (where m comes from the x^{n-2} coefficient instead).
struct InvariantReport {
    int n = 0;
    long m = 0;
    std::optional<long> sum_sq_degrees;    // sum d_i^2
    std::optional<long> sum_pair_products; // sum_{i<j} d_i d_j
    std::optional<int> regular_r;
};

/// Extracts n, m and (for alpha > 0) the degree moments from a monic
/// charpoly. Throws std::invalid_argument when the extracted values are not
/// non-negative integers (the input is then not a graph charpoly).
InvariantReport invariants_from_charpoly(const UnivarPoly& p, const Rational& alpha);

/// r = 2m/n when that value is integral, is a root of p, and no root exceeds
/// it (certified by a Sturm count, so the certificate is sound even when some
/// interior eigenvalue happens to hit 2m/n). Requires alpha < 1.
std::optional<int> regularity_from_spectrum(const UnivarPoly& p, const Rational& alpha);

/// Number of distinct real roots of p strictly greater than x0 (Sturm chain).
int count_roots_greater(const UnivarPoly& p, const Rational& x0);

} // namespace alphaspec

#endif
