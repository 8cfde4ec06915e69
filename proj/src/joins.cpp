#include "alphaspec/joins.hpp"

#include "alphaspec/canonical.hpp"

#include <stdexcept>

namespace alphaspec {

namespace {

BivarPoly ones_matrix_det_shift(const Graph& g) {
    // det(B + J) with B = xI - A_alpha(G)
    auto m = char_matrix(g);
    const BivarPoly one = BivarPoly::constant(1);
    for (auto& row : m)
        for (auto& e : row) e = e + one;
    return bivar_det(std::move(m));
}

BivarPoly linear_in_x(const Int& shift_a_coeff, const Int& constant) {
    // x - shift_a_coeff*a - constant
    return BivarPoly::var_x() - BivarPoly::monomial(0, 1, shift_a_coeff) -
           BivarPoly::constant(constant);
}

} // namespace

Coronal coronal(const Graph& g, int max_order) {
    const int n = g.order();
    if (n > max_order)
        throw std::invalid_argument("coronal: order exceeds exact-arithmetic bound");
    const int r = regular_degree(g);
    if (r >= 0) {
        // Row sums are constantly r, so Gamma(x) = n/(x - r).
        return {RatFunc(BivarPoly::constant(n),
                        BivarPoly::var_x() - BivarPoly::constant(r))};
    }
    BivarPoly den = bivar_det(char_matrix(g));
    BivarPoly num = ones_matrix_det_shift(g) - den;
    return {RatFunc(std::move(num), std::move(den))};
}

std::pair<UnivarPoly, UnivarPoly> coronal_at(const Graph& g, const Rational& alpha,
                                             int max_order) {
    const Coronal c = coronal(g, max_order);
    return {c.value.num().eval_alpha(alpha), c.value.den().eval_alpha(alpha)};
}

BivarPoly join_charpoly(const Graph& g1, const Graph& g2, int max_order) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    if (n1 + n2 > max_order)
        throw std::invalid_argument("join_charpoly: joined order exceeds exact bound");

    const BivarPoly shift1 = -BivarPoly::monomial(0, 1, n2); // x -> x - a*n2
    const BivarPoly shift2 = -BivarPoly::monomial(0, 1, n1); // x -> x - a*n1

    const BivarPoly p1s = charpoly_exact(g1, max_order).shift_x(shift1);
    const BivarPoly p2s = charpoly_exact(g2, max_order).shift_x(shift2);

    const Coronal c1 = coronal(g1, max_order);
    const Coronal c2 = coronal(g2, max_order);
    const BivarPoly num1 = c1.value.num().shift_x(shift1);
    const BivarPoly den1 = c1.value.den().shift_x(shift1);
    const BivarPoly num2 = c2.value.num().shift_x(shift2);
    const BivarPoly den2 = c2.value.den().shift_x(shift2);

    // P1s*P2s*(1 - (1-a)^2 Gamma1s*Gamma2s) with the coronal denominators
    // cleared through exact division (they divide the shifted charpolys).
    const BivarPoly q1 = exact_div(p1s, den1);
    const BivarPoly q2 = exact_div(p2s, den2);
    const BivarPoly one_minus_a = BivarPoly::constant(1) - BivarPoly::var_a();
    return p1s * p2s - one_minus_a * one_minus_a * q1 * q2 * num1 * num2;
}

BivarPoly join_charpoly_regular(int n1, int r1, const BivarPoly& p1, int n2, int r2,
                                const BivarPoly& p2, RegularJoinForm form) {
    const BivarPoly lin1 = linear_in_x(Int(n2), Int(r1)); // x - a*n2 - r1
    const BivarPoly lin2 = linear_in_x(Int(n1), Int(r2)); // x - a*n1 - r2

    const BivarPoly p1s = p1.shift_x(-BivarPoly::monomial(0, 1, n2));
    const BivarPoly p2s = p2.shift_x(-BivarPoly::monomial(0, 1, n1));

    BivarPoly q1, q2;
    try {
        q1 = exact_div(p1s, lin1);
        q2 = exact_div(p2s, lin2);
    } catch (const std::domain_error&) {
        throw std::domain_error(
            "join_charpoly_regular: inputs fail the divisibility expected of "
            "regular-graph charpolys");
    }

    BivarPoly cross = BivarPoly::constant(Int(n1) * Int(n2));
    if (form == RegularJoinForm::Corrected) {
        const BivarPoly one_minus_a = BivarPoly::constant(1) - BivarPoly::var_a();
        cross = one_minus_a * one_minus_a * cross;
    }
    const BivarPoly f = lin1 * lin2 - cross;
    return q1 * q2 * f;
}

namespace {

std::string coronal_text(const Graph& g, SpectralMode mode,
                         const std::optional<Rational>& alpha) {
    const Coronal c = coronal(g);
    if (mode == SpectralMode::Symbolic) return c.value.to_string();
    const UnivarPoly num = c.value.num().eval_alpha(*alpha);
    const UnivarPoly den = c.value.den().eval_alpha(*alpha);
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

} // namespace

CospectralCertificate forge_cospectral_pair(const Graph& g1, const Graph& g2,
                                            const Graph& h1, const Graph& h2,
                                            SpectralMode mode,
                                            const std::optional<Rational>& alpha,
                                            int max_order) {
    if (mode == SpectralMode::Fixed) {
        if (!alpha) throw std::invalid_argument("fixed mode needs an alpha");
        require_alpha_range(*alpha);
    }

    auto check_pair = [&](const Graph& a, const Graph& b, const char* what) {
        if (a == b) return; // literally the same factor on both sides
        if (mode == SpectralMode::Symbolic) {
            const BivarPoly pa = charpoly_exact(a, max_order);
            const BivarPoly pb = charpoly_exact(b, max_order);
            if (pa != pb)
                throw ForgeError(std::string(what) + " are not A_alpha-cospectral: " +
                                 pa.to_string() + " vs " + pb.to_string());
            const Coronal ca = coronal(a, max_order);
            const Coronal cb = coronal(b, max_order);
            if (!ca.value.equals(cb.value))
                throw ForgeError(std::string(what) + " have differing coronals: " +
                                 ca.value.to_string() + " vs " + cb.value.to_string());
        } else {
            const UnivarPoly pa = charpoly_at(a, *alpha);
            const UnivarPoly pb = charpoly_at(b, *alpha);
            if (pa != pb)
                throw ForgeError(std::string(what) + " are not cospectral at alpha=" +
                                 rational_to_string(*alpha) + ": " + pa.to_string() +
                                 " vs " + pb.to_string());
            auto [na, da] = coronal_at(a, *alpha);
            auto [nb, db] = coronal_at(b, *alpha);
            if (!(na * db == nb * da))
                throw ForgeError(std::string(what) + " have differing coronals at alpha=" +
                                 rational_to_string(*alpha));
        }
    };

    check_pair(g1, g2, "left factors");
    check_pair(h1, h2, "right factors");

    const Graph left = join(g1, h1);
    const Graph right = join(g2, h2);
    if (canonical_form(left) == canonical_form(right))
        throw ForgeError("joined graphs are isomorphic; certificate rejected");

    CospectralCertificate cert{mode, alpha, left, right, {}, {}, "", ""};
    if (mode == SpectralMode::Symbolic) {
        cert.shared_charpoly = join_charpoly(g1, h1, max_order);
        const BivarPoly other = join_charpoly(g2, h2, max_order);
        if (cert.shared_charpoly != other)
            throw ForgeError("join charpolys disagree; preconditions were insufficient");
    } else {
        cert.shared_charpoly_at = charpoly_at(left, *alpha);
        const UnivarPoly other = charpoly_at(right, *alpha);
        if (cert.shared_charpoly_at != other)
            throw ForgeError("join charpolys disagree at alpha=" + rational_to_string(*alpha));
    }
    cert.coronal_left = coronal_text(h1, mode, alpha);
    cert.coronal_right = coronal_text(h2, mode, alpha);
    return cert;
}

CospectralCertificate forge_cospectral_pair(const Graph& g, const Graph& h1, const Graph& h2,
                                            SpectralMode mode,
                                            const std::optional<Rational>& alpha,
                                            int max_order) {
    return forge_cospectral_pair(g, g, h1, h2, mode, alpha, max_order);
}

} // namespace alphaspec
