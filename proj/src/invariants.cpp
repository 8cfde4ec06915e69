#include "alphaspec/invariants.hpp"

#include <stdexcept>

namespace alphaspec {

namespace {

long to_checked_long(const Rational& r, const char* what) {
    if (!is_integral(r) || r < 0)
        throw std::invalid_argument(std::string("not a graph charpoly: ") + what +
                                    " = " + rational_to_string(r));
    return rat_num(r).convert_to<long>();
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

UnivarPoly monic(const UnivarPoly& p) {
    if (p.is_zero() || p.leading() == 1) return p;
    return p * (Rational(1) / p.leading());
}

// n from the degree, m from the trace coefficient (or the x^{n-2} coefficient
// at alpha = 0, where the trace vanishes).
std::pair<int, long> order_and_edges(const UnivarPoly& q, const Rational& alpha) {
    const int n = q.degree();
    if (n < 1) throw std::invalid_argument("charpoly must have positive degree");
    const Rational a1 = q.coeff(n - 1);
    if (alpha == 0) {
        if (a1 != 0)
            throw std::invalid_argument("not a graph charpoly: nonzero trace at alpha=0");
        return {n, to_checked_long(-q.coeff(n - 2), "m")};
    }
    return {n, to_checked_long(-a1 / (2 * alpha), "m")};
}

} // namespace

int count_roots_greater(const UnivarPoly& p, const Rational& x0) {
    if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
    UnivarPoly q = p;
    const UnivarPoly g = poly_gcd(q, q.derivative());
    if (g.degree() > 0) q = q.divmod(g).first; // squarefree part
    const UnivarPoly linear({-x0, Rational(1)});
    while (!q.is_zero() && q.eval(x0) == 0) q = q.divmod(linear).first;
    if (q.degree() <= 0) return 0;

    // Sturm chain sign variations at x0 and at +infinity.
    std::vector<UnivarPoly> chain{q, q.derivative()};
    while (!chain.back().is_zero()) {
        auto [quot, rem] = chain[chain.size() - 2].divmod(chain.back());
        (void)quot;
        chain.push_back(-rem);
    }
    chain.pop_back();

    int v_at = 0, v_inf = 0, prev_at = 0, prev_inf = 0;
    for (const auto& f : chain) {
        const int s_at = sign_of(f.eval(x0));
        const int s_inf = sign_of(f.leading());
        if (s_at != 0) {
            if (prev_at != 0 && s_at != prev_at) ++v_at;
            prev_at = s_at;
        }
        if (s_inf != 0) {
            if (prev_inf != 0 && s_inf != prev_inf) ++v_inf;
            prev_inf = s_inf;
        }
    }
    return v_at - v_inf;
}

std::optional<int> regularity_from_spectrum(const UnivarPoly& p, const Rational& alpha) {
    if (alpha >= 1) throw std::domain_error("regularity test requires alpha < 1");
    const UnivarPoly q = monic(p);
    const auto [n, m] = order_and_edges(q, alpha);
    const Rational avg(2 * m, n);
    if (!is_integral(avg)) return std::nullopt;
    if (q.eval(avg) != 0) return std::nullopt;
    if (count_roots_greater(q, avg) != 0) return std::nullopt;
    return static_cast<int>(rat_num(avg).convert_to<long>());
}

InvariantReport invariants_from_charpoly(const UnivarPoly& p, const Rational& alpha) {
    require_alpha_range(alpha);
    const UnivarPoly q = monic(p);
    const auto [n, m] = order_and_edges(q, alpha);

    InvariantReport report;
    report.n = n;
    report.m = m;
    if (alpha != 0) {
        const Rational om = Rational(1) - alpha;
        const Rational pair = (q.coeff(n - 2) + om * om * Rational(m)) / (alpha * alpha);
        const long s2 = to_checked_long(pair, "sum of degree pair products");
        const Rational ssd = Rational(4 * m * m) - 2 * pair;
        report.sum_pair_products = s2;
        report.sum_sq_degrees = to_checked_long(ssd, "sum of squared degrees");
    }
    if (alpha < 1) report.regular_r = regularity_from_spectrum(q, alpha);
    return report;
}

} // namespace alphaspec
