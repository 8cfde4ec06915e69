#include "alphaspec/charpoly.hpp"

#include <stdexcept>

namespace alphaspec {

AlphaMatrix a_alpha_matrix(const Graph& g, const Rational& alpha) {
    require_alpha_range(alpha);
    const int n = g.order();
    AlphaMatrix m{n, alpha, std::vector<std::vector<Rational>>(
                                static_cast<size_t>(n),
                                std::vector<Rational>(static_cast<size_t>(n), Rational(0)))};
    const Rational off = Rational(1) - alpha;
    for (int i = 0; i < n; ++i) {
        m.entries[static_cast<size_t>(i)][static_cast<size_t>(i)] = alpha * g.degree(i);
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j))
                m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = off;
    }
    return m;
}

std::vector<std::vector<BivarPoly>> a_alpha_symbolic(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<BivarPoly>> m(static_cast<size_t>(n),
                                          std::vector<BivarPoly>(static_cast<size_t>(n)));
    const BivarPoly one_minus_a = BivarPoly::constant(1) - BivarPoly::var_a();
    for (int i = 0; i < n; ++i) {
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            BivarPoly::monomial(0, 1, g.degree(i));
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = one_minus_a;
    }
    return m;
}

std::vector<std::vector<BivarPoly>> char_matrix(const Graph& g) {
    auto m = a_alpha_symbolic(g);
    const int n = g.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = -m[i][j];
        m[i][i] = m[i][i] + BivarPoly::var_x();
    }
    return m;
}

namespace {

// Flat polynomials in a alone (coefficient k multiplies a^k, fixed length
// n+1): the Faddeev-LeVerrier matrices never exceed a-degree n, so fixed-size
// buffers avoid per-entry reallocation in the O(n^4) inner loops.
using APoly = std::vector<Int>;

void apoly_mul_acc(const APoly& a, const APoly& b, APoly& acc) {
    const size_t da = a.size(), db = b.size();
    for (size_t i = 0; i < da; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < db; ++j) {
            if (b[j] == 0) continue;
            acc[i + j] += a[i] * b[j];
        }
    }
}

} // namespace

BivarPoly charpoly_exact(const Graph& g, int max_order) {
    const int n = g.order();
    if (n > max_order)
        throw std::invalid_argument("charpoly_exact: order " + std::to_string(n) +
                                    " exceeds exact-arithmetic bound " + std::to_string(max_order));

    // entries of A_alpha as degree-<=1 polynomials in a
    const size_t nn = static_cast<size_t>(n);
    std::vector<APoly> a(nn * nn, APoly{Int(0), Int(0)});
    for (int i = 0; i < n; ++i) {
        a[static_cast<size_t>(i) * nn + i][1] = g.degree(i);
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) {
                a[static_cast<size_t>(i) * nn + j][0] = 1;
                a[static_cast<size_t>(i) * nn + j][1] = -1;
            }
    }

    // c[n] = 1; M_k = A*M_{k-1} + c[n-k+1] I; c[n-k] = -tr(A*M_k)/k
    // a-degrees stay <= n; one slot of headroom guards the mul-accumulate.
    const size_t width = nn + 2;
    std::vector<APoly> c(nn + 1, APoly(width, Int(0)));
    c[nn][0] = 1;
    std::vector<APoly> m(nn * nn, APoly(width, Int(0)));
    std::vector<APoly> am(nn * nn, APoly(width, Int(0)));
    for (int k = 1; k <= n; ++k) {
        for (size_t i = 0; i < nn; ++i)
            for (size_t t = 0; t < width; ++t)
                m[i * nn + i][t] += c[nn - static_cast<size_t>(k) + 1][t];
        for (size_t i = 0; i < nn; ++i)
            for (size_t j = 0; j < nn; ++j) {
                APoly& acc = am[i * nn + j];
                std::fill(acc.begin(), acc.end(), Int(0));
                for (size_t t = 0; t < nn; ++t) apoly_mul_acc(a[i * nn + t], m[t * nn + j], acc);
            }
        APoly trace(width, Int(0));
        for (size_t i = 0; i < nn; ++i)
            for (size_t t = 0; t < width; ++t) trace[t] += am[i * nn + i][t];
        for (size_t t = 0; t < width; ++t) {
            if (trace[t] % k != 0) throw std::logic_error("Faddeev-LeVerrier divisibility violated");
            c[nn - static_cast<size_t>(k)][t] = -(trace[t] / k);
        }
        std::swap(m, am);
    }

    BivarBuilder builder(n, n);
    for (size_t k = 0; k <= nn; ++k)
        for (size_t t = 0; t < width; ++t)
            if (c[k][t] != 0) builder.add(static_cast<int>(k), static_cast<int>(t), c[k][t]);
    return builder.build();
}

BivarPoly bivar_det(std::vector<std::vector<BivarPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return BivarPoly::constant(1);
    int sign = 1;
    BivarPoly prev_pivot = BivarPoly::constant(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return {};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev_pivot);
            m[i][k] = BivarPoly();
        }
        prev_pivot = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<Int> int_charpoly(const std::vector<std::vector<Int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
    c[static_cast<size_t>(n)] = 1;
    std::vector<std::vector<Int>> m(static_cast<size_t>(n),
                                    std::vector<Int>(static_cast<size_t>(n), Int(0)));
    std::vector<std::vector<Int>> am = m;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) m[i][i] += c[static_cast<size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int acc{0};
                for (int t = 0; t < n; ++t)
                    if (a[i][t] != 0 && m[t][j] != 0) acc += a[i][t] * m[t][j];
                am[i][j] = std::move(acc);
            }
        Int trace{0};
        for (int i = 0; i < n; ++i) trace += am[i][i];
        if (trace % k != 0) throw std::logic_error("Faddeev-LeVerrier divisibility violated");
        c[static_cast<size_t>(n - k)] = -trace / k;
        std::swap(m, am);
    }
    return c;
}

UnivarPoly charpoly_at(const Graph& g, const Rational& alpha) {
    require_alpha_range(alpha);
    const int n = g.order();
    const Int p = rat_num(alpha);
    const Int q = rat_den(alpha);

    // q*A_alpha is an integer matrix; det(xI - A) = q^-n * C(q x) where C is
    // the integer charpoly of the scaled matrix.
    std::vector<std::vector<Int>> b(static_cast<size_t>(n),
                                    std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) {
        b[i][i] = p * g.degree(i);
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) b[i][j] = q - p;
    }
    const std::vector<Int> c = int_charpoly(b);

    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    Int qpow{1}; // q^(n-k) denominator for the x^k coefficient
    for (int k = n; k >= 0; --k) {
        coeffs[static_cast<size_t>(k)] = Rational(c[static_cast<size_t>(k)], qpow);
        qpow *= q;
    }
    return UnivarPoly(std::move(coeffs));
}

} // namespace alphaspec
