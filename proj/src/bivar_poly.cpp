#include "alphaspec/bivar_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace alphaspec {

namespace {
const Int kZero{0};

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

BivarPoly BivarPoly::constant(Int c) { return monomial(0, 0, std::move(c)); }

BivarPoly BivarPoly::monomial(int deg_x, int deg_a, Int c) {
    if (c == 0) return {};
    BivarPoly p;
    p.dx_ = deg_x;
    p.da_ = deg_a;
    p.coeffs_.assign(static_cast<size_t>(deg_x + 1) * (deg_a + 1), Int(0));
    p.at(deg_x, deg_a) = std::move(c);
    return p;
}

const Int& BivarPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > dx_ || j > da_) return kZero;
    return at(i, j);
}

void BivarPoly::trim() {
    if (coeffs_.empty()) {
        dx_ = da_ = -1;
        return;
    }
    int new_dx = -1, new_da = -1;
    for (int i = 0; i <= dx_; ++i)
        for (int j = 0; j <= da_; ++j)
            if (at(i, j) != 0) {
                new_dx = std::max(new_dx, i);
                new_da = std::max(new_da, j);
            }
    if (new_dx < 0) {
        coeffs_.clear();
        dx_ = da_ = -1;
        return;
    }
    if (new_dx == dx_ && new_da == da_) return;
    std::vector<Int> packed(static_cast<size_t>(new_dx + 1) * (new_da + 1), Int(0));
    for (int i = 0; i <= new_dx; ++i)
        for (int j = 0; j <= new_da; ++j)
            packed[static_cast<size_t>(i) * (new_da + 1) + j] = std::move(at(i, j));
    coeffs_ = std::move(packed);
    dx_ = new_dx;
    da_ = new_da;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    BivarPoly out;
    out.dx_ = std::max(dx_, o.dx_);
    out.da_ = std::max(da_, o.da_);
    out.coeffs_.assign(static_cast<size_t>(out.dx_ + 1) * (out.da_ + 1), Int(0));
    for (int i = 0; i <= out.dx_; ++i)
        for (int j = 0; j <= out.da_; ++j) out.at(i, j) = coeff(i, j) + o.coeff(i, j);
    out.trim();
    return out;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    BivarPoly out;
    out.dx_ = dx_ + o.dx_;
    out.da_ = da_ + o.da_;
    out.coeffs_.assign(static_cast<size_t>(out.dx_ + 1) * (out.da_ + 1), Int(0));
    for (int i = 0; i <= dx_; ++i)
        for (int j = 0; j <= da_; ++j) {
            const Int& c = at(i, j);
            if (c == 0) continue;
            for (int p = 0; p <= o.dx_; ++p)
                for (int q = 0; q <= o.da_; ++q) {
                    const Int& d = o.at(p, q);
                    if (d != 0) out.at(i + p, j + q) += c * d;
                }
        }
    out.trim();
    return out;
}

BivarPoly BivarPoly::operator*(const Int& k) const {
    if (k == 0) return {};
    BivarPoly out = *this;
    for (auto& c : out.coeffs_) c *= k;
    return out;
}

BivarPoly BivarPoly::shift_x(const BivarPoly& shift) const {
    if (!shift.is_zero() && shift.deg_x() != 0)
        throw std::invalid_argument("shift_x needs an x-free shift polynomial");
    // Horner in x: P(x+s) = (((c_dx)(x+s) + c_{dx-1})(x+s) + ...)
    const BivarPoly xs = var_x() + shift;
    BivarPoly acc;
    for (int i = dx_; i >= 0; --i) {
        BivarPoly row; // coefficient of x^i as a polynomial in a
        for (int j = 0; j <= da_; ++j)
            if (at(i, j) != 0) row = row + monomial(0, j, at(i, j));
        acc = acc * xs + row;
    }
    return acc;
}

Rational BivarPoly::eval(const Rational& x0, const Rational& a0) const {
    Rational acc{0};
    for (int i = dx_; i >= 0; --i) {
        Rational row{0};
        for (int j = da_; j >= 0; --j) row = row * a0 + Rational(at(i, j));
        acc = acc * x0 + row;
    }
    return acc;
}

UnivarPoly BivarPoly::eval_alpha(const Rational& a0) const {
    std::vector<Rational> out(static_cast<size_t>(std::max(dx_ + 1, 0)), Rational(0));
    for (int i = 0; i <= dx_; ++i) {
        Rational row{0};
        for (int j = da_; j >= 0; --j) row = row * a0 + Rational(at(i, j));
        out[static_cast<size_t>(i)] = row;
    }
    return UnivarPoly(std::move(out));
}

Int BivarPoly::content() const {
    Int g{0};
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Int BivarPoly::leading_coeff_lex() const {
    if (is_zero()) return Int(0);
    for (int j = da_; j >= 0; --j)
        if (at(dx_, j) != 0) return at(dx_, j);
    throw std::logic_error("untrimmed polynomial");
}

std::vector<std::tuple<int, int, std::string>> BivarPoly::terms() const {
    std::vector<std::tuple<int, int, std::string>> out;
    for (int i = dx_; i >= 0; --i)
        for (int j = da_; j >= 0; --j)
            if (at(i, j) != 0) out.emplace_back(i, j, at(i, j).str());
    return out;
}

std::string BivarPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = dx_; i >= 0; --i) {
        for (int j = da_; j >= 0; --j) {
            const Int& c = at(i, j);
            if (c == 0) continue;
            const bool first = out.empty();
            const bool negative = c < 0;
            if (!first) out += negative ? " - " : " + ";
            else if (negative) out += "-";
            const Int mag = negative ? Int(-c) : c;
            std::string vars;
            if (j > 0) {
                vars += "a";
                if (j > 1) vars += "^" + std::to_string(j);
            }
            if (i > 0) {
                if (!vars.empty()) vars += "*";
                vars += "x";
                if (i > 1) vars += "^" + std::to_string(i);
            }
            if (mag != 1 || vars.empty()) {
                out += mag.str();
                if (!vars.empty()) out += "*";
            }
            out += vars;
        }
    }
    return out;
}

std::string BivarPoly::encode() const {
    std::string out;
    auto push_i32 = [&](int v) {
        for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((v >> s) & 0xff));
    };
    push_i32(dx_);
    push_i32(da_);
    for (const auto& c : coeffs_) {
        const bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        std::string bytes;
        while (mag != 0) {
            bytes.push_back(static_cast<char>(static_cast<unsigned>(mag & 0xff)));
            mag >>= 8;
        }
        std::reverse(bytes.begin(), bytes.end());
        out.push_back(neg ? '\x01' : '\x00');
        push_i32(static_cast<int>(bytes.size()));
        out += bytes;
    }
    return out;
}

BivarPoly exact_div(const BivarPoly& num, const BivarPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return {};

    // Coefficients of x^k as integer vectors in a.
    auto alpha_row = [](const BivarPoly& p, int i) {
        std::vector<Int> row(static_cast<size_t>(p.da_ + 1), Int(0));
        for (int j = 0; j <= p.da_; ++j) row[static_cast<size_t>(j)] = p.at(i, j);
        while (!row.empty() && row.back() == 0) row.pop_back();
        return row;
    };

    // Exact division of integer polynomials in a; nullopt when not exact.
    auto alpha_div = [](std::vector<Int> u,
                        const std::vector<Int>& v) -> std::optional<std::vector<Int>> {
        if (v.empty()) return std::nullopt;
        if (u.empty()) return std::vector<Int>{};
        if (u.size() < v.size()) return std::nullopt;
        std::vector<Int> q(u.size() - v.size() + 1, Int(0));
        for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
            const Int& lead = u[static_cast<size_t>(k) + v.size() - 1];
            if (lead == 0) continue;
            if (lead % v.back() != 0) return std::nullopt;
            q[static_cast<size_t>(k)] = lead / v.back();
            for (size_t j = 0; j < v.size(); ++j)
                u[static_cast<size_t>(k) + j] -= q[static_cast<size_t>(k)] * v[j];
        }
        for (const auto& c : u)
            if (c != 0) return std::nullopt;
        return q;
    };

    const int dq = num.deg_x() - den.deg_x();
    if (dq < 0) throw std::domain_error("inexact polynomial division (degree)");
    const auto den_lead = alpha_row(den, den.deg_x());

    BivarPoly rem = num;
    BivarBuilder qb(dq, std::max(num.deg_a(), 0) + std::max(den.deg_a(), 0));
    for (int k = dq; k >= 0; --k) {
        if (rem.is_zero() || rem.deg_x() < den.deg_x() + k) continue;
        auto lead = alpha_row(rem, den.deg_x() + k);
        if (lead.empty()) continue;
        auto q = alpha_div(std::move(lead), den_lead);
        if (!q) throw std::domain_error("inexact polynomial division");
        BivarPoly qterm;
        for (size_t j = 0; j < q->size(); ++j)
            if ((*q)[j] != 0) {
                qterm = qterm + BivarPoly::monomial(k, static_cast<int>(j), (*q)[j]);
                qb.add(k, static_cast<int>(j), (*q)[j]);
            }
        rem = rem - qterm * den;
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division (remainder)");
    return qb.build();
}

BivarBuilder::BivarBuilder(int max_deg_x, int max_deg_a)
    : dx_(std::max(max_deg_x, 0)), da_(std::max(max_deg_a, 0)),
      coeffs_(static_cast<size_t>(dx_ + 1) * (da_ + 1), Int(0)) {}

void BivarBuilder::add(int deg_x, int deg_a, const Int& c) {
    if (deg_x < 0 || deg_x > dx_ || deg_a < 0 || deg_a > da_)
        throw std::out_of_range("BivarBuilder: degree outside reserved box");
    coeffs_[static_cast<size_t>(deg_x) * (da_ + 1) + deg_a] += c;
}

BivarPoly BivarBuilder::build() {
    BivarPoly p;
    p.dx_ = dx_;
    p.da_ = da_;
    p.coeffs_ = std::move(coeffs_);
    p.trim();
    return p;
}

} // namespace alphaspec
