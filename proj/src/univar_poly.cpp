#include "alphaspec/univar_poly.hpp"

#include <stdexcept>

namespace alphaspec {

namespace {
const Rational kZero{0};
}

UnivarPoly::UnivarPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivarPoly UnivarPoly::constant(Rational c) { return UnivarPoly({std::move(c)}); }

UnivarPoly UnivarPoly::var_x() { return UnivarPoly({Rational(0), Rational(1)}); }

void UnivarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UnivarPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

UnivarPoly UnivarPoly::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator+(const UnivarPoly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator-(const UnivarPoly& o) const { return *this + (-o); }

UnivarPoly UnivarPoly::operator*(const UnivarPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator*(const Rational& k) const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c *= k;
    return UnivarPoly(std::move(out));
}

Rational UnivarPoly::eval(const Rational& x0) const {
    Rational acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

UnivarPoly UnivarPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return UnivarPoly(std::move(out));
}

std::pair<UnivarPoly, UnivarPoly> UnivarPoly::divmod(const UnivarPoly& den) const {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    UnivarPoly rem = *this;
    std::vector<Rational> q;
    if (rem.degree() >= den.degree())
        q.assign(static_cast<size_t>(rem.degree() - den.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const int shift = rem.degree() - den.degree();
        const Rational factor = rem.leading() / den.leading();
        q[static_cast<size_t>(shift)] = factor;
        std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
        for (const auto& c : den.coeffs_) sub.push_back(c * factor);
        rem = rem - UnivarPoly(std::move(sub));
    }
    return {UnivarPoly(std::move(q)), rem};
}

int UnivarPoly::root_multiplicity(const Rational& x0) const {
    if (is_zero()) throw std::domain_error("root multiplicity of zero polynomial");
    const UnivarPoly linear({-x0, Rational(1)});
    int mult = 0;
    UnivarPoly p = *this;
    while (p.eval(x0) == 0) {
        auto [q, r] = p.divmod(linear);
        if (!r.is_zero()) throw std::logic_error("exact root division left a remainder");
        p = std::move(q);
        ++mult;
        if (p.is_zero()) break;
    }
    return mult;
}

std::string UnivarPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        const bool first = out.empty();
        const bool negative = c < 0;
        if (!first) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        const Rational mag = negative ? Rational(-c) : c;
        const bool unit = (mag == 1 && k > 0);
        if (!unit) out += rational_to_string(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

UnivarPoly poly_gcd(UnivarPoly a, UnivarPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rational(1) / a.leading());
    return a;
}

} // namespace alphaspec
