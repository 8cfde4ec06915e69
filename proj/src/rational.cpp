#include "alphaspec/rational.hpp"

#include <cctype>

namespace alphaspec {

std::string rational_to_string(const Rational& r) {
    if (is_integral(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = (s[0] == '-');
        s = s.substr(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational: " + text);
        Int d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        value = Rational(Int(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw std::invalid_argument("malformed decimal: " + text);
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int units = whole.empty() ? Int(0) : Int(whole);
        value = Rational(units * scale + Int(frac), scale);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed number: " + text);
        value = Rational(Int(s));
    }
    return neg ? -value : value;
}

void require_alpha_range(const Rational& alpha) {
    if (alpha < 0 || alpha > 1)
        throw std::domain_error("alpha outside [0,1]: " + rational_to_string(alpha));
}

} // namespace alphaspec
