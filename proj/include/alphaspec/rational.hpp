#ifndef ALPHASPEC_RATIONAL_HPP
#define ALPHASPEC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace alphaspec {

// Exact scalar substrate. cpp_rational keeps gcd(num,den)==1 and den>0,
// which is exactly the canonical form the rest of the code assumes.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return rat_den(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_to_string(const Rational& r);

// Accepts "p/q", an integer, or a finite decimal ("0.75" -> 3/4 exactly).
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Alpha values live in [0,1]; throws std::domain_error outside.
void require_alpha_range(const Rational& alpha);

} // namespace alphaspec

#endif
