#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rsw {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long to_long(const Int& v) {
    if (v > (std::numeric_limits<long long>::max)() || v < (std::numeric_limits<long long>::min)())
        throw std::overflow_error("integer does not fit in long long: " + v.str());
    return v.convert_to<long long>();
}

inline Int int_numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int int_denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return int_denominator(q) == 1; }

// representative of a mod m in [0, m)
inline Int positive_mod(Int a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += boost::multiprecision::abs(m);
    return r;
}

inline long long positive_mod(long long a, long long m) {
    long long r = a % m;
    if (r < 0) r += (m < 0 ? -m : m);
    return r;
}

// "p/q" when q != 1, else "p"
inline std::string rational_str(const Rational& q) {
    const Int num = int_numerator(q);
    const Int den = int_denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
    return Rational(Int(std::string(s.substr(0, slash))), Int(std::string(s.substr(slash + 1))));
}

}  // namespace rsw
