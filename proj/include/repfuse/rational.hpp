#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace repfuse {

// Exact rational scalar used for every symbolic parameter (h, s, t, xi, eta)
// and for the exact coordinate mode of group elements.  Branch predicates of
// the fusion rules ("h + h' = 0", "s + t < -1") must be decidable, so floats
// are never used on the symbolic side.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Smallest integer >= r.  Needs no overflow care at the magnitudes the
// engine sees (parameters are user-typed rationals).
inline long long ceil_rational(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r > 0) ++q;
    return q;
}

// Parses "3", "-5", "3/2", "-9/10".  Whitespace is not accepted.
Rational parse_rational(std::string_view text);

// Formats as "n" or "n/d" with the sign on the numerator.
std::string format_rational(const Rational& r);

std::string format_rational_list(const std::vector<Rational>& v);

}  // namespace repfuse
