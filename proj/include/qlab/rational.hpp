#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qlab/errors.hpp"

namespace qlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q^e for integer e of either sign, as an exact rational.
inline Rational rat_pow(long long base, long long e) {
    Int b(base);
    if (e >= 0) return Rational(boost::multiprecision::pow(b, static_cast<unsigned>(e)));
    return Rational(Int(1), boost::multiprecision::pow(b, static_cast<unsigned>(-e)));
}

inline Int int_pow(long long base, long long e) {
    if (e < 0) throw OutOfRange("int_pow: negative exponent");
    return boost::multiprecision::pow(Int(base), static_cast<unsigned>(e));
}

/// Canonical "num/den" form, denominator always present and positive.
inline std::string rat_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

/// Parses "num/den" or a bare integer.
inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZero("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw IoError("cannot parse rational '" + s + "': " + e.what());
    }
}

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace qlab
