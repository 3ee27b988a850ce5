#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nipreg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational. All ratio quantities (tupling parameters, error
/// fractions, thresholds) are carried this way; inequalities against
/// integer counts reduce to integer cross-multiplication.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline Rat rat_pow(const Rat& base, unsigned exp) {
    return Rat(ipow(num(base), exp), ipow(den(base), exp));
}

/// Parses "p/q", a plain integer, or a decimal like "0.35" (exact).
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return Rat(p, q);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad rational: " + s);
        BigInt p(digits);
        return Rat(p, ipow(BigInt(10), static_cast<unsigned>(s.size() - dot - 1)));
    }
    return Rat(BigInt(s));
}

inline std::string rat_str(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline double rat_double(const Rat& r) { return static_cast<double>(r); }

inline long double rat_ldouble(const Rat& r) {
    return static_cast<long double>(num(r)) / static_cast<long double>(den(r));
}

}  // namespace nipreg
