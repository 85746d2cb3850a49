#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <type_traits>

#include "jnpoly/rational.hpp"

namespace jnpoly {

/// Zero/equality policy for the two scalar modes. Exact mode (Rational) ignores
/// the tolerance; Floating mode (double) compares against it absolutely.
struct ScalarMode {
    enum Kind { Exact, Floating };
    Kind kind = Exact;
    double tolerance = 0.0;

    static ScalarMode exact() { return {Exact, 0.0}; }
    static ScalarMode floating(double tol = kDefaultTolerance) { return {Floating, tol}; }

    static constexpr double kDefaultTolerance = 1e-9;
};

template <class S>
inline constexpr bool is_exact_scalar_v = std::is_same_v<S, Rational>;

inline bool scalar_is_zero(const Rational& x, double /*tol*/ = 0.0) { return x.is_zero(); }
inline bool scalar_is_zero(double x, double tol = ScalarMode::kDefaultTolerance) {
    return std::abs(x) <= tol;
}

template <class S>
S scalar_cast(const Rational& c) {
    if constexpr (is_exact_scalar_v<S>) {
        return c;
    } else {
        return c.to_double();
    }
}

inline std::string scalar_to_string(const Rational& x) { return x.to_string(); }

/// Shortest decimal that round-trips through strtod.
inline std::string scalar_to_string(double x) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

inline Rational scalar_from_string_exact(std::string_view s) { return Rational::from_string(s); }

inline double scalar_from_string_float(const std::string& s) {
    // Accepts both decimal and "p/q" forms.
    if (auto slash = s.find('/'); slash != std::string::npos) {
        return Rational::from_string(s).to_double();
    }
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw InputError("malformed number '" + s + "'");
    }
    return v;
}

}  // namespace jnpoly
