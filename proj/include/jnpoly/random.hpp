#pragma once

#include <random>

#include "jnpoly/hermitian.hpp"
#include "jnpoly/spin.hpp"

namespace jnpoly {

/// Seed-deterministic element generators shared by the sampling oracle, the
/// preimage search and the test suites.

inline Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

/// Random spin element with integer numerators over one shared denominator,
/// which keeps exact evaluation of high-degree monomials well inside the
/// 128-bit range.
inline SpinElement<Rational> random_spin_rational(std::mt19937_64& rng, int n, int num_bound = 9,
                                                  int den_bound = 3) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    const int q = den(rng);
    SpinElement<Rational> r = SpinElement<Rational>::zero(n);
    r.a = Rational(num(rng), q);
    for (int i = 0; i < n - 1; ++i) r.v[i] = Rational(num(rng), q);
    return r;
}

inline SpinElement<double> random_spin_double(std::mt19937_64& rng, int n, int num_bound = 9,
                                              int den_bound = 3) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    const double q = den(rng);
    SpinElement<double> r = SpinElement<double>::zero(n);
    r.a = num(rng) / q;
    for (int i = 0; i < n - 1; ++i) r.v[i] = num(rng) / q;
    return r;
}

inline Herm2<Rational> random_herm_rational(std::mt19937_64& rng, AlgebraLevel lv,
                                            int num_bound = 9, int den_bound = 2) {
    Herm2<Rational> r(lv);
    r.alpha = random_rational(rng, num_bound, den_bound);
    r.delta = random_rational(rng, num_bound, den_bound);
    for (int i = 0; i < dimension(lv); ++i) r.beta[i] = random_rational(rng, num_bound, den_bound);
    return r;
}

inline CDNumber<Rational> random_cd_rational(std::mt19937_64& rng, AlgebraLevel lv,
                                             int num_bound = 9, int den_bound = 2) {
    CDNumber<Rational> r(lv);
    for (int i = 0; i < dimension(lv); ++i) r[i] = random_rational(rng, num_bound, den_bound);
    return r;
}

}  // namespace jnpoly
