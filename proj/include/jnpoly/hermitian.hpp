#pragma once

#include <string>

#include "jnpoly/cayley_dickson.hpp"
#include "jnpoly/spin.hpp"

namespace jnpoly {

/// Self-adjoint 2x2 matrix over a composition algebra:
///
///     [ alpha      beta    ]
///     [ conj(beta) delta   ]
///
/// Only (alpha, delta, beta) are stored, so self-adjointness holds by
/// construction. The model has dimension 2 + dim(level): 3, 4, 6 or 10.
template <class S>
struct Herm2 {
    AlgebraLevel level;
    S alpha{};
    S delta{};
    CDNumber<S> beta;

    explicit Herm2(AlgebraLevel lv) : level(lv), beta(lv) {}
    Herm2(AlgebraLevel lv, S a, S d, CDNumber<S> b)
        : level(lv), alpha(std::move(a)), delta(std::move(d)), beta(std::move(b)) {
        if (beta.level() != level) throw InputError("Herm2 entry level mismatch");
    }

    int spin_dim() const { return 2 + dimension(level); }

    static Herm2 zero(AlgebraLevel lv) { return Herm2(lv); }

    static Herm2 identity(AlgebraLevel lv) {
        Herm2 r(lv);
        r.alpha = S(1);
        r.delta = S(1);
        return r;
    }

    friend Herm2 operator+(const Herm2& x, const Herm2& y) {
        x.require_same_level(y);
        return Herm2(x.level, x.alpha + y.alpha, x.delta + y.delta, x.beta + y.beta);
    }

    friend Herm2 operator-(const Herm2& x, const Herm2& y) {
        x.require_same_level(y);
        return Herm2(x.level, x.alpha - y.alpha, x.delta - y.delta, x.beta - y.beta);
    }

    friend Herm2 operator*(const S& s, const Herm2& x) {
        return Herm2(x.level, s * x.alpha, s * x.delta, s * x.beta);
    }

    friend bool operator==(const Herm2& x, const Herm2& y) {
        return x.level == y.level && x.alpha == y.alpha && x.delta == y.delta && x.beta == y.beta;
    }
    friend bool operator!=(const Herm2& x, const Herm2& y) { return !(x == y); }

    void require_same_level(const Herm2& o) const {
        if (level != o.level) {
            throw InputError("Hermitian model level mismatch: " + std::string(level_name(level)) +
                             " vs " + std::string(level_name(o.level)));
        }
    }

    /// Structured text record: level tag plus the three stored entries.
    std::string to_text() const {
        std::string out = "level=";
        out += level_name(level);
        out += " alpha=" + scalar_to_string(alpha);
        out += " delta=" + scalar_to_string(delta);
        out += " beta=" + beta.to_string();
        return out;
    }
};

/// Basis matrices of the Hermitian models: index 0 is the identity, index 1 is
/// diag(1,-1), index p >= 2 has the (p-2)-th composition unit off-diagonal.
template <class S>
Herm2<S> basis_element(AlgebraLevel lv, int index) {
    const int n = 2 + dimension(lv);
    if (index < 0 || index >= n) {
        throw InputError("basis index " + std::to_string(index) + " out of range for " +
                         std::string(level_name(lv)) + " model (n=" + std::to_string(n) + ")");
    }
    Herm2<S> r(lv);
    if (index == 0) {
        r.alpha = S(1);
        r.delta = S(1);
    } else if (index == 1) {
        r.alpha = S(1);
        r.delta = S(-1);
    } else {
        r.beta = CDNumber<S>::unit(lv, index - 2);
    }
    return r;
}

namespace detail {

template <class S>
bool entry_real(const CDNumber<S>& x, double tol) {
    for (int i = 1; i < x.dim(); ++i) {
        if (!scalar_is_zero(x[i], tol)) return false;
    }
    return true;
}

}  // namespace detail

/// Jordan product (xy + yx)/2, computed entrywise through the full associative
/// matrix products. The result must come out Hermitian with a real diagonal;
/// that shape is asserted, which continuously cross-checks the entry
/// arithmetic (the octonion model would expose any sign slip here).
template <class S>
Herm2<S> jordan_mul(const Herm2<S>& x, const Herm2<S>& y) {
    x.require_same_level(y);
    const AlgebraLevel lv = x.level;
    const auto sc = [&](const S& s) { return CDNumber<S>::scalar(lv, s); };

    const CDNumber<S> a1 = sc(x.alpha), d1 = sc(x.delta);
    const CDNumber<S> a2 = sc(y.alpha), d2 = sc(y.delta);
    const CDNumber<S> b1 = x.beta, b2 = y.beta;
    const CDNumber<S> b1c = b1.conj(), b2c = b2.conj();

    // xy + yx, entry by entry.
    CDNumber<S> e00 = (a1 * a2 + b1 * b2c) + (a2 * a1 + b2 * b1c);
    CDNumber<S> e01 = (a1 * b2 + b1 * d2) + (a2 * b1 + b2 * d1);
    CDNumber<S> e10 = (b1c * a2 + d1 * b2c) + (b2c * a1 + d2 * b1c);
    CDNumber<S> e11 = (b1c * b2 + d1 * d2) + (b2c * b1 + d2 * d1);

    const double tol = is_exact_scalar_v<S> ? 0.0 : ScalarMode::kDefaultTolerance;
    if (!detail::entry_real(e00, tol) || !detail::entry_real(e11, tol)) {
        throw InvariantFault("jordan_mul produced a non-real diagonal entry");
    }
    if constexpr (is_exact_scalar_v<S>) {
        if (e10 != e01.conj()) {
            throw InvariantFault("jordan_mul result is not self-adjoint");
        }
    }

    Herm2<S> r(lv);
    r.alpha = half(e00[0]);
    r.delta = half(e11[0]);
    r.beta = half(S(1)) * e01;
    return r;
}

/// Coordinates of x in the orthonormal basis e_0..e_{n-1}: scalar part
/// (alpha+delta)/2, pure part ((alpha-delta)/2, beta coordinates).
template <class S>
SpinElement<S> to_spin(const Herm2<S>& x) {
    SpinElement<S> r;
    r.a = half(x.alpha + x.delta);
    r.v.resize(1 + dimension(x.level));
    r.v[0] = half(x.alpha - x.delta);
    for (int i = 0; i < dimension(x.level); ++i) r.v[1 + i] = x.beta[i];
    return r;
}

/// Exact inverse of to_spin.
template <class S>
Herm2<S> from_spin(const SpinElement<S>& s, AlgebraLevel lv) {
    if (s.pure_dim() != 1 + dimension(lv)) {
        throw InputError("spin element of dimension n=" + std::to_string(s.n()) +
                         " does not match the " + std::string(level_name(lv)) + " model (n=" +
                         std::to_string(2 + dimension(lv)) + ")");
    }
    Herm2<S> r(lv);
    r.alpha = s.a + s.v[0];
    r.delta = s.a - s.v[0];
    for (int i = 0; i < dimension(lv); ++i) r.beta[i] = s.v[1 + i];
    return r;
}

inline AlgebraLevel level_for_spin_dim(int n) {
    for (AlgebraLevel lv : kAllLevels) {
        if (2 + dimension(lv) == n) return lv;
    }
    throw InputError("no Hermitian 2x2 model has dimension n=" + std::to_string(n) +
                     " (supported: 3, 4, 6, 10)");
}

}  // namespace jnpoly
