#pragma once

#include <array>
#include <string>
#include <string_view>

#include "jnpoly/scalar.hpp"

namespace jnpoly {

/// The four real composition algebras reachable by Cayley-Dickson doubling.
enum class AlgebraLevel { Real, Complex, Quaternion, Octonion };

constexpr int dimension(AlgebraLevel lv) {
    switch (lv) {
        case AlgebraLevel::Real: return 1;
        case AlgebraLevel::Complex: return 2;
        case AlgebraLevel::Quaternion: return 4;
        case AlgebraLevel::Octonion: return 8;
    }
    return 0;
}

constexpr std::array<AlgebraLevel, 4> kAllLevels{AlgebraLevel::Real, AlgebraLevel::Complex,
                                                 AlgebraLevel::Quaternion, AlgebraLevel::Octonion};

inline std::string_view level_name(AlgebraLevel lv) {
    switch (lv) {
        case AlgebraLevel::Real: return "real";
        case AlgebraLevel::Complex: return "complex";
        case AlgebraLevel::Quaternion: return "quaternion";
        case AlgebraLevel::Octonion: return "octonion";
    }
    return "?";
}

inline AlgebraLevel level_from_name(std::string_view name) {
    for (AlgebraLevel lv : kAllLevels) {
        if (level_name(lv) == name) return lv;
    }
    throw InputError("unknown algebra level '" + std::string(name) + "'");
}

/// Basis unit names in the fixed coordinate order.
constexpr std::array<std::string_view, 8> kUnitNames{"1", "i", "j", "k", "l", "il", "jl", "kl"};

namespace detail {

// Cayley-Dickson product on raw coordinate blocks, fixed convention
// (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)). Restricted below the
// octonions this reproduces Hamilton's relations.
template <class S>
void cd_mul_rec(const S* x, const S* y, int dim, S* out) {
    if (dim == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const int h = dim / 2;
    const S* a = x;
    const S* b = x + h;
    const S* c = y;
    const S* d = y + h;
    std::array<S, 4> cj{};
    std::array<S, 4> t{};
    // Low half: ac - conj(d) b.
    cd_mul_rec(a, c, h, out);
    cj[0] = d[0];
    for (int i = 1; i < h; ++i) cj[i] = -d[i];
    cd_mul_rec(cj.data(), b, h, t.data());
    for (int i = 0; i < h; ++i) out[i] = out[i] - t[i];
    // High half: da + b conj(c).
    cd_mul_rec(d, a, h, out + h);
    cj[0] = c[0];
    for (int i = 1; i < h; ++i) cj[i] = -c[i];
    cd_mul_rec(b, cj.data(), h, t.data());
    for (int i = 0; i < h; ++i) out[h + i] = out[h + i] + t[i];
}

}  // namespace detail

/// Element of R, C, H or O with exact or floating coordinates in the order
/// (1, i, j, k, l, il, jl, kl) truncated to the level's dimension.
template <class S>
class CDNumber {
public:
    explicit CDNumber(AlgebraLevel lv) : level_(lv) {}

    static CDNumber scalar(AlgebraLevel lv, const S& value) {
        CDNumber r(lv);
        r.c_[0] = value;
        return r;
    }

    static CDNumber unit(AlgebraLevel lv, int index) {
        if (index < 0 || index >= dimension(lv)) {
            throw InputError("unit index out of range for level " +
                             std::string(level_name(lv)));
        }
        CDNumber r(lv);
        r.c_[index] = S(1);
        return r;
    }

    AlgebraLevel level() const { return level_; }
    int dim() const { return dimension(level_); }

    const S& operator[](int i) const { return c_[i]; }
    S& operator[](int i) { return c_[i]; }

    bool is_zero() const {
        for (int i = 0; i < dim(); ++i) {
            if (!(c_[i] == S(0))) return false;
        }
        return true;
    }

    friend CDNumber operator+(const CDNumber& x, const CDNumber& y) {
        x.require_same_level(y);
        CDNumber r(x.level_);
        for (int i = 0; i < x.dim(); ++i) r.c_[i] = x.c_[i] + y.c_[i];
        return r;
    }

    friend CDNumber operator-(const CDNumber& x, const CDNumber& y) {
        x.require_same_level(y);
        CDNumber r(x.level_);
        for (int i = 0; i < x.dim(); ++i) r.c_[i] = x.c_[i] - y.c_[i];
        return r;
    }

    CDNumber operator-() const {
        CDNumber r(level_);
        for (int i = 0; i < dim(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    friend CDNumber operator*(const CDNumber& x, const CDNumber& y) {
        x.require_same_level(y);
        CDNumber r(x.level_);
        detail::cd_mul_rec(x.c_.data(), y.c_.data(), x.dim(), r.c_.data());
        return r;
    }

    friend CDNumber operator*(const S& s, const CDNumber& x) {
        CDNumber r(x.level_);
        for (int i = 0; i < x.dim(); ++i) r.c_[i] = s * x.c_[i];
        return r;
    }

    friend bool operator==(const CDNumber& x, const CDNumber& y) {
        if (x.level_ != y.level_) return false;
        for (int i = 0; i < x.dim(); ++i) {
            if (!(x.c_[i] == y.c_[i])) return false;
        }
        return true;
    }
    friend bool operator!=(const CDNumber& x, const CDNumber& y) { return !(x == y); }

    /// Negates every coordinate except the real one.
    CDNumber conj() const {
        CDNumber r(level_);
        r.c_[0] = c_[0];
        for (int i = 1; i < dim(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    /// Sum of squared coordinates; equals the real part of x * conj(x).
    S norm_sq() const {
        S acc = c_[0] * c_[0];
        for (int i = 1; i < dim(); ++i) acc = acc + c_[i] * c_[i];
        return acc;
    }

    /// "[c0, c1, ...]" with the level's coordinate count.
    std::string to_string() const {
        std::string out = "[";
        for (int i = 0; i < dim(); ++i) {
            if (i) out += ", ";
            out += scalar_to_string(c_[i]);
        }
        out += "]";
        return out;
    }

private:
    void require_same_level(const CDNumber& o) const {
        if (level_ != o.level_) {
            throw InputError("composition algebra level mismatch: " +
                             std::string(level_name(level_)) + " vs " +
                             std::string(level_name(o.level_)));
        }
    }

    AlgebraLevel level_;
    std::array<S, 8> c_{};
};

template <class S>
CDNumber<S> conj(const CDNumber<S>& x) {
    return x.conj();
}

template <class S>
S norm_sq(const CDNumber<S>& x) {
    return x.norm_sq();
}

}  // namespace jnpoly
