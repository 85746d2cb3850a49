#pragma once

#include <boost/container/small_vector.hpp>
#include <cmath>
#include <string>
#include <string_view>

#include "jnpoly/scalar.hpp"

namespace jnpoly {

/// Element of the spin factor J_n: a scalar part (coefficient of e_0 = 1) plus
/// an (n-1)-dimensional pure part in the basis e_1..e_{n-1}. Inline storage
/// covers n <= 10, the four Hermitian models; larger n spills to the heap.
template <class S>
struct SpinElement {
    using PureVec = boost::container::small_vector<S, 9>;

    S a{};
    PureVec v;

    SpinElement() = default;
    SpinElement(S scalar, PureVec pure) : a(std::move(scalar)), v(std::move(pure)) {}

    static SpinElement zero(int n) {
        require_dim(n);
        return SpinElement(S(0), PureVec(n - 1, S(0)));
    }

    static SpinElement one(int n) {
        require_dim(n);
        return SpinElement(S(1), PureVec(n - 1, S(0)));
    }

    /// Basis element by index: 0 is the unit, i >= 1 is e_i.
    static SpinElement basis(int n, int index) {
        require_dim(n);
        if (index < 0 || index >= n) throw InputError("basis index out of range");
        SpinElement r = zero(n);
        if (index == 0) {
            r.a = S(1);
        } else {
            r.v[index - 1] = S(1);
        }
        return r;
    }

    int n() const { return static_cast<int>(v.size()) + 1; }
    int pure_dim() const { return static_cast<int>(v.size()); }

    bool scalar_part_zero(double tol = 0.0) const { return scalar_is_zero(a, tol); }
    bool pure_part_zero(double tol = 0.0) const {
        for (const S& c : v) {
            if (!scalar_is_zero(c, tol)) return false;
        }
        return true;
    }
    bool is_zero(double tol = 0.0) const { return scalar_part_zero(tol) && pure_part_zero(tol); }

    friend SpinElement operator+(const SpinElement& x, const SpinElement& y) {
        x.require_same_dim(y);
        SpinElement r = x;
        r.a = r.a + y.a;
        for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = r.v[i] + y.v[i];
        return r;
    }

    friend SpinElement operator-(const SpinElement& x, const SpinElement& y) {
        x.require_same_dim(y);
        SpinElement r = x;
        r.a = r.a - y.a;
        for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = r.v[i] - y.v[i];
        return r;
    }

    SpinElement operator-() const {
        SpinElement r = *this;
        r.a = -r.a;
        for (S& c : r.v) c = -c;
        return r;
    }

    friend SpinElement operator*(const S& s, const SpinElement& x) {
        SpinElement r = x;
        r.a = s * r.a;
        for (S& c : r.v) c = s * c;
        return r;
    }

    friend bool operator==(const SpinElement& x, const SpinElement& y) {
        return x.a == y.a && x.v == y.v;
    }
    friend bool operator!=(const SpinElement& x, const SpinElement& y) { return !(x == y); }

    /// "a + [c1, c2, ...]".
    std::string to_text() const {
        std::string out = scalar_to_string(a);
        out += " + [";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += scalar_to_string(v[i]);
        }
        out += "]";
        return out;
    }

    void require_same_dim(const SpinElement& o) const {
        if (v.size() != o.v.size()) {
            throw InputError("spin factor dimension mismatch: n=" + std::to_string(n()) +
                             " vs n=" + std::to_string(o.n()));
        }
    }

private:
    static void require_dim(int n) {
        if (n < 2) throw InputError("spin factor requires n >= 2");
    }
};

/// The spin factor product: (a+u)(b+v) = (ab + <u,v>) + (a v + b u).
template <class S>
SpinElement<S> jordan_mul(const SpinElement<S>& x, const SpinElement<S>& y) {
    x.require_same_dim(y);
    SpinElement<S> r;
    S dot = S(0);
    for (size_t i = 0; i < x.v.size(); ++i) dot = dot + x.v[i] * y.v[i];
    r.a = x.a * y.a + dot;
    r.v.resize(x.v.size());
    for (size_t i = 0; i < x.v.size(); ++i) r.v[i] = x.a * y.v[i] + y.a * x.v[i];
    return r;
}

template <class S>
S pure_norm_sq(const SpinElement<S>& x) {
    S acc = S(0);
    for (const S& c : x.v) acc = acc + c * c;
    return acc;
}

/// Lemma-1 orbit criterion: same scalar part and same pure norm.
inline bool orbit_equivalent(const SpinElement<Rational>& x, const SpinElement<Rational>& y) {
    x.require_same_dim(y);
    return x.a == y.a && pure_norm_sq(x) == pure_norm_sq(y);
}

inline bool orbit_equivalent(const SpinElement<double>& x, const SpinElement<double>& y,
                             double tol = ScalarMode::kDefaultTolerance) {
    x.require_same_dim(y);
    if (std::abs(x.a - y.a) > tol) return false;
    return std::abs(std::sqrt(pure_norm_sq(x)) - std::sqrt(pure_norm_sq(y))) <= tol;
}

inline double distance(const SpinElement<double>& x, const SpinElement<double>& y) {
    x.require_same_dim(y);
    double acc = (x.a - y.a) * (x.a - y.a);
    for (size_t i = 0; i < x.v.size(); ++i) acc += (x.v[i] - y.v[i]) * (x.v[i] - y.v[i]);
    return std::sqrt(acc);
}

namespace detail {

template <class S, class CoordParser>
SpinElement<S> parse_spin_text(std::string_view text, CoordParser parse_coord) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto fail = [&] {
        throw InputError("malformed spin element '" + std::string(text) +
                         "' (expected \"a + [c1, c2, ...]\")");
    };
    size_t open = text.find('[');
    size_t close = text.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) fail();
    std::string_view head = trim(text.substr(0, open));
    if (head.empty() || head.back() != '+') fail();
    head.remove_suffix(1);
    head = trim(head);
    if (head.empty()) fail();

    SpinElement<S> r;
    r.a = parse_coord(std::string(head));
    std::string_view body = trim(text.substr(open + 1, close - open - 1));
    if (!body.empty()) {
        size_t pos = 0;
        while (true) {
            size_t comma = body.find(',', pos);
            std::string_view item = trim(body.substr(pos, comma == std::string_view::npos
                                                              ? std::string_view::npos
                                                              : comma - pos));
            if (item.empty()) fail();
            r.v.push_back(parse_coord(std::string(item)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    if (r.n() < 2) fail();
    return r;
}

}  // namespace detail

inline SpinElement<Rational> parse_spin_exact(std::string_view text) {
    return detail::parse_spin_text<Rational>(
        text, [](const std::string& s) { return Rational::from_string(s); });
}

inline SpinElement<double> parse_spin_float(std::string_view text) {
    return detail::parse_spin_text<double>(
        text, [](const std::string& s) { return scalar_from_string_float(s); });
}

template <class S>
SpinElement<double> to_float(const SpinElement<S>& x) {
    SpinElement<double> r;
    if constexpr (is_exact_scalar_v<S>) {
        r.a = x.a.to_double();
        for (const S& c : x.v) r.v.push_back(c.to_double());
    } else {
        r.a = x.a;
        r.v.assign(x.v.begin(), x.v.end());
    }
    return r;
}

}  // namespace jnpoly
