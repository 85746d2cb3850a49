#pragma once

#include <cmath>
#include <vector>

#include "jnpoly/spin.hpp"

namespace jnpoly {

using PureVector = std::vector<double>;

inline double dot(const PureVector& x, const PureVector& y) {
    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

inline double norm(const PureVector& x) { return std::sqrt(dot(x, x)); }

/// Automorphism of J_n: fixes the scalar part, acts on the pure part by an
/// orthogonal matrix (Lemma-1 construction; these are exactly the maps sending
/// one orthonormal frame to another).
class Automorphism {
public:
    Automorphism(int pure_dim, std::vector<double> row_major)
        : dim_(pure_dim), m_(std::move(row_major)) {
        if (static_cast<int>(m_.size()) != dim_ * dim_) {
            throw InputError("automorphism matrix size mismatch");
        }
    }

    static Automorphism identity(int pure_dim) {
        std::vector<double> m(static_cast<size_t>(pure_dim) * pure_dim, 0.0);
        for (int i = 0; i < pure_dim; ++i) m[static_cast<size_t>(i) * pure_dim + i] = 1.0;
        return Automorphism(pure_dim, std::move(m));
    }

    int pure_dim() const { return dim_; }
    double at(int r, int c) const { return m_[static_cast<size_t>(r) * dim_ + c]; }

    PureVector apply(const PureVector& v) const {
        PureVector out(dim_, 0.0);
        for (int r = 0; r < dim_; ++r) {
            double acc = 0.0;
            for (int c = 0; c < dim_; ++c) acc += at(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

    SpinElement<double> apply(const SpinElement<double>& x) const {
        if (x.pure_dim() != dim_) throw InputError("automorphism dimension mismatch");
        PureVector pure(x.v.begin(), x.v.end());
        PureVector image = apply(pure);
        SpinElement<double> r;
        r.a = x.a;
        r.v.assign(image.begin(), image.end());
        return r;
    }

    Automorphism transpose() const {
        std::vector<double> m(m_.size());
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) m[static_cast<size_t>(c) * dim_ + r] = at(r, c);
        }
        return Automorphism(dim_, std::move(m));
    }

    /// this after other.
    Automorphism compose(const Automorphism& other) const {
        if (dim_ != other.dim_) throw InputError("automorphism dimension mismatch");
        std::vector<double> m(m_.size(), 0.0);
        for (int r = 0; r < dim_; ++r) {
            for (int k = 0; k < dim_; ++k) {
                const double a = at(r, k);
                if (a == 0.0) continue;
                for (int c = 0; c < dim_; ++c) {
                    m[static_cast<size_t>(r) * dim_ + c] += a * other.at(k, c);
                }
            }
        }
        return Automorphism(dim_, std::move(m));
    }

    bool is_orthogonal(double tol = ScalarMode::kDefaultTolerance) const {
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) {
                double acc = 0.0;
                for (int k = 0; k < dim_; ++k) acc += at(k, r) * at(k, c);
                if (std::abs(acc - (r == c ? 1.0 : 0.0)) > tol) return false;
            }
        }
        return true;
    }

private:
    int dim_;
    std::vector<double> m_;  // row-major
};

/// Completes a unit pure vector to an orthonormal basis of the pure space by
/// Gram-Schmidt over the standard basis, skipping candidates whose residual
/// drops below the tolerance. Deterministic given w.
inline std::vector<PureVector> frame_complete(const PureVector& w,
                                              double tol = ScalarMode::kDefaultTolerance) {
    const int dim = static_cast<int>(w.size());
    if (dim < 1) throw InputError("empty pure vector");
    if (std::abs(norm(w) - 1.0) > tol) {
        throw InputError("frame_complete requires a unit vector");
    }
    std::vector<PureVector> frame;
    frame.reserve(dim);
    frame.push_back(w);
    for (int cand = 0; cand < dim && static_cast<int>(frame.size()) < dim; ++cand) {
        PureVector r(dim, 0.0);
        r[cand] = 1.0;
        for (const PureVector& b : frame) {
            const double c = dot(b, r);
            for (int i = 0; i < dim; ++i) r[i] -= c * b[i];
        }
        const double len = norm(r);
        if (len <= tol) continue;
        for (int i = 0; i < dim; ++i) r[i] /= len;
        // Second projection pass for numerical orthogonality.
        for (const PureVector& b : frame) {
            const double c = dot(b, r);
            for (int i = 0; i < dim; ++i) r[i] -= c * b[i];
        }
        const double len2 = norm(r);
        for (int i = 0; i < dim; ++i) r[i] /= len2;
        frame.push_back(std::move(r));
    }
    if (static_cast<int>(frame.size()) != dim) {
        throw InvariantFault("frame completion produced too few vectors");
    }
    return frame;
}

/// The automorphism sending e_i to the i-th frame vector.
inline Automorphism build_automorphism(const std::vector<PureVector>& frame,
                                       double tol = ScalarMode::kDefaultTolerance) {
    const int dim = static_cast<int>(frame.size());
    if (dim < 1) throw InputError("empty frame");
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(frame[i].size()) != dim) {
            throw InputError("frame vector dimension mismatch");
        }
        for (int j = i; j < dim; ++j) {
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot(frame[i], frame[j]) - expected) > tol) {
                throw InputError("frame is not orthonormal");
            }
        }
    }
    std::vector<double> m(static_cast<size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) m[static_cast<size_t>(r) * dim + c] = frame[c][r];
    }
    return Automorphism(dim, std::move(m));
}

/// An automorphism taking u to v, for pure vectors of equal nonzero norm.
/// Composes the two frame maps that each reduce to ||.|| e_1.
inline Automorphism automorphism_mapping(const PureVector& u, const PureVector& v,
                                         double tol = ScalarMode::kDefaultTolerance) {
    if (u.size() != v.size()) throw InputError("pure vector dimension mismatch");
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu <= tol || nv <= tol) {
        throw InputError("automorphism_mapping requires nonzero vectors");
    }
    if (std::abs(nu - nv) > tol * std::max(1.0, nu)) {
        throw InputError("automorphism_mapping requires equal norms");
    }
    PureVector un(u), vn(v);
    for (double& c : un) c /= nu;
    for (double& c : vn) c /= nv;
    Automorphism phi_u = build_automorphism(frame_complete(un, tol), 10 * tol);
    Automorphism phi_v = build_automorphism(frame_complete(vn, tol), 10 * tol);
    return phi_v.compose(phi_u.transpose());
}

inline Automorphism automorphism_mapping(const SpinElement<double>& u,
                                         const SpinElement<double>& v,
                                         double tol = ScalarMode::kDefaultTolerance) {
    return automorphism_mapping(PureVector(u.v.begin(), u.v.end()),
                                PureVector(v.v.begin(), v.v.end()), tol);
}

}  // namespace jnpoly
