#pragma once

#include <map>
#include <random>
#include <numeric>

#include "jnpoly/magma.hpp"
#include "jnpoly/rational.hpp"

namespace jnpoly {

/// Rational linear combination of canonical monomials. Terms are stored
/// canonicalized and merged, so equality of polynomials is structural.
/// The declared arity m is the variable count the polynomial is read over;
/// it defaults to the largest variable index mentioned.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial variable(int index) {
        Polynomial p;
        p.add_term(Rational(1), Monomial::variable(index));
        return p;
    }

    static Polynomial term(const Rational& coeff, const Monomial& mono) {
        Polynomial p;
        p.add_term(coeff, mono);
        return p;
    }

    void add_term(const Rational& coeff, const Monomial& mono) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
        arity_ = std::max(arity_, mono.max_var());
    }

    /// Overrides the declared arity (may only widen past the max index used).
    Polynomial with_arity(int m) const {
        if (m < arity_) {
            throw InputError("declared arity " + std::to_string(m) +
                             " is below the largest variable index " + std::to_string(arity_));
        }
        Polynomial p = *this;
        p.arity_ = m;
        return p;
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [mono, c] : b.terms_) r.add_term(c, mono);
        r.arity_ = std::max(a.arity_, b.arity_);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [mono, c] : b.terms_) r.add_term(-c, mono);
        r.arity_ = std::max(a.arity_, b.arity_);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r;
        r.arity_ = p.arity_;
        if (c.is_zero()) return r;
        for (const auto& [mono, k] : p.terms_) r.terms_.emplace(mono, c * k);
        return r;
    }

    /// The magma product lifted to polynomials: all pairwise monomial products.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                r.add_term(ca * cb, Monomial::product(ma, mb));
            }
        }
        r.arity_ = std::max({r.arity_, a.arity_, b.arity_});
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// True iff every monomial uses each of x_1..x_m exactly once.
    bool is_multilinear() const {
        if (terms_.empty() || arity_ == 0) return false;
        for (const auto& [mono, c] : terms_) {
            (void)c;
            const std::vector<int> vars = mono.vars();
            if (static_cast<int>(vars.size()) != arity_) return false;
            for (int i = 0; i < arity_; ++i) {
                if (vars[i] != i + 1) return false;
            }
        }
        return true;
    }

    /// Canonical text: signed rational-coefficient sum over ordered monomials,
    /// e.g. "1*((x1*x2)*x3) - 1*(x1*(x2*x3))".
    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [mono, c] : terms_) {
            Rational mag = c;
            if (first) {
                if (c.is_negative()) {
                    out += "-";
                    mag = -c;
                }
                first = false;
            } else {
                out += c.is_negative() ? " - " : " + ";
                if (c.is_negative()) mag = -c;
            }
            out += mag.to_string();
            out += "*";
            out += mono.text();
        }
        return out;
    }

    /// Variable relabeling x_i -> x_{perm[i-1]}.
    Polynomial relabel(const std::vector<int>& perm) const {
        Polynomial r;
        for (const auto& [mono, c] : terms_) {
            r.add_term(c, Monomial(relabel_tree(mono.tree(), perm)));
        }
        return r;
    }

private:
    static MTreePtr relabel_tree(const MTreePtr& t, const std::vector<int>& perm) {
        if (t->is_leaf()) {
            if (t->var > static_cast<int>(perm.size())) {
                throw InputError("relabel permutation too short");
            }
            return mtree_leaf(perm[t->var - 1]);
        }
        return mtree_node(relabel_tree(t->left, perm), relabel_tree(t->right, perm));
    }

    int arity_ = 0;
    TermMap terms_;
};

/// The associator (x y) z - x (y z) on the given variable indices.
inline Polynomial associator_polynomial(int v1 = 1, int v2 = 2, int v3 = 3) {
    const Polynomial x = Polynomial::variable(v1);
    const Polynomial y = Polynomial::variable(v2);
    const Polynomial z = Polynomial::variable(v3);
    return (x * y) * z - x * (y * z);
}

/// Seed-deterministic multilinear polynomial: term_count distinct monomials on
/// x_1..x_m with nonzero rational coefficients bounded by coeff_bound.
inline Polynomial random_polynomial(int m, int term_count, int coeff_bound, std::uint64_t seed) {
    if (coeff_bound < 1) throw InputError("coefficient bound must be positive");
    std::vector<Monomial> all = enumerate_monomials(m);
    if (term_count < 1 || static_cast<size_t>(term_count) > all.size()) {
        throw InputError("term count " + std::to_string(term_count) +
                         " infeasible for arity " + std::to_string(m) + " (max " +
                         std::to_string(all.size()) + ")");
    }
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first term_count slots become the sample.
    std::vector<size_t> idx(all.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    Polynomial p;
    std::uniform_int_distribution<int> num_dist(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> den_dist(1, coeff_bound);
    for (int t = 0; t < term_count; ++t) {
        std::uniform_int_distribution<size_t> pick(t, idx.size() - 1);
        std::swap(idx[t], idx[pick(rng)]);
        int num = 0;
        while (num == 0) num = num_dist(rng);
        p.add_term(Rational(num, den_dist(rng)), all[idx[t]]);
    }
    return p.with_arity(m);
}

}  // namespace jnpoly
