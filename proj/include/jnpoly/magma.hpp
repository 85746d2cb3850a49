#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "jnpoly/errors.hpp"

namespace jnpoly {

/// Unordered binary product tree over variables: a word in the free
/// commutative magma. Leaves carry 1-based variable indices.
struct MTree;
using MTreePtr = std::shared_ptr<const MTree>;

struct MTree {
    int var = 0;  // valid at leaves
    MTreePtr left, right;

    bool is_leaf() const { return !left; }
};

inline MTreePtr mtree_leaf(int var) {
    if (var < 1) throw InputError("variable indices are 1-based");
    auto n = std::make_shared<MTree>();
    n->var = var;
    return n;
}

inline MTreePtr mtree_node(MTreePtr left, MTreePtr right) {
    auto n = std::make_shared<MTree>();
    n->left = std::move(left);
    n->right = std::move(right);
    return n;
}

namespace detail {

struct CanonInfo {
    MTreePtr tree;
    int leaves = 0;
    int min_var = 0;
    int max_var = 0;
    std::string key;
};

// Total tree order: minimum variable, then leaf count, then serialization.
inline bool canon_less(const CanonInfo& a, const CanonInfo& b) {
    if (a.min_var != b.min_var) return a.min_var < b.min_var;
    if (a.leaves != b.leaves) return a.leaves < b.leaves;
    return a.key < b.key;
}

inline CanonInfo canonicalize_rec(const MTreePtr& t) {
    if (t->is_leaf()) {
        return {t, 1, t->var, t->var, "x" + std::to_string(t->var)};
    }
    CanonInfo l = canonicalize_rec(t->left);
    CanonInfo r = canonicalize_rec(t->right);
    if (canon_less(r, l)) std::swap(l, r);
    CanonInfo out;
    out.leaves = l.leaves + r.leaves;
    out.min_var = std::min(l.min_var, r.min_var);
    out.max_var = std::max(l.max_var, r.max_var);
    out.key.reserve(l.key.size() + r.key.size() + 3);
    out.key = "(" + l.key + "*" + r.key + ")";
    if (l.tree == t->left && r.tree == t->right) {
        out.tree = t;  // already canonical; share
    } else {
        out.tree = mtree_node(l.tree, r.tree);
    }
    return out;
}

inline void collect_vars(const MTreePtr& t, std::vector<int>& out) {
    if (t->is_leaf()) {
        out.push_back(t->var);
        return;
    }
    collect_vars(t->left, out);
    collect_vars(t->right, out);
}

}  // namespace detail

/// A canonical commutative non-associative monomial. Two trees equal modulo
/// commutativity canonicalize to the same Monomial; equality and ordering are
/// structural on the canonical form.
class Monomial {
public:
    explicit Monomial(const MTreePtr& raw) {
        if (!raw) throw InputError("null monomial tree");
        auto info = detail::canonicalize_rec(raw);
        tree_ = std::move(info.tree);
        leaves_ = info.leaves;
        min_var_ = info.min_var;
        max_var_ = info.max_var;
        key_ = std::move(info.key);
    }

    static Monomial variable(int var) { return Monomial(mtree_leaf(var)); }

    /// Canonical product; children are already canonical so only the top pair
    /// gets ordered.
    static Monomial product(const Monomial& a, const Monomial& b) {
        return Monomial(mtree_node(a.tree_, b.tree_));
    }

    const MTreePtr& tree() const { return tree_; }
    int leaf_count() const { return leaves_; }
    int min_var() const { return min_var_; }
    int max_var() const { return max_var_; }

    /// Fully parenthesized canonical form, e.g. "((x1*x2)*x3)".
    const std::string& text() const { return key_; }

    /// Leaf variables with multiplicity, sorted ascending.
    std::vector<int> vars() const {
        std::vector<int> out;
        out.reserve(leaves_);
        detail::collect_vars(tree_, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.key_ == b.key_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.min_var_ != b.min_var_) return a.min_var_ < b.min_var_;
        if (a.leaves_ != b.leaves_) return a.leaves_ < b.leaves_;
        return a.key_ < b.key_;
    }

private:
    MTreePtr tree_;
    int leaves_;
    int min_var_;
    int max_var_;
    std::string key_;
};

inline Monomial canonicalize(const MTreePtr& t) { return Monomial(t); }

/// Enumeration guard; (2m-3)!! grows fast and m = 8 already yields 135135.
inline constexpr int kMaxEnumerationArity = 8;

/// Double factorial count of multilinear monomials on m variables.
inline unsigned long long multilinear_monomial_count(int m) {
    if (m < 1) throw InputError("arity must be positive");
    unsigned long long c = 1;
    for (int k = 2 * m - 3; k > 1; k -= 2) c *= static_cast<unsigned long long>(k);
    return c;
}

/// All canonical multilinear monomials on x_1..x_m, sorted by the tree order.
/// Splits each variable set {S} into unordered pairs by pinning the lowest
/// variable to the left block, so every monomial appears exactly once.
inline std::vector<Monomial> enumerate_monomials(int m) {
    if (m < 1) throw InputError("arity must be positive");
    if (m > kMaxEnumerationArity) {
        throw BoundError("monomial enumeration bound exceeded (m=" + std::to_string(m) +
                         " > " + std::to_string(kMaxEnumerationArity) + ")");
    }
    const unsigned full = (1u << m) - 1;
    std::vector<std::vector<Monomial>> by_mask(full + 1);
    for (int v = 0; v < m; ++v) {
        by_mask[1u << v].push_back(Monomial::variable(v + 1));
    }
    for (unsigned mask = 1; mask <= full; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // singletons done
        const unsigned low = mask & (0u - mask);
        auto& bucket = by_mask[mask];
        // Proper submasks of mask containing the lowest bit.
        for (unsigned sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            const unsigned rest = mask ^ sub;
            for (const Monomial& a : by_mask[sub]) {
                for (const Monomial& b : by_mask[rest]) {
                    bucket.push_back(Monomial::product(a, b));
                }
            }
        }
    }
    std::vector<Monomial> out = std::move(by_mask[full]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jnpoly
