#pragma once

#include <vector>

#include "jnpoly/hermitian.hpp"
#include "jnpoly/polynomial.hpp"
#include "jnpoly/spin.hpp"

namespace jnpoly {

/// Evaluation contexts: the minimal capability set (zero, add, rational
/// scalar-multiple, product) the generic evaluator needs. One evaluator, two
/// models; the isomorphism tests cross-check them.
template <class S>
struct SpinContext {
    using Element = SpinElement<S>;
    int n;

    explicit SpinContext(int n_) : n(n_) {
        if (n < 2) throw InputError("spin factor requires n >= 2");
    }

    Element zero() const { return Element::zero(n); }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const { return scalar_cast<S>(c) * x; }
    Element mul(const Element& x, const Element& y) const { return jordan_mul(x, y); }
    Element basis(int index) const { return Element::basis(n, index); }
};

template <class S>
struct HermContext {
    using Element = Herm2<S>;
    AlgebraLevel level;

    explicit HermContext(AlgebraLevel lv) : level(lv) {}

    Element zero() const { return Element::zero(level); }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const { return scalar_cast<S>(c) * x; }
    Element mul(const Element& x, const Element& y) const { return jordan_mul(x, y); }
    Element basis(int index) const { return basis_element<S>(level, index); }
};

namespace detail {

template <class Ctx>
typename Ctx::Element evaluate_tree(const MTree* t,
                                    const std::vector<typename Ctx::Element>& assignment,
                                    const Ctx& ctx) {
    if (t->is_leaf()) return assignment[t->var - 1];
    return ctx.mul(evaluate_tree(t->left.get(), assignment, ctx),
                   evaluate_tree(t->right.get(), assignment, ctx));
}

}  // namespace detail

/// Evaluates one monomial by structural recursion; assignment[i] binds x_{i+1}.
template <class Ctx>
typename Ctx::Element evaluate(const Monomial& mono,
                               const std::vector<typename Ctx::Element>& assignment,
                               const Ctx& ctx) {
    if (mono.max_var() > static_cast<int>(assignment.size())) {
        throw InputError("assignment does not cover x" + std::to_string(mono.max_var()));
    }
    return detail::evaluate_tree(mono.tree().get(), assignment, ctx);
}

/// Coefficient-weighted sum of the monomial values.
template <class Ctx>
typename Ctx::Element evaluate(const Polynomial& p,
                               const std::vector<typename Ctx::Element>& assignment,
                               const Ctx& ctx) {
    if (p.arity() > static_cast<int>(assignment.size())) {
        throw InputError("assignment covers " + std::to_string(assignment.size()) +
                         " variables but the polynomial uses x" + std::to_string(p.arity()));
    }
    typename Ctx::Element acc = ctx.zero();
    for (const auto& [mono, coeff] : p.terms()) {
        acc = ctx.add(acc, ctx.scale(coeff, detail::evaluate_tree(mono.tree().get(),
                                                                  assignment, ctx)));
    }
    return acc;
}

}  // namespace jnpoly
