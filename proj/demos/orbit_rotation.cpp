// Builds the Lemma-1 automorphism carrying one pure element to another of the
// same norm, then uses the preimage search to hit a chosen target with x1*x2.

#include <iostream>

#include "jnpoly/jnpoly.hpp"

using namespace jnpoly;

int main() {
    const SpinElement<double> u = parse_spin_float("0 + [5, 0, 0]");
    const SpinElement<double> v = parse_spin_float("0 + [3, 4, 0]");
    const Automorphism phi = automorphism_mapping(u, v);
    std::cout << "phi(" << u.to_text() << ") = " << phi.apply(u).to_text() << "\n";
    std::cout << "orthogonal: " << (phi.is_orthogonal() ? "yes" : "no") << "\n\n";

    const Polynomial p = Polynomial::variable(1) * Polynomial::variable(2);
    const SpinElement<double> target = parse_spin_float("2 + [3, 4]");
    const PreimageResult result = preimage_search(p, 3, target, 42);
    if (!result.success) {
        std::cout << "preimage search failed\n";
        return 1;
    }
    std::cout << "target " << target.to_text() << " reached with residual "
              << result.residual << ":\n";
    for (size_t i = 0; i < result.assignment.size(); ++i) {
        std::cout << "  x" << i + 1 << " = " << result.assignment[i].to_text() << "\n";
    }
    const SpinContext<double> ctx(3);
    std::cout << "re-evaluates to " << evaluate(p, result.assignment, ctx).to_text() << "\n";
    return 0;
}
