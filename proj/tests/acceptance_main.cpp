// Acceptance suite: runs the ten exit criteria and prints one PASS/FAIL line
// per criterion. Exits nonzero if any criterion fails. Pass criterion numbers
// as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "jnpoly/jnpoly.hpp"

using namespace jnpoly;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> run;
};

bool require(bool cond, std::string& detail, const std::string& message) {
    if (!cond && detail.empty()) detail = message;
    return cond;
}

// 1. e_i o e_j = delta_ij * identity in all four Hermitian models, exhaustive.
bool criterion_models(std::string& detail) {
    bool ok = true;
    for (AlgebraLevel lv : kAllLevels) {
        const int n = 2 + dimension(lv);
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                const auto prod = jordan_mul(basis_element<Rational>(lv, i),
                                             basis_element<Rational>(lv, j));
                const auto expected = i == j ? Herm2<Rational>::identity(lv)
                                             : Herm2<Rational>::zero(lv);
                ok &= require(prod == expected, detail,
                              std::string(level_name(lv)) + ": e" + std::to_string(i) + " o e" +
                                  std::to_string(j) + " = " + prod.to_text());
            }
        }
    }
    return ok;
}

// 2. to_spin is a Jordan-algebra isomorphism on 1000 random pairs per model.
bool criterion_isomorphism(std::string& detail) {
    bool ok = true;
    std::mt19937_64 rng(1001);
    for (AlgebraLevel lv : kAllLevels) {
        for (int t = 0; t < 1000; ++t) {
            const auto x = random_herm_rational(rng, lv);
            const auto y = random_herm_rational(rng, lv);
            ok &= require(to_spin(jordan_mul(x, y)) == jordan_mul(to_spin(x), to_spin(y)),
                          detail,
                          std::string(level_name(lv)) + " pair " + std::to_string(t));
            if (!ok) return false;
        }
    }
    return ok;
}

// 3. Commutativity and the Jordan identity, exact, in J_2..J_10 and the models.
bool criterion_axioms(std::string& detail) {
    bool ok = true;
    std::mt19937_64 rng(1002);
    for (int n = 2; n <= 10; ++n) {
        for (int t = 0; t < 1000; ++t) {
            const auto x = random_spin_rational(rng, n);
            const auto y = random_spin_rational(rng, n);
            ok &= require(jordan_mul(x, y) == jordan_mul(y, x), detail,
                          "commutativity in J_" + std::to_string(n));
            const auto xx = jordan_mul(x, x);
            ok &= require(jordan_mul(jordan_mul(x, y), xx) == jordan_mul(x, jordan_mul(y, xx)),
                          detail, "Jordan identity in J_" + std::to_string(n));
            if (!ok) return false;
        }
    }
    for (AlgebraLevel lv : kAllLevels) {
        for (int t = 0; t < 1000; ++t) {
            const auto x = random_herm_rational(rng, lv);
            const auto y = random_herm_rational(rng, lv);
            ok &= require(jordan_mul(x, y) == jordan_mul(y, x), detail,
                          "commutativity in the " + std::string(level_name(lv)) + " model");
            const auto xx = jordan_mul(x, x);
            ok &= require(jordan_mul(jordan_mul(x, y), xx) == jordan_mul(x, jordan_mul(y, xx)),
                          detail,
                          "Jordan identity in the " + std::string(level_name(lv)) + " model");
            if (!ok) return false;
        }
    }
    return ok;
}

// 4. Parity rule, exhaustive over basis tuples for the golden suite, m<=4, n<=4.
bool criterion_parity(std::string& detail) {
    bool ok = true;
    const std::vector<std::pair<std::string, Polynomial>> golden = {
        {"x1", Polynomial::variable(1)},
        {"x1*x2", Polynomial::variable(1) * Polynomial::variable(2)},
        {"associator", associator_polynomial()},
    };
    for (const auto& [name, p] : golden) {
        const int m = p.arity();
        for (int n = 2; n <= 4; ++n) {
            const SpinContext<Rational> ctx(n);
            std::vector<int> tuple(m, 0);
            for (;;) {
                std::vector<SpinElement<Rational>> assignment;
                for (int idx : tuple) assignment.push_back(ctx.basis(idx));
                const auto value = evaluate(p, assignment, ctx);
                const bool pure_pred = parity_predict(tuple) == Parity::Pure;
                ok &= require(pure_pred ? value.scalar_part_zero() : value.pure_part_zero(),
                              detail, name + " violates parity at n=" + std::to_string(n));
                if (!ok) return false;
                int slot = m - 1;
                while (slot >= 0 && ++tuple[slot] == n) tuple[slot--] = 0;
                if (slot < 0) break;
            }
        }
    }
    return ok;
}

// 5. The four golden classifications, exact, under 60 seconds total.
bool criterion_golden_classifications(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n : {3, 4, 6, 10}) {
        ok &= require(classify_image(associator_polynomial(), n).image_class ==
                          ImageClass::PureSpace,
                      detail, "associator not PureSpace at n=" + std::to_string(n));
    }
    ok &= require(central_example(3).second.image_class == ImageClass::Scalars, detail,
                  "central example not Scalars at n=3");
    ok &= require(central_example(4).second.image_class == ImageClass::Scalars, detail,
                  "central example not Scalars at n=4");
    for (int n : {2, 3, 4}) {
        ok &= require(pi_example(n).second.image_class == ImageClass::Zero, detail,
                      "nested identity not Zero at n=" + std::to_string(n));
    }
    const auto pi10 = brute_force_sample(pi_example(2).first, 10, 10000, 1005);
    ok &= require(pi10.empirical == ImageClass::Zero, detail,
                  "nested identity sampled nonzero at n=10");
    ok &= require(classify_image(Polynomial::variable(1), 3).image_class == ImageClass::Full,
                  detail, "identity polynomial not Full");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok &= require(seconds < 60.0, detail,
                  "runtime bound exceeded: " + std::to_string(seconds) + "s");
    std::ostringstream note;
    note.setf(std::ios::fixed);
    note.precision(1);
    note << " (" << seconds << "s)";
    detail += note.str();
    return ok;
}

// 6. Orbit machinery: automorphism_mapping aligns equal-norm pure pairs and
//    preserves the product.
bool criterion_orbits(std::string& detail) {
    bool ok = true;
    std::mt19937_64 rng(1006);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(t % 9);  // J_2..J_10
        const int dim = n - 1;
        PureVector u(dim), w(dim);
        double nu = 0, nw = 0;
        while (nu < 1e-3) {
            for (double& c : u) c = coord(rng);
            nu = norm(u);
        }
        while (nw < 1e-3) {
            for (double& c : w) c = coord(rng);
            nw = norm(w);
        }
        PureVector v = w;
        for (double& c : v) c *= nu / nw;  // ||v|| = ||u||

        const Automorphism phi = automorphism_mapping(u, v);
        PureVector image = phi.apply(u);
        double err = 0;
        for (int i = 0; i < dim; ++i) err += (image[i] - v[i]) * (image[i] - v[i]);
        ok &= require(std::sqrt(err) <= 1e-9, detail,
                      "phi(u) missed v at n=" + std::to_string(n));
        if (!ok) return false;

        for (int pair = 0; pair < 100; ++pair) {
            const auto x = random_spin_double(rng, n);
            const auto y = random_spin_double(rng, n);
            ok &= require(distance(phi.apply(jordan_mul(x, y)),
                                   jordan_mul(phi.apply(x), phi.apply(y))) <= 1e-9,
                          detail, "phi broke the product at n=" + std::to_string(n));
            if (!ok) return false;
        }
    }
    return ok;
}

// 7. 500 random multilinear polynomials: the sampling oracle never contradicts
//    the exact classifier.
bool criterion_oracle(std::string& detail) {
    std::mt19937_64 rng(1007);
    for (int t = 0; t < 500; ++t) {
        const int m = 1 + static_cast<int>(t % 4);
        const int n = 2 + static_cast<int>(t % 3);
        const auto max_terms =
            std::min<unsigned long long>(5, multilinear_monomial_count(m));
        const Polynomial p = random_polynomial(
            m, 1 + static_cast<int>(rng() % max_terms), 5, rng());
        try {
            verify_classification(p, n, 1000, rng());
        } catch (const std::exception& e) {
            detail = "polynomial " + std::to_string(t) + ": " + e.what();
            return false;
        }
    }
    return true;
}

// 8. Preimage search: 100 random targets for x1 and for x1*x2 on J_3,
//    at least 99 successes each, every success within 1e-9.
bool criterion_preimage(std::string& detail) {
    std::mt19937_64 rng(1008);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    const std::vector<std::pair<std::string, Polynomial>> cases = {
        {"x1", Polynomial::variable(1)},
        {"x1*x2", Polynomial::variable(1) * Polynomial::variable(2)},
    };
    const SpinContext<double> ctx(3);
    std::string counts;
    for (const auto& [name, p] : cases) {
        int successes = 0;
        for (int t = 0; t < 100; ++t) {
            SpinElement<double> target = SpinElement<double>::zero(3);
            while (target.is_zero(1e-6)) {
                target.a = coord(rng);
                for (auto& c : target.v) c = coord(rng);
            }
            const PreimageResult result = preimage_search(p, 3, target, rng());
            if (!result.success) continue;
            if (result.residual > 1e-9) {
                detail = name + ": success with residual above tolerance";
                return false;
            }
            if (distance(evaluate(p, result.assignment, ctx), target) > 1e-9) {
                detail = name + ": assignment does not re-evaluate to the target";
                return false;
            }
            ++successes;
        }
        counts += " " + name + "=" + std::to_string(successes) + "/100";
        if (successes < 99) {
            detail = name + ": only " + std::to_string(successes) + "/100 targets reached";
            return false;
        }
    }
    detail += " (" + counts.substr(1) + ")";
    return true;
}

// 9. Monomial counts match the double factorial and the brute-force oracle.
bool criterion_monomials(std::string& detail) {
    const unsigned long long expected[] = {1, 1, 3, 15, 105, 945};

    // Independent oracle: all binary trees over all leaf orders, deduplicated
    // by canonical form.
    std::function<std::vector<MTreePtr>(const std::vector<int>&, size_t, size_t)> trees =
        [&](const std::vector<int>& leaves, size_t lo, size_t hi) {
            std::vector<MTreePtr> out;
            if (hi - lo == 1) {
                out.push_back(mtree_leaf(leaves[lo]));
                return out;
            }
            for (size_t split = lo + 1; split < hi; ++split) {
                for (const auto& l : trees(leaves, lo, split)) {
                    for (const auto& r : trees(leaves, split, hi)) {
                        out.push_back(mtree_node(l, r));
                    }
                }
            }
            return out;
        };

    for (int m = 1; m <= 6; ++m) {
        const auto mine = enumerate_monomials(m);
        if (mine.size() != expected[m - 1] || multilinear_monomial_count(m) != expected[m - 1]) {
            detail = "count mismatch at m=" + std::to_string(m);
            return false;
        }
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 1);
        std::set<std::string> oracle;
        do {
            for (const auto& t : trees(perm, 0, perm.size())) {
                oracle.insert(Monomial(t).text());
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (oracle.size() != mine.size()) {
            detail = "oracle disagrees at m=" + std::to_string(m);
            return false;
        }
        for (const Monomial& mono : mine) {
            if (oracle.count(mono.text()) != 1) {
                detail = "monomial " + mono.text() + " missing from the oracle";
                return false;
            }
        }
    }
    return true;
}

// 10. Parser round trip on 500 random polynomials plus the documented
//     associator source string.
bool criterion_parser(std::string& detail) {
    if (parse_polynomial("((x1*x2)*x3) - (x1*(x2*x3))").poly != associator_polynomial()) {
        detail = "associator source string did not parse to the golden polynomial";
        return false;
    }
    std::mt19937_64 rng(1010);
    for (int t = 0; t < 500; ++t) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const auto max_terms =
            std::min<unsigned long long>(6, multilinear_monomial_count(m));
        const Polynomial p = random_polynomial(
            m, 1 + static_cast<int>(rng() % max_terms), 9, rng());
        if (parse_polynomial(p.render()).poly != p) {
            detail = "round trip failed for " + p.render();
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "models: e_i o e_j = delta_ij * 1 exhaustively in J_3 J_4 J_6 J_10",
         criterion_models},
        {2, "isomorphism: to_spin is a Jordan homomorphism (1000 pairs per model)",
         criterion_isomorphism},
        {3, "axioms: commutativity + Jordan identity in J_2..J_10 and all models",
         criterion_axioms},
        {4, "parity: basic evaluations are real/pure per the parity rule (m<=4, n<=4)",
         criterion_parity},
        {5, "golden classifications: pure / scalars / zero / full",
         criterion_golden_classifications},
        {6, "orbits: automorphism_mapping aligns equal-norm pairs, preserves products",
         criterion_orbits},
        {7, "classifier vs oracle: 500 random polynomials, 1000 trials each",
         criterion_oracle},
        {8, "preimage: 100 random targets each for x1 and x1*x2 on J_3",
         criterion_preimage},
        {9, "monomial counts 1, 1, 3, 15, 105, 945 vs the brute-force oracle",
         criterion_monomials},
        {10, "parser: round trip on 500 random polynomials + golden associator",
         criterion_parser},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    int ran = 0;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && !selected.count(c.number)) continue;
        ++ran;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        std::printf("[%2d] %s  %s%s%s\n", c.number, ok ? "PASS" : "FAIL",
                    c.description.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    std::printf("%d/%d criteria passed\n", ran - failures, ran);
    return failures == 0 ? 0 : 1;
}
