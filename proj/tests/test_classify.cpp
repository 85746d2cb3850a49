#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace jnpoly;

TEST_CASE("parity prediction") {
    CHECK(parity_predict({0, 0, 0}) == Parity::Real);
    CHECK(parity_predict({1, 2, 0}) == Parity::Real);
    CHECK(parity_predict({1, 1, 2}) == Parity::Pure);
    CHECK(parity_predict({}) == Parity::Real);
}

TEST_CASE("associator classifies as the pure subspace") {
    for (int n : {3, 4, 6, 10}) {
        const auto report = classify_image(associator_polynomial(), n);
        INFO("n=" << n);
        CHECK(report.image_class == ImageClass::PureSpace);
        CHECK_FALSE(report.real_witness.has_value());
        REQUIRE(report.pure_witness.has_value());
        if (n == 3) {
            CHECK(report.pure_witness->tuple == std::vector<int>{1, 1, 2});
            CHECK(report.pure_witness->value == SpinElement<Rational>::basis(3, 2));
        }
    }
}

TEST_CASE("identity polynomial is full with the least witnesses") {
    const auto report = classify_image(Polynomial::variable(1), 3);
    CHECK(report.image_class == ImageClass::Full);
    REQUIRE(report.real_witness.has_value());
    REQUIRE(report.pure_witness.has_value());
    CHECK(report.real_witness->tuple == std::vector<int>{0});
    CHECK(report.real_witness->value == SpinElement<Rational>::one(3));
    CHECK(report.pure_witness->tuple == std::vector<int>{1});
    CHECK(report.pure_witness->value == SpinElement<Rational>::basis(3, 1));
}

TEST_CASE("x1*x2 is full on J_3") {
    const Polynomial p = Polynomial::variable(1) * Polynomial::variable(2);
    const auto report = classify_image(p, 3);
    CHECK(report.image_class == ImageClass::Full);
    REQUIRE(report.real_witness.has_value());
    REQUIRE(report.pure_witness.has_value());
    CHECK(report.real_witness->tuple == std::vector<int>{0, 0});  // 1 o 1 = 1
    CHECK(report.pure_witness->tuple == std::vector<int>{0, 1});  // 1 o e1 = e1
}

TEST_CASE("central example: product of associators is central") {
    const auto [poly, report] = central_example(3);
    CHECK(poly.arity() == 6);
    CHECK(poly.is_multilinear());
    CHECK(poly.term_count() == 4);
    CHECK(report.image_class == ImageClass::Scalars);
    REQUIRE(report.real_witness.has_value());
    CHECK_FALSE(report.pure_witness.has_value());

    // (e2) o (e2) = 1 at the doubled witness tuple.
    const SpinContext<Rational> ctx(3);
    std::vector<SpinElement<Rational>> assignment;
    for (int idx : {1, 1, 2, 1, 1, 2}) assignment.push_back(ctx.basis(idx));
    CHECK(evaluate(poly, assignment, ctx) == SpinElement<Rational>::one(3));

    CHECK(central_example(4).second.image_class == ImageClass::Scalars);
    CHECK_THROWS_AS(central_example(2), InputError);
}

TEST_CASE("central example at J_10 (parallel exhaustive sweep)") {
    ClassifyOptions opts;
    opts.threads = 2;
    const auto [poly, report] = central_example(10, opts);
    (void)poly;
    CHECK(report.image_class == ImageClass::Scalars);
    CHECK(report.tuples_examined == 1000000);
}

TEST_CASE("nested polynomial identity classifies as zero") {
    for (int n : {2, 3, 4}) {
        const auto [poly, report] = pi_example(n);
        INFO("n=" << n);
        CHECK(poly.arity() == 8);
        CHECK(poly.is_multilinear());
        CHECK(report.image_class == ImageClass::Zero);
        CHECK_FALSE(report.real_witness.has_value());
        CHECK_FALSE(report.pure_witness.has_value());
    }
}

// The n=10 exhaustive variant needs 10^8 tuples; the acceptance gate covers
// n=10 with the sampling oracle instead. Run explicitly with: unit_tests "[.slow]"
TEST_CASE("nested polynomial identity, exhaustive at J_10", "[.slow]") {
    ClassifyOptions opts;
    opts.max_tuples = 200'000'000;
    opts.threads = 0;
    CHECK(pi_example(10, opts).second.image_class == ImageClass::Zero);
}

TEST_CASE("classification at J_2 uses no special case") {
    // J_2 is associative, so the associator vanishes; generic polynomials fill.
    CHECK(classify_image(associator_polynomial(), 2).image_class == ImageClass::Zero);
    CHECK(classify_image(Polynomial::variable(1), 2).image_class == ImageClass::Full);
    CHECK(classify_image(Polynomial::variable(1) * Polynomial::variable(2), 2).image_class ==
          ImageClass::Full);
}

TEST_CASE("non-multilinear input rejected") {
    const Polynomial sq =
        Polynomial::term(Rational(1), Monomial(mtree_node(mtree_leaf(1), mtree_leaf(1))));
    CHECK_THROWS_AS(classify_image(sq, 3), InputError);
    CHECK_THROWS_AS(classify_image(Polynomial::variable(1).with_arity(2), 3), InputError);
    CHECK_THROWS_AS(classify_image(Polynomial::variable(1), 1), InputError);
}

TEST_CASE("tuple cap yields a bound error, not a wrong answer") {
    ClassifyOptions opts;
    opts.max_tuples = 10;  // associator at n=3 needs all 27 to prove PureSpace
    CHECK_THROWS_AS(classify_image(associator_polynomial(), 3, opts), BoundError);

    // A Full polynomial can still finish under the cap via early exit.
    const auto report = classify_image(Polynomial::variable(1) * Polynomial::variable(2), 3, opts);
    CHECK(report.image_class == ImageClass::Full);
    CHECK(report.tuples_examined <= 10);
}

TEST_CASE("labels are invariant under scaling and variable permutation") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 3);
        const int n = 2 + static_cast<int>(rng() % 3);
        const auto max_terms = std::min<unsigned long long>(4, multilinear_monomial_count(m));
        const Polynomial p =
            random_polynomial(m, 1 + static_cast<int>(rng() % max_terms), 5, rng());
        const auto base = classify_image(p, n).image_class;

        const Rational c = Rational(1 + static_cast<int>(rng() % 9),
                                    1 + static_cast<int>(rng() % 4)) *
                           Rational((rng() & 1u) ? 1 : -1);
        CHECK(classify_image(c * p, n).image_class == base);

        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(classify_image(p.relabel(perm), n).image_class == base);
    }
}

TEST_CASE("witnesses re-evaluate to the recorded values") {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int n = 2 + static_cast<int>(rng() % 3);
        const auto max_terms = std::min<unsigned long long>(4, multilinear_monomial_count(m));
        const Polynomial p =
            random_polynomial(m, 1 + static_cast<int>(rng() % max_terms), 5, rng());
        const auto report = classify_image(p, n);
        const SpinContext<Rational> ctx(n);
        for (const auto& wit : {report.real_witness, report.pure_witness}) {
            if (!wit) continue;
            std::vector<SpinElement<Rational>> assignment;
            for (int idx : wit->tuple) assignment.push_back(ctx.basis(idx));
            CHECK(evaluate(p, assignment, ctx) == wit->value);
            CHECK(parity_predict(wit->tuple) == wit->parity);
        }
    }
}

TEST_CASE("parallel enumeration reproduces the sequential report") {
    std::mt19937_64 rng(79);
    std::vector<Polynomial> polys = {associator_polynomial(),
                                     Polynomial::variable(1) * Polynomial::variable(2),
                                     central_example(3).first};
    for (int trial = 0; trial < 10; ++trial) {
        polys.push_back(random_polynomial(3, 1 + static_cast<int>(rng() % 3), 5, rng()));
    }
    for (const Polynomial& p : polys) {
        for (int n : {2, 3, 4}) {
            const auto seq = classify_image(p, n);
            ClassifyOptions par;
            par.threads = 4;
            const auto conc = classify_image(p, n, par);
            CHECK(conc.image_class == seq.image_class);
            CHECK(conc.real_witness.has_value() == seq.real_witness.has_value());
            CHECK(conc.pure_witness.has_value() == seq.pure_witness.has_value());
            if (seq.real_witness) {
                CHECK(conc.real_witness->tuple == seq.real_witness->tuple);
                CHECK(conc.real_witness->value == seq.real_witness->value);
            }
            if (seq.pure_witness) {
                CHECK(conc.pure_witness->tuple == seq.pure_witness->tuple);
                CHECK(conc.pure_witness->value == seq.pure_witness->value);
            }
        }
    }
}

TEST_CASE("exhaustive parity soundness for small arities and dimensions") {
    std::mt19937_64 rng(80);
    std::vector<Polynomial> polys = {Polynomial::variable(1), associator_polynomial(),
                                     Polynomial::variable(1) * Polynomial::variable(2)};
    for (int trial = 0; trial < 5; ++trial) {
        polys.push_back(random_polynomial(4, 1 + static_cast<int>(rng() % 5), 5, rng()));
    }
    for (const Polynomial& p : polys) {
        for (int n = 2; n <= 4; ++n) {
            const SpinContext<Rational> ctx(n);
            const int m = p.arity();
            std::vector<int> tuple(m, 0);
            for (;;) {
                std::vector<SpinElement<Rational>> assignment;
                for (int idx : tuple) assignment.push_back(ctx.basis(idx));
                const auto value = evaluate(p, assignment, ctx);
                if (parity_predict(tuple) == Parity::Pure) {
                    CHECK(value.scalar_part_zero());
                } else {
                    CHECK(value.pure_part_zero());
                }
                int slot = m - 1;
                while (slot >= 0 && ++tuple[slot] == n) tuple[slot--] = 0;
                if (slot < 0) break;
            }
        }
    }
}
