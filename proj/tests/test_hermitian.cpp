#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace jnpoly;

namespace {

Herm2<Rational> basis(AlgebraLevel lv, int idx) { return basis_element<Rational>(lv, idx); }

}  // namespace

TEST_CASE("basis matrices match the listed models") {
    // (Real, 2) = [[0,1],[1,0]]
    auto e2 = basis(AlgebraLevel::Real, 2);
    CHECK(e2.alpha == Rational(0));
    CHECK(e2.delta == Rational(0));
    CHECK(e2.beta == CDNumber<Rational>::unit(AlgebraLevel::Real, 0));

    // (Complex, 3) has beta = i.
    CHECK(basis(AlgebraLevel::Complex, 3).beta ==
          CDNumber<Rational>::unit(AlgebraLevel::Complex, 1));

    // (Octonion, 9) has beta = kl.
    CHECK(basis(AlgebraLevel::Octonion, 9).beta ==
          CDNumber<Rational>::unit(AlgebraLevel::Octonion, 7));

    CHECK(basis(AlgebraLevel::Real, 1).alpha == Rational(1));
    CHECK(basis(AlgebraLevel::Real, 1).delta == Rational(-1));

    CHECK_THROWS_AS(basis(AlgebraLevel::Real, 3), InputError);
    CHECK_THROWS_AS(basis(AlgebraLevel::Octonion, 10), InputError);
}

TEST_CASE("J_3 golden products") {
    const auto lv = AlgebraLevel::Real;
    CHECK(jordan_mul(basis(lv, 1), basis(lv, 1)) == Herm2<Rational>::identity(lv));
    CHECK(jordan_mul(basis(lv, 2), basis(lv, 2)) == Herm2<Rational>::identity(lv));
    CHECK(jordan_mul(basis(lv, 1), basis(lv, 2)) == Herm2<Rational>::zero(lv));
    CHECK(jordan_mul(basis(lv, 2), basis(lv, 1)) == Herm2<Rational>::zero(lv));
}

TEST_CASE("e6 o e7 vanishes on the octonion model") {
    const auto lv = AlgebraLevel::Octonion;
    CHECK(jordan_mul(basis(lv, 6), basis(lv, 7)) == Herm2<Rational>::zero(lv));
}

TEST_CASE("orthonormal basis in all four models") {
    for (AlgebraLevel lv : kAllLevels) {
        const int n = 2 + dimension(lv);
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                const auto prod = jordan_mul(basis(lv, i), basis(lv, j));
                INFO(level_name(lv) << " e" << i << " o e" << j);
                CHECK(prod == (i == j ? Herm2<Rational>::identity(lv)
                                      : Herm2<Rational>::zero(lv)));
            }
        }
    }
}

TEST_CASE("jordan_mul level mismatch rejected") {
    CHECK_THROWS_AS(jordan_mul(basis(AlgebraLevel::Real, 1), basis(AlgebraLevel::Complex, 1)),
                    InputError);
}

TEST_CASE("to_spin golden coordinates") {
    CHECK(to_spin(Herm2<Rational>::identity(AlgebraLevel::Real)) ==
          SpinElement<Rational>::one(3));
    CHECK(to_spin(basis(AlgebraLevel::Real, 1)) == SpinElement<Rational>::basis(3, 1));

    // [[3, 2i], [-2i, 1]] over C: scalar 2, pure (1, 0, 2).
    Herm2<Rational> x(AlgebraLevel::Complex);
    x.alpha = Rational(3);
    x.delta = Rational(1);
    x.beta = Rational(2) * CDNumber<Rational>::unit(AlgebraLevel::Complex, 1);
    const auto s = to_spin(x);
    CHECK(s.a == Rational(2));
    REQUIRE(s.pure_dim() == 3);
    CHECK(s.v[0] == Rational(1));
    CHECK(s.v[1] == Rational(0));
    CHECK(s.v[2] == Rational(2));
    CHECK(from_spin(s, AlgebraLevel::Complex) == x);
}

TEST_CASE("from_spin golden matrices") {
    CHECK(from_spin(SpinElement<Rational>::one(3), AlgebraLevel::Real) ==
          Herm2<Rational>::identity(AlgebraLevel::Real));

    // (0, (0,1,0)) at the complex level is [[0,1],[1,0]].
    auto s = SpinElement<Rational>::basis(4, 2);
    const auto x = from_spin(s, AlgebraLevel::Complex);
    CHECK(x.alpha == Rational(0));
    CHECK(x.delta == Rational(0));
    CHECK(x.beta == CDNumber<Rational>::unit(AlgebraLevel::Complex, 0));

    CHECK_THROWS_AS(from_spin(SpinElement<Rational>::one(3), AlgebraLevel::Complex), InputError);
}

TEST_CASE("round trip and homomorphism on random elements") {
    std::mt19937_64 rng(42);
    for (AlgebraLevel lv : kAllLevels) {
        const int n = 2 + dimension(lv);
        for (int trial = 0; trial < 100; ++trial) {
            const auto x = random_herm_rational(rng, lv);
            const auto y = random_herm_rational(rng, lv);
            CHECK(from_spin(to_spin(x), lv) == x);
            CHECK(to_spin(jordan_mul(x, y)) == jordan_mul(to_spin(x), to_spin(y)));
            (void)n;
        }
    }
}

TEST_CASE("commutativity and the Jordan identity in all four models") {
    std::mt19937_64 rng(43);
    for (AlgebraLevel lv : kAllLevels) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto x = random_herm_rational(rng, lv);
            const auto y = random_herm_rational(rng, lv);
            CHECK(jordan_mul(x, y) == jordan_mul(y, x));
            const auto xx = jordan_mul(x, x);
            CHECK(jordan_mul(jordan_mul(x, y), xx) == jordan_mul(x, jordan_mul(y, xx)));
        }
    }
}

TEST_CASE("text record") {
    Herm2<Rational> x(AlgebraLevel::Complex);
    x.alpha = Rational(1, 2);
    x.delta = Rational(3);
    x.beta = Rational(2) * CDNumber<Rational>::unit(AlgebraLevel::Complex, 1);
    CHECK(x.to_text() == "level=complex alpha=1/2 delta=3 beta=[0, 2]");
}
