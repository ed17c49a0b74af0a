#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "symmom/quadform.hpp"

using namespace symmom;

TEST_CASE("reduction") {
    CHECK(reduce({1, 2, 2}) == QuadForm{1, 0, 1});
    CHECK(reduce({2, 2, 3}) == QuadForm{2, 2, 3});
    CHECK(reduce({3, 2, 2}) == QuadForm{2, 2, 3});   // swap branch
    CHECK(reduce({2, -2, 3}) == QuadForm{2, 2, 3});  // boundary sign fix
    CHECK(reduce({5, 14, 10}) == QuadForm{1, 0, 1}); // GL2 orbit of x^2+y^2
    CHECK(is_reduced({1, 0, 1}));
    CHECK_FALSE(is_reduced({1, 2, 2}));
    CHECK_THROWS_AS(reduce({1, 0, -1}), NotPositiveDefinite);
    CHECK_THROWS_AS(reduce({-1, 0, 1}), NotPositiveDefinite);
}

TEST_CASE("kronecker symbol") {
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-4, 3) == -1);
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(-20, 3) == 1);
    CHECK(kronecker(-20, 7) == 1);
    CHECK(kronecker(-20, 11) == -1);
    CHECK(kronecker(-3, 2) == -1);
    CHECK(kronecker(-8, 3) == 1);
    CHECK(kronecker(5, 11) == 1);
    CHECK(kronecker(0, 1) == 1);
}

TEST_CASE("fundamental discriminants") {
    for (long D : {-3L, -4L, -7L, -8L, -11L, -15L, -20L, -23L, -24L})
        CHECK(is_fundamental_discriminant(D));
    for (long D : {-12L, -16L, -27L, -9L, -5L, 0L, 5L})
        CHECK_FALSE(is_fundamental_discriminant(D));
}

TEST_CASE("small class groups") {
    ClassGroup g4(-4);
    CHECK(g4.h() == 1);
    CHECK(g4.w() == 4);
    CHECK(g4.principal() == QuadForm{1, 0, 1});

    ClassGroup g3(-3);
    CHECK(g3.h() == 1);
    CHECK(g3.w() == 6);

    ClassGroup g20(-20);
    CHECK(g20.h() == 2);
    CHECK(g20.w() == 2);
    CHECK(g20.forms()[0] == QuadForm{1, 0, 5});
    CHECK(g20.forms()[1] == QuadForm{2, 2, 3});
    CHECK(g20.compose(1, 1) == 0); // order-2 element
    CHECK(g20.cyclic_orders() == std::vector<long>{2});

    ClassGroup g23(-23);
    CHECK(g23.h() == 3);
    CHECK(g23.cyclic_orders() == std::vector<long>{3});
    int x = -1;
    for (int i = 0; i < 3; ++i)
        if (i != 0 && g23.compose(i, i) != 0)
            x = i;
    REQUIRE(x >= 0);
    CHECK(g23.compose(x, g23.compose(x, x)) == 0); // x^3 = e
    CHECK(g23.inverse(x) != x);

    CHECK_THROWS_AS(ClassGroup(5), InvalidDiscriminant);
    CHECK_THROWS_AS(ClassGroup(-21), InvalidDiscriminant); // 3 mod 4
}

TEST_CASE("group laws hold on a composite discriminant") {
    ClassGroup g(-84); // h = 4, Klein four group
    CHECK(g.h() == 4);
    for (int i = 0; i < g.h(); ++i) {
        CHECK(g.compose(0, i) == i);
        CHECK(g.compose(i, g.inverse(i)) == 0);
        for (int j = 0; j < g.h(); ++j)
            CHECK(g.compose(i, j) == g.compose(j, i));
    }
    CHECK(g.cyclic_orders() == std::vector<long>{2, 2});
}

TEST_CASE("representation counts") {
    QuadForm sum_sq{1, 0, 1};
    CHECK(count_representations(sum_sq, 1) == 4);
    CHECK(count_representations(sum_sq, 5) == 8);
    CHECK(count_representations(sum_sq, 3) == 0);
    CHECK(count_representations(sum_sq, 0) == 1);
    QuadForm f15{1, 0, 5};
    CHECK(count_representations(f15, 3) == 0);
    CHECK(count_representations(QuadForm{2, 2, 3}, 3) == 4);

    auto batch = representation_counts(sum_sq, 100);
    REQUIRE(batch.size() == 101u);
    for (long n = 0; n <= 100; ++n)
        CHECK(batch[n] == count_representations(sum_sq, n));
}

TEST_CASE("ideal counting") {
    CHECK(ideal_count(-4, 5) == 2);
    CHECK(ideal_count(-4, 3) == 0);
    CHECK(ideal_count(-4, 9) == 1);
    CHECK(ideal_count(-20, 3) == 2);
    CHECK(ideal_count(-20, 1) == 1);
    // h = 1: w * ideal_count = r(n, principal)
    ClassGroup g4(-4);
    for (long n = 1; n <= 50; ++n)
        CHECK(g4.w() * ideal_count(-4, n) == count_representations(g4.principal(), n));
}

TEST_CASE("character theta series") {
    ClassGroup g4(-4);
    auto triv = theta_coefficients(g4, 0, 20);
    CHECK(triv.values[5].real() == doctest::Approx(2.0));
    CHECK(triv.values[3].real() == doctest::Approx(0.0));

    ClassGroup g20(-20);
    auto gen = theta_coefficients(g20, 1, 20);
    // genus character: a_chi(3) = chi([2,2,3]) r(3)/w = -4/2.
    CHECK(gen.values[3].real() == doctest::Approx(-2.0));
    CHECK(gen.values[7].real() == doctest::Approx(-2.0));
    CHECK(gen.values[1].real() == doctest::Approx(1.0));

    CHECK_THROWS_AS(theta_coefficients(g20, 2, 10), OutOfRange);
    ClassGroup g12(-12);
    CHECK_THROWS_AS(theta_coefficients(g12, 0, 10), NonFundamentalDiscriminant);
}

TEST_CASE("character decomposition reconstructs r(n, Q)") {
    ClassGroup g4(-4);
    CHECK(verify_character_decomposition(g4, g4.principal(), 500) < 1e-9);
    ClassGroup g23(-23);
    for (const auto& f : g23.forms())
        CHECK(verify_character_decomposition(g23, f, 1000) < 1e-9);
    ClassGroup g24(-24);
    CHECK(verify_character_decomposition(g24, g24.forms()[1], 1000) < 1e-9);
}

TEST_CASE("character orthogonality") {
    for (long D : {-23L, -24L, -84L}) {
        ClassGroup g(D);
        const auto& chars = g.characters();
        REQUIRE(static_cast<long>(chars.size()) == g.h());
        for (int x = 0; x < g.h(); ++x)
            for (int y = 0; y < g.h(); ++y) {
                std::complex<double> s = 0.0;
                for (int c = 0; c < g.h(); ++c)
                    s += chars[x][c] * std::conj(chars[y][c]);
                CHECK(std::abs(s - (x == y ? double(g.h()) : 0.0)) < 1e-12);
            }
    }
}
