#include <doctest.h>

#include <random>

#include "islands/error.hpp"
#include "islands/intpoly.hpp"

using namespace islands;

TEST_CASE("basic arithmetic") {
    IntPoly a{1, 1};  // 1 + x
    IntPoly b{2, 1};  // 2 + x
    CHECK(a * b + IntPoly{1} == IntPoly{3, 3, 1});
    CHECK((IntPoly{4, 8, 4, 2}).eval(-1) == -2);
    CHECK(IntPoly::one_plus_x_pow(5).scaled(7).eval(-1) == 0);
    CHECK(IntPoly{}.eval(3) == 0);
    CHECK(IntPoly{3}.degree() == 0);
    CHECK(IntPoly{}.degree() == -1);
    CHECK((IntPoly{0, 0, 0}).is_zero());
    CHECK(IntPoly{1, 2}.shifted(2) == IntPoly{0, 0, 1, 2});
}

TEST_CASE("ring axioms on random small polynomials") {
    std::mt19937_64 rng(101);
    auto random_poly = [&] {
        std::uniform_int_distribution<int> deg(0, 5), coef(-9, 9);
        std::vector<mpz_class> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        return IntPoly(std::move(c));
    };
    for (int it = 0; it < 200; ++it) {
        IntPoly p = random_poly(), q = random_poly(), r = random_poly();
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == IntPoly{});
        mpz_class x = std::uniform_int_distribution<int>(-4, 4)(rng);
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    }
}

TEST_CASE("shifted basis decomposition") {
    SUBCASE("worked examples") {
        IntPoly p = IntPoly::one_plus_x_pow(2) + IntPoly::one_plus_x_pow(1).scaled(2);
        auto a = shifted_basis_decompose(p, 3);
        CHECK(a == std::vector<mpz_class>{0, 2, 1});

        auto b = shifted_basis_decompose(IntPoly{2, 1}, 2);
        CHECK(b == std::vector<mpz_class>{1, 1});

        auto z = shifted_basis_decompose(IntPoly{}, 4);
        CHECK(z == std::vector<mpz_class>(4, mpz_class(0)));
    }
    SUBCASE("degree guard") {
        CHECK_THROWS_AS(shifted_basis_decompose(IntPoly{0, 0, 0, 1}, 3), Error);
    }
    SUBCASE("decompose then recompose is the identity, exhaustively to degree 11") {
        std::mt19937_64 rng(77);
        std::uniform_int_distribution<int> coef(-6, 6);
        for (int deg = 0; deg < 12; ++deg) {
            for (int it = 0; it < 40; ++it) {
                std::vector<mpz_class> c(static_cast<size_t>(deg) + 1);
                for (auto& x : c) x = coef(rng);
                IntPoly p(std::move(c));
                auto a = shifted_basis_decompose(p, 12);
                CHECK(shifted_basis_recompose(a) == p);
            }
        }
    }
}

TEST_CASE("text rendering") {
    CHECK(IntPoly{5, 15, 15, 5, 2}.str() == "5 + 15 x + 15 x^2 + 5 x^3 + 2 x^4");
    CHECK(IntPoly{}.str() == "0");
    CHECK(IntPoly{0, 1}.str() == "x");
    CHECK(IntPoly{4, 9, 6, 1}.str() == "4 + 9 x + 6 x^2 + x^3");
    CHECK(IntPoly{-1, 0, 3}.str() == "-1 + 3 x^2");
    CHECK(IntPoly{2, -5}.str() == "2 - 5 x");
}
