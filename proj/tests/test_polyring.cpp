#include <doctest.h>

#include "stepcert/polyring.hpp"
#include "test_util.hpp"

using namespace stepcert;
using testutil::random_poly;

TEST_CASE("multiplication examples") {
    {
        FieldCtx F(2);
        const DensePoly xp1(F, {1, 1});
        CHECK((xp1 * xp1) == DensePoly(F, {1, 0, 1}));  // freshman's dream
    }
    {
        FieldCtx F(7);
        const DensePoly f(F, {6, 1});
        CHECK((f * DensePoly(F)).is_zero());
    }
    {
        FieldCtx F(5);
        const DensePoly a(F, {1, 2}), b(F, {4, 3});
        CHECK((a * b) == DensePoly(F, {4, 1, 1}));  // 6x^2+11x+4 mod 5
    }
}

TEST_CASE("karatsuba path agrees with schoolbook") {
    Rng rng(7);
    FieldCtx F(7919);
    for (int trial = 0; trial < 20; ++trial) {
        const DensePoly a = testutil::random_poly_exact(rng, F, 150 + rng.below(200));
        const DensePoly b = testutil::random_poly_exact(rng, F, 150 + rng.below(200));
        const DensePoly prod = a * b;
        // quadratic reference on the coefficient level
        std::vector<Elem> ref(a.coeffs().size() + b.coeffs().size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i)
            for (std::size_t j = 0; j < b.coeffs().size(); ++j)
                ref[i + j] = F.add(ref[i + j], F.mul(a.coeff(i), b.coeff(j)));
        CHECK(prod == DensePoly(F, std::move(ref)));
    }
}

TEST_CASE("divrem examples") {
    {
        FieldCtx F(7);
        auto [q, r] = poly_divrem(DensePoly(F, {6, 0, 1}), DensePoly(F, {6, 1}));
        CHECK(q == DensePoly(F, {1, 1}));
        CHECK(r.is_zero());
    }
    {
        FieldCtx F(7);
        auto [q, r] = poly_divrem(DensePoly(F, {0, 1}), DensePoly(F, {0, 0, 1}));
        CHECK(q.is_zero());
        CHECK(r == DensePoly(F, {0, 1}));
    }
    {
        // (x^3+2x+1) / (x+3) over F_5; synthetic division at -3 = 2 gives
        // q = x^2+2x+1, r = 3, and the round-trip identity confirms it.
        FieldCtx F(5);
        const DensePoly a(F, {1, 2, 0, 1}), b(F, {3, 1});
        auto [q, r] = poly_divrem(a, b);
        CHECK(q == DensePoly(F, {1, 2, 1}));
        CHECK(r == DensePoly(F, {3}));
        CHECK(q * b + r == a);
    }
    CHECK_THROWS_AS(poly_divrem(DensePoly(FieldCtx(7), {1}), DensePoly(FieldCtx(7))),
                    DivisionByZeroPoly);
}

TEST_CASE("gcd examples") {
    {
        FieldCtx F(7);
        CHECK(poly_gcd(DensePoly(F, {6, 0, 1}), DensePoly(F, {6, 1})) == DensePoly(F, {6, 1}));
    }
    {
        FieldCtx F(7);
        CHECK(poly_gcd(DensePoly(F, {0, 1}), DensePoly(F, {1, 1})) == DensePoly(F, {1}));
    }
    {
        FieldCtx F(11);
        const DensePoly x1 = DensePoly::linear_root(F, 1);
        const DensePoly a = x1 * x1 * DensePoly::linear_root(F, 2);
        const DensePoly b = x1 * DensePoly::linear_root(F, 3);
        CHECK(poly_gcd(a, b) == x1);
        CHECK(x1 == DensePoly(F, {10, 1}));
    }
    CHECK_THROWS_AS(poly_gcd(DensePoly(FieldCtx(7)), DensePoly(FieldCtx(7))), BothZero);
}

TEST_CASE("formal derivative") {
    CHECK(DensePoly(FieldCtx(3), {0, 0, 0, 1}).derivative().is_zero());  // d/dx x^3, char 3
    CHECK(DensePoly(FieldCtx(7), {5}).derivative().is_zero());
    CHECK(DensePoly(FieldCtx(7), {1, 3, 1}).derivative() == DensePoly(FieldCtx(7), {3, 2}));
}

TEST_CASE("multiplicity_at") {
    FieldCtx F(31);
    const DensePoly f = DensePoly::linear_root(F, 2).pow(3) * DensePoly::linear_root(F, 1);
    CHECK(multiplicity_at(f, 2) == 3);
    CHECK(multiplicity_at(f, 5) == 0);
    {
        FieldCtx F5(5);
        const DensePoly xp_minus_x(F5, {0, 4, 0, 0, 0, 1});  // x^5 - x
        CHECK(multiplicity_at(xp_minus_x, 3) == 1);
        for (Elem a = 0; a < 5; ++a) CHECK(multiplicity_at(xp_minus_x, a) == 1);
    }
    CHECK_THROWS_AS(multiplicity_at(DensePoly(F), 0), ZeroPolynomial);
}

TEST_CASE("multiplicity is additive over products") {
    Rng rng(11);
    FieldCtx F(97);
    for (int trial = 0; trial < 200; ++trial) {
        DensePoly a = random_poly(rng, F, 6), b = random_poly(rng, F, 6);
        if (a.is_zero() || b.is_zero()) continue;
        const Elem x0 = rng.below(97);
        CHECK(multiplicity_at(a * b, x0) == multiplicity_at(a, x0) + multiplicity_at(b, x0));
    }
}

TEST_CASE("text form round-trips bit-exactly") {
    FieldCtx F(31);
    CHECK(DensePoly::from_text(F, "1,0,1").to_text() == "1,0,1");
    CHECK(DensePoly::from_text(F, "0").to_text() == "0");
    CHECK(DensePoly::from_text(F, "0").is_zero());
    CHECK(DensePoly::from_text(F, "62,1").to_text() == "0,1");  // reduced mod p
    CHECK_THROWS(DensePoly::from_text(F, "1,,2"));

    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const DensePoly f = random_poly(rng, F, 8);
        CHECK(DensePoly::from_text(F, f.to_text()) == f);
    }
}

TEST_CASE("ring laws on random triples") {
    Rng rng(17);
    int cases = 0;
    for (u64 p : {2ull, 5ull, 97ull, 7919ull}) {
        FieldCtx F(p);
        for (int trial = 0; trial < 250; ++trial, ++cases) {
            const DensePoly a = random_poly(rng, F, 7);
            const DensePoly b = random_poly(rng, F, 7);
            const DensePoly c = random_poly(rng, F, 7);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK((a - b) + b == a);
        }
    }
    CHECK(cases == 1000);
}

TEST_CASE("divrem round-trip on random pairs") {
    Rng rng(19);
    int cases = 0;
    while (cases < 1000) {
        const u64 p = (cases % 2) ? 97 : 7919;
        FieldCtx F(p);
        const DensePoly a = random_poly(rng, F, 12);
        const DensePoly b = random_poly(rng, F, 6);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        ++cases;
    }
}

TEST_CASE("derivative is linear and satisfies Leibniz") {
    Rng rng(23);
    FieldCtx F(97);
    for (int trial = 0; trial < 200; ++trial) {
        const DensePoly a = random_poly(rng, F, 8);
        const DensePoly b = random_poly(rng, F, 8);
        const Elem k = rng.below(97);
        CHECK((a + b).derivative() == a.derivative() + b.derivative());
        CHECK(a.scaled(k).derivative() == a.derivative().scaled(k));
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("mixed moduli rejected") {
    const DensePoly a(FieldCtx(5), {1});
    const DensePoly b(FieldCtx(7), {1});
    CHECK_THROWS_AS((void)(a * b), ModulusMismatch);
    CHECK_THROWS_AS((void)(a + b), ModulusMismatch);
}

TEST_CASE("pow and eval") {
    FieldCtx F(31);
    const DensePoly f = DensePoly::linear_root(F, 1);
    CHECK(f.pow(0) == DensePoly(F, {1}));
    CHECK(f.pow(5).degree() == 5);
    CHECK(f.pow(5).eval(1) == 0);
    CHECK(f.pow(5).eval(2) == 1);
    CHECK(DensePoly(F, {1, 2, 3}).eval(5) == (1 + 2 * 5 + 3 * 25) % 31);
}
