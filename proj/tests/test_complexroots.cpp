#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stepcert/complexroots.hpp"

using namespace stepcert;

namespace {

bool contains_root(const std::vector<Complex>& roots, Complex target, double tol = 1e-7) {
    for (const Complex& r : roots)
        if (std::abs(r - target) <= tol) return true;
    return false;
}

}  // namespace

TEST_CASE("complex_roots known root sets") {
    {
        const auto roots = complex_roots({Complex(1), Complex(0), Complex(1)});  // x^2+1
        REQUIRE(roots.size() == 2);
        CHECK(contains_root(roots, Complex(0, 1), 1e-8));
        CHECK(contains_root(roots, Complex(0, -1), 1e-8));
    }
    {
        const auto roots =
            complex_roots({Complex(-1), Complex(0), Complex(0), Complex(0), Complex(1)});
        REQUIRE(roots.size() == 4);  // 4th roots of unity
        for (int k = 0; k < 4; ++k)
            CHECK(contains_root(roots, std::polar(1.0, k * std::numbers::pi / 2), 1e-8));
    }
    {
        // (x-1)^8 - 1: roots are 1 + zeta over the 8th roots of unity
        std::vector<Complex> coeffs(9, 0.0);
        // binomial expansion of (x-1)^8
        double binom = 1;
        for (int k = 0; k <= 8; ++k) {
            coeffs[8 - k] = ((k % 2) ? -1.0 : 1.0) * binom;
            binom = binom * (8 - k) / (k + 1);
        }
        coeffs[0] -= 1.0;
        const auto roots = complex_roots(coeffs);
        REQUIRE(roots.size() == 8);
        for (int k = 0; k < 8; ++k)
            CHECK(contains_root(roots, 1.0 + std::polar(1.0, k * std::numbers::pi / 4), 1e-7));
    }
}

TEST_CASE("complex_roots guards and zero roots") {
    CHECK_THROWS(complex_roots({Complex(1)}));                    // degree 0
    CHECK_THROWS(complex_roots({Complex(1), Complex(0)}));       // zero leading coeff
    const auto roots = complex_roots({Complex(0), Complex(0), Complex(1)});  // x^2
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0]) == 0.0);
    CHECK(std::abs(roots[1]) == 0.0);
}

TEST_CASE("enumerate_M_complex geometry") {
    {
        // unit circles around 0.5 and 4.5 are disjoint: no admissible points
        const auto M = enumerate_M_complex({{-0.5, 1.0}, {-4.5, 1.0}}, 8,
                                           {Complex(1), Complex(1)});
        CHECK(M.empty());
    }
    {
        // duplicate constraint: all t-th roots of unity survive
        const auto M = enumerate_M_complex({{0.0, 1.0}, {0.0, 1.0}}, 4,
                                           {Complex(1), Complex(1)});
        CHECK(M.size() == 4);
        for (const Complex& z : M) CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
    }
    {
        // two unit circles at distance 0.5: at most two intersection points
        const auto M = enumerate_M_complex({{-3.0, 1.0}, {-3.5, 1.0}}, 12,
                                           {Complex(1), Complex(1)});
        CHECK(M.size() <= 2);
        for (const Complex& z : M) {
            CHECK(std::abs(std::abs(z - Complex(3.0)) - 1.0) <= 1e-6);
            CHECK(std::abs(std::abs(z - Complex(3.5)) - 1.0) <= 1e-6);
        }
    }
}

TEST_CASE("verify_theorem3_instance") {
    {
        const auto rep =
            verify_theorem3_instance({{-3.0, 1.0}, {-3.5, 1.0}}, 20, {Complex(1), Complex(1)});
        CHECK_FALSE(rep.skipped);
        CHECK(rep.c1 == 16);
        CHECK(rep.M_size <= 2);
        CHECK(rep.bound_ok);  // |M|^4 <= 331776 * 20^3
        CHECK(rep.max_residual <= kAcceptTol);
    }
    {
        const auto rep =
            verify_theorem3_instance({{-3.0, 1.0}, {-3.5, 1.0}}, 8, {Complex(1), Complex(1)});
        CHECK(rep.skipped);  // 8 <= c1 = 16
    }
    {
        // empty M passes trivially
        const auto rep =
            verify_theorem3_instance({{-0.5, 1.0}, {-7.5, 1.0}}, 20, {Complex(1), Complex(1)});
        CHECK_FALSE(rep.skipped);
        CHECK(rep.M_size == 0);
        CHECK(rep.bound_ok);
    }
}
