#include <doctest.h>

#include <algorithm>

#include "stepcert/oracle.hpp"
#include "stepcert/stepanov.hpp"
#include "test_util.hpp"

using namespace stepcert;

namespace {

PolySystem linear_system(const FieldCtx& F, Elem r1, Elem r2) {
    return PolySystem(F, {DensePoly::linear_root(F, r1), DensePoly::linear_root(F, r2)});
}

}  // namespace

TEST_CASE("PolySystem normalizes degree order stably") {
    FieldCtx F(31);
    const DensePoly cubic(F, {1, 0, 0, 1});
    const DensePoly lin(F, {30, 1});
    PolySystem sys(F, {cubic, lin});
    CHECK(sys.degrees() == std::vector<u64>{1, 3});
    CHECK(sys.source_index() == std::vector<std::size_t>{1, 0});
    CHECK(sys.degree_prefix(0) == 0);
    CHECK(sys.degree_prefix(2) == 4);
    CHECK(sys.normalize_order<int>({7, 9}) == std::vector<int>{9, 7});
    CHECK_THROWS(PolySystem(F, {lin}));                          // n >= 2
    CHECK_THROWS(PolySystem(F, {lin, DensePoly(F, {5})}));       // constants rejected
}

TEST_CASE("check_admissible examples") {
    FieldCtx F(31);
    {
        const auto rep = check_admissible(linear_system(F, 1, 2));
        CHECK(rep.admissible);
    }
    {
        PolySystem sys(F, {DensePoly(F, {0, 1}), DensePoly::linear_root(F, 1)});
        const auto rep = check_admissible(sys);
        CHECK_FALSE(rep.admissible);
        CHECK_FALSE(rep.nonzero_at_zero[0]);  // f_1(0) = 0
        CHECK(rep.nonzero_at_zero[1]);
    }
    {
        const DensePoly f1 = DensePoly::linear_root(F, 1);
        const DensePoly f2 = f1 * DensePoly::linear_root(F, 2);
        PolySystem sys(F, {f1, f2});
        const auto rep = check_admissible(sys);
        CHECK_FALSE(rep.admissible);
        CHECK_FALSE(rep.has_private_root[0]);  // the only root of f_1 is shared
        CHECK(rep.has_private_root[1]);
    }
    {
        // x^2+1 is irreducible mod 31 (-1 is a quadratic non-residue), hence private
        PolySystem sys(F, {DensePoly(F, {1, 0, 1}), DensePoly::linear_root(F, 3)});
        const auto rep = check_admissible(sys);
        CHECK(rep.admissible);
        CHECK(rep.private_factor[0] == DensePoly(F, {1, 0, 1}));
    }
}

TEST_CASE("gcd-peeling agrees with an irreducible-factor oracle") {
    // Oracle: factor both polynomials over F_p by trial division with all monic
    // irreducibles up to their degree; "private" means some irreducible factor
    // of f does not divide g.
    for (u64 p : {5ull, 7ull}) {
        FieldCtx F(p);

        // enumerate monic irreducibles of degree <= 4 by sieving
        std::vector<DensePoly> monic[5];
        for (u64 d = 1; d <= 4; ++d) {
            u64 count = 1;
            for (u64 i = 0; i < d; ++i) count *= p;
            for (u64 code = 0; code < count; ++code) {
                std::vector<Elem> coeffs(d + 1, 0);
                u64 c = code;
                for (u64 i = 0; i < d; ++i) {
                    coeffs[i] = c % p;
                    c /= p;
                }
                coeffs[d] = 1;
                monic[d].emplace_back(F, std::move(coeffs));
            }
        }
        std::vector<DensePoly> irreducibles;
        for (u64 d = 1; d <= 4; ++d) {
            for (const DensePoly& f : monic[d]) {
                bool irred = true;
                for (u64 e = 1; irred && 2 * e <= d; ++e)
                    for (const DensePoly& g : monic[e]) {
                        if (poly_divrem(f, g).second.is_zero()) {
                            irred = false;
                            break;
                        }
                    }
                if (irred) irreducibles.push_back(f);
            }
        }

        const auto oracle_private = [&](const DensePoly& f, const DensePoly& g) {
            for (const DensePoly& q : irreducibles) {
                if (q.degree() > f.degree()) break;
                if (poly_divrem(f, q).second.is_zero() &&
                    !poly_divrem(g, q).second.is_zero())
                    return true;
            }
            return false;
        };
        const auto peel_private = [&](const DensePoly& f, const DensePoly& g) {
            DensePoly h = f;
            while (true) {
                DensePoly d = poly_gcd(h, g);
                if (d.degree() < 1) break;
                h = poly_divrem(h, d).first;
            }
            return h.degree() >= 1;
        };

        Rng rng(41 + p);
        int checked = 0;
        while (checked < 4000) {
            const DensePoly f = testutil::random_poly_exact(rng, F, 1 + rng.below(4));
            const DensePoly g = testutil::random_poly_exact(rng, F, 1 + rng.below(4));
            CHECK(peel_private(f, g) == oracle_private(f, g));
            ++checked;
        }
    }
}

TEST_CASE("compute_params examples") {
    {
        FieldCtx F(1021);
        PolySystem sys(F, {DensePoly(F, {1, 0, 1}), DensePoly(F, {1, 0, 0, 1})});  // m = (2,3)
        const StepanovParams params = compute_params(sys, 10000);
        CHECK(params.B == std::vector<u64>{12, 8});
        CHECK(params.A == 96);
        CHECK(params.D == 19);
    }
    {
        FieldCtx F(1021);
        const StepanovParams params = compute_params(linear_system(F, 1, 2), 20);
        CHECK(params.B == std::vector<u64>{2, 2});
        CHECK(params.A == 4);
        CHECK(params.D == 2);
        CHECK(params.cond_var_ok);  // 8 + 4 < 16
        CHECK(params.construction_ok());
    }
    {
        FieldCtx F(1021);
        PolySystem sys(F, {DensePoly(F, {1, 0, 0, 0, 0, 1}), DensePoly(F, {2, 0, 0, 0, 0, 1})});
        CHECK_THROWS_AS(compute_params(sys, 20), DegenerateParams);  // m = (5,5)
    }
    {
        FieldCtx F(1021);
        PolySystem sys(F, {DensePoly(F, {1, 1}), DensePoly(F, {2, 0, 0, 0, 0, 1})});
        CHECK_THROWS_AS(compute_params(sys, 2), DegenerateParams);  // B_2 = 0
    }
    {
        FieldCtx F(1021);
        CHECK_THROWS(compute_params(linear_system(F, 1, 2), 1));  // pre: t >= 2
    }
}

TEST_CASE("pk_recurrence single-factor cases") {
    FieldCtx F(97);
    const u64 t = 11;
    const Elem c = 5;
    const std::vector<DensePoly> fs{DensePoly::linear_root(F, c)};
    {
        const auto seq = pk_recurrence(F, fs, 0, {1}, t, 1);
        CHECK(seq[0] == DensePoly(F, {1}));
        CHECK(seq[1] == DensePoly(F, {t}));  // f * d/dx f^t = t f^t
    }
    {
        const auto seq = pk_recurrence(F, fs, 1, {1}, t, 1);
        CHECK(seq[1] == DensePoly(F, {F.neg(c), t + 1}));  // (1+t)x - c
    }
}

TEST_CASE("pk_recurrence matches direct expansion") {
    // identity (f1 f2)^k d^k/dx^k (x^a f1^(b1 t) f2^(b2 t))
    //        = f1^(b1 t) f2^(b2 t) P_k, checked by brute-force expansion
    Rng rng(43);
    for (u64 p : {31ull, 97ull}) {
        FieldCtx F(p);
        for (int trial = 0; trial < 25; ++trial) {
            const DensePoly f1 = testutil::random_poly_exact(rng, F, 1 + rng.below(3));
            const DensePoly f2 = testutil::random_poly_exact(rng, F, 1 + rng.below(3));
            const u64 a = rng.below(5);
            const std::vector<u64> b{rng.below(3), rng.below(3)};
            const u64 t = 2 + rng.below(8);
            const u64 k_max = 1 + rng.below(3);

            const auto seq = pk_recurrence(F, {f1, f2}, a, b, t, k_max);
            const DensePoly big = DensePoly::monomial(F, 1, a) * f1.pow(b[0] * t) *
                                  f2.pow(b[1] * t);
            const DensePoly prod = f1 * f2;
            const DensePoly powpart = f1.pow(b[0] * t) * f2.pow(b[1] * t);

            for (u64 k = 0; k <= k_max; ++k) {
                CHECK(prod.pow(k) * big.derivative(k) == powpart * seq[k]);
                const u64 M_n = (u64)(f1.degree() + f2.degree());
                if (!seq[k].is_zero())
                    CHECK((u64)seq[k].degree() <= a + (M_n - 1) * k);  // degree law
            }
        }
    }
}

TEST_CASE("lambda_column layout: a fastest") {
    StepanovParams params;
    params.A = 4;
    params.B = {2, 3};
    CHECK(lambda_column(params, 0, {0, 0}) == 0);
    CHECK(lambda_column(params, 3, {0, 0}) == 3);
    CHECK(lambda_column(params, 0, {1, 0}) == 4);
    CHECK(lambda_column(params, 0, {0, 1}) == 8);
    CHECK(lambda_column(params, 3, {1, 2}) == 3 + 4 * (1 + 2 * 2));
}

TEST_CASE("build_linear_system shape") {
    FieldCtx F(1021);
    PolySystem sys = linear_system(F, 1, 2);
    const StepanovParams params = compute_params(sys, 20);
    SubgroupSpec gamma(F, 20);
    std::vector<CosetSpec> cosets{CosetSpec(gamma, 1), CosetSpec(gamma, 1)};
    const LinearSystem system = build_linear_system(sys, params, cosets);
    CHECK(system.cols == 16);  // A * B1 * B2
    CHECK(system.rows <= 12);  // sum over k < D of A + (M_n - 1)k
    CHECK(system.rows == 9);   // 4 + 5
}

TEST_CASE("identity representatives drop the coset factors") {
    FieldCtx F(1021);
    PolySystem sys = linear_system(F, 1, 2);
    const StepanovParams params = compute_params(sys, 20);
    SubgroupSpec gamma(F, 20);

    // gamma_b = prod g_i^(b_i t); with g = 1 each row entry is the bare
    // P-coefficient. Row 0, k = 0: Q_0 coefficients are x^a monomials, so the
    // entry at (j, column of (a=j, b)) is 1 for every b.
    const LinearSystem sys1 =
        build_linear_system(sys, params, {CosetSpec(gamma, 1), CosetSpec(gamma, 1)});
    for (u64 a = 0; a < params.A; ++a)
        for (u64 b1 = 0; b1 < 2; ++b1)
            for (u64 b2 = 0; b2 < 2; ++b2)
                CHECK(sys1.at(a, lambda_column(params, a, {b1, b2})) == 1);
}

TEST_CASE("solve_nullspace deterministic kernel") {
    {
        LinearSystem s;
        s.p = 5;
        s.rows = 2;
        s.cols = 2;
        s.a = {1, 2, 2, 4};
        const auto x = solve_nullspace(std::move(s));
        CHECK(x == std::vector<Elem>{3, 1});
    }
    {
        LinearSystem s;
        s.p = 5;
        s.rows = 2;
        s.cols = 2;
        s.a = {1, 0, 0, 1};
        CHECK_THROWS_AS(solve_nullspace(std::move(s)), TrivialKernel);
    }
    {
        LinearSystem s;
        s.p = 5;
        s.rows = 0;
        s.cols = 3;
        const auto x = solve_nullspace(std::move(s));
        CHECK(x == std::vector<Elem>{1, 0, 0});
    }
}

TEST_CASE("kernel vector satisfies the system") {
    Rng rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        LinearSystem s;
        s.p = 97;
        s.rows = 3 + rng.below(4);
        s.cols = s.rows + 1 + rng.below(3);  // more unknowns than rows
        s.a.resize(s.rows * s.cols);
        for (Elem& v : s.a) v = rng.below(97);
        LinearSystem copy = s;
        const auto x = solve_nullspace(std::move(s));
        CHECK(std::any_of(x.begin(), x.end(), [](Elem v) { return v != 0; }));
        for (std::size_t r = 0; r < copy.rows; ++r) {
            Elem acc = 0;
            for (std::size_t c = 0; c < copy.cols; ++c)
                acc = add_mod(acc, mul_mod(copy.at(r, c), x[c], 97), 97);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("assemble_psi trivial lambdas") {
    FieldCtx F(1021);
    PolySystem sys = linear_system(F, 1, 2);
    const StepanovParams params = compute_params(sys, 20);
    std::vector<Elem> lambda(16, 0);
    {
        auto l = lambda;
        l[lambda_column(params, 0, {0, 0})] = 1;
        CHECK(assemble_psi(sys, params, l, 20) == DensePoly(F, {1}));
    }
    {
        auto l = lambda;
        l[lambda_column(params, 2, {0, 0})] = 1;
        CHECK(assemble_psi(sys, params, l, 20) == DensePoly::monomial(F, 1, 2));
    }
    {
        // single b-term: x^1 f_1^t
        auto l = lambda;
        l[lambda_column(params, 1, {1, 0})] = 1;
        CHECK(assemble_psi(sys, params, l, 20) ==
              DensePoly::monomial(F, 1, 1) * sys.poly(0).pow(20));
    }
}

TEST_CASE("verify_certificate constructed cases") {
    FieldCtx F(31);
    PolySystem sys = linear_system(F, 1, 2);
    {
        PsiCertificate cert(DensePoly::linear_root(F, 3).pow(2));
        cert.D = 2;
        cert.lambda = {1};
        const auto out = verify_certificate(cert, {3}, sys);
        CHECK(out.ok());
        CHECK(out.implied_count_bound == 1 + 2 + 1);
    }
    {
        PsiCertificate cert(DensePoly::linear_root(F, 3));
        cert.D = 2;
        const auto out = verify_certificate(cert, {3}, sys);
        CHECK_FALSE(out.all_multiplicities_ge_D);
    }
    {
        PsiCertificate cert{DensePoly(F)};
        cert.D = 2;
        CHECK_THROWS_AS(verify_certificate(cert, {3}, sys), ZeroPsi);
    }
}

TEST_CASE("full pipeline on the running instance") {
    FieldCtx F(1021);
    PolySystem sys = linear_system(F, 1, 2);
    const StepanovParams params = compute_params(sys, 20);
    REQUIRE(params.construction_ok());

    SubgroupSpec gamma(F, 20);
    std::vector<CosetSpec> cosets{CosetSpec(gamma, 1), CosetSpec(gamma, 1)};
    const EnumerationResult oracle = enumerate_M(sys, cosets);
    const PsiCertificate cert = construct_certificate(sys, params, cosets, oracle.M_prime);

    CHECK_FALSE(cert.psi.is_zero());
    CHECK(cert.psi.degree() <= 43);
    const auto outcome = verify_certificate(cert, oracle.M_prime, sys);
    CHECK(outcome.ok());
    CHECK(oracle.M.size() <= outcome.implied_count_bound);
}

TEST_CASE("permuting the polynomials changes nothing observable") {
    InstanceConfig a;
    a.p = 1021;
    a.t = 20;
    a.poly_texts = {"1020,1", "1019,1"};  // x - 1, x - 2
    a.coset_reps = {1, 5};
    InstanceConfig b = a;
    std::swap(b.poly_texts[0], b.poly_texts[1]);
    std::swap(b.coset_reps[0], b.coset_reps[1]);

    const InstanceReport ra = verify_instance(a);
    const InstanceReport rb = verify_instance(b);
    CHECK(ra.status == InstanceStatus::Pass);
    CHECK(ra.status == rb.status);
    CHECK(ra.M_size == rb.M_size);
    CHECK(ra.est_bound == rb.est_bound);
    CHECK(ra.deg_psi == rb.deg_psi);
}
