#ifndef STEPCERT_TEST_UTIL_HPP
#define STEPCERT_TEST_UTIL_HPP

#include "stepcert/polyring.hpp"

namespace stepcert::testutil {

/// Random polynomial of degree <= max_degree (possibly zero).
inline DensePoly random_poly(Rng& rng, const FieldCtx& ctx, u64 max_degree) {
    const u64 len = rng.below(max_degree + 2);  // 0 => zero polynomial
    std::vector<Elem> coeffs(len);
    for (Elem& c : coeffs) c = rng.below(ctx.p());
    return DensePoly(ctx, std::move(coeffs));
}

/// Random polynomial of exact degree `degree`.
inline DensePoly random_poly_exact(Rng& rng, const FieldCtx& ctx, u64 degree) {
    std::vector<Elem> coeffs(degree + 1);
    for (Elem& c : coeffs) c = rng.below(ctx.p());
    coeffs[degree] = rng.range(1, ctx.p() - 1);
    return DensePoly(ctx, std::move(coeffs));
}

}  // namespace stepcert::testutil

#endif
