#ifndef STEPCERT_COMPLEXROOTS_HPP
#define STEPCERT_COMPLEXROOTS_HPP

#include <complex>
#include <vector>

#include "stepcert/common.hpp"

namespace stepcert {

using Complex = std::complex<double>;

/// Tolerances of the numerical coset enumeration over C.
constexpr double kRootResidualTol = 1e-8;   // per-root certificate of the solver
constexpr double kAcceptTol = 1e-6;         // |f_i(z)^t - g_i^t| acceptance
constexpr double kDedupTol = 1e-7;

/// All roots of a complex polynomial (coefficients ascending, degree 1..256),
/// by simultaneous (Durand-Kerner) iteration started on a scaled circle,
/// followed by Newton polishing. Every returned root z satisfies
/// |p(z)| <= 1e-8 * (1+|z|)^deg * max|coeff|; otherwise NoConvergence.
/// Roots are sorted by (re, im) for determinism.
std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs);

/// M = { z : f_i(z) in g_i G } for G the t-th roots of unity. Enumeration is
/// anchored on the polynomial of smallest degree m: its constraint
/// f(z)^t = g^t splits into t well-conditioned solves f(z) = g * zeta over
/// the t-th roots of unity zeta (the same root set as the degree-(m t)
/// resolvent, without its coefficient blow-up). Accepted points satisfy
/// |f_i(z)^t - g_i^t| <= 1e-6 for every i and are deduplicated within 1e-7.
std::vector<Complex> enumerate_M_complex(const std::vector<std::vector<double>>& polys, u64 t,
                                         const std::vector<Complex>& reps);

struct Theorem3Report {
    bool skipped = false;
    std::string skip_reason;

    unsigned n = 0;
    std::vector<u64> m;  // ascending
    u64 t = 0;
    BigInt c1;           // threshold |G| must exceed

    std::size_t M_size = 0;
    std::vector<Complex> members;
    double max_residual = 0.0;  // max over members, i of |f_i(z)^t - g_i^t|

    bool bound_ok = false;
    BigInt bound_lhs, bound_rhs;  // |M|^(2n) vs coeff * t^(n+1)
};

/// Exact-avatar check of the roots-of-unity bound: skipped unless t exceeds
/// the Remark-2 threshold (which equals the F_p lower window constant).
Theorem3Report verify_theorem3_instance(const std::vector<std::vector<double>>& polys, u64 t,
                                        const std::vector<Complex>& reps);

}  // namespace stepcert

#endif
