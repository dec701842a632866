#ifndef STEPCERT_INDEPENDENCE_HPP
#define STEPCERT_INDEPENDENCE_HPP

#include <vector>

#include "stepcert/common.hpp"
#include "stepcert/polyring.hpp"

namespace stepcert {

/// True iff the family is linearly independent over F_p, by row reduction of
/// the coefficient matrix (rows = polynomials, columns = monomials).
bool rank_independence(const std::vector<DensePoly>& polys);

/// Determinant of the matrix whose row k holds the k-th derivatives of the
/// family. Fraction-free (Bareiss) elimination in F_p[x] for sizes up to 5,
/// cofactor expansion above; family size is capped at 8.
DensePoly wronskian(const std::vector<DensePoly>& polys);

/// Testable consequence of the F.K. Schmidt criterion at desk scale: for a
/// family of degrees below p, F_p-independence forces a nonvanishing
/// Wronskian. The conjunction (degrees_below_p && fp_independent &&
/// wronskian_zero) must never occur; `violation` flags it.
struct SchmidtVerdict {
    bool wronskian_zero = false;
    bool fp_independent = false;
    bool degrees_below_p = false;
    bool violation = false;
};

SchmidtVerdict schmidt_consequence_check(const std::vector<DensePoly>& polys);

/// Lemma-1 verification run over the restricted family f_1..f_s (the first
/// n-1 polynomials of a system), with explicit parameters (t, A, B_1..B_s).
struct Lemma1Report {
    u64 t = 0, A = 0;
    std::vector<u64> B;
    u64 b_product = 0;  // prod B_i, the Wronskian size

    bool degree_ok = false;       // A-1 + sum (B_i-1) m_i t < p
    bool ord_t_proof_ok = false;  // 2t >= 2A*Bprod + M Bprod^2 + 2 Bprod
    bool ord_t_paper_ok = false;  // 2t >  2A*Bprod + M Bprod^2 (restricted-family M)

    bool products_independent = false;
    bool w_nonzero = false;
    bool r_divides_w = false;
    bool quotient_degree_ok = false;  // 2 deg(W/R) <= 2A*Bprod + M Bprod^2
    std::int64_t deg_w = -1;
    std::int64_t deg_r = -1;

    bool ok() const {
        return products_independent && w_nonzero && r_divides_w && quotient_degree_ok;
    }
};

/// Builds the grouped family Q_b = H_b * prod f_i^(b_i t) with indicator-basis
/// H blocks, computes its Wronskian W and the clamped divisor R, and checks
/// R | W, the degree bound on W/R, and rank independence of the full product
/// family x^a prod f_i^(b_i t).
Lemma1Report lemma1_pipeline(const FieldCtx& ctx, const std::vector<DensePoly>& polys, u64 t,
                             u64 A, const std::vector<u64>& B);

}  // namespace stepcert

#endif
