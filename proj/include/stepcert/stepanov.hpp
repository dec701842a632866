#ifndef STEPCERT_STEPANOV_HPP
#define STEPCERT_STEPANOV_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "stepcert/bounds.hpp"
#include "stepcert/common.hpp"
#include "stepcert/ffield.hpp"
#include "stepcert/polyring.hpp"

namespace stepcert {

/// The polynomial family f_1..f_n behind the map x -> (f_1(x),..,f_n(x)).
///
/// Stored in normalized order (degrees ascending, stable); permuting the
/// input family never changes any derived quantity, and source_index maps a
/// normalized position back to its original position for reporting.
class PolySystem {
public:
    PolySystem(FieldCtx ctx, std::vector<DensePoly> polys);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t n() const { return polys_.size(); }
    const std::vector<DensePoly>& polys() const { return polys_; }
    const DensePoly& poly(std::size_t i) const { return polys_[i]; }
    const std::vector<u64>& degrees() const { return degrees_; }
    /// M_k = m_1 + ... + m_k; prefix(0) == 0.
    u64 degree_prefix(std::size_t k) const { return prefix_[k]; }
    u64 total_degree() const { return prefix_.back(); }
    const std::vector<std::size_t>& source_index() const { return source_; }

    /// Reorders values given in original input order into normalized order.
    template <typename T>
    std::vector<T> normalize_order(const std::vector<T>& original) const {
        std::vector<T> out;
        out.reserve(source_.size());
        for (std::size_t i = 0; i < source_.size(); ++i) out.push_back(original[source_[i]]);
        return out;
    }

private:
    FieldCtx ctx_;
    std::vector<DensePoly> polys_;
    std::vector<u64> degrees_;
    std::vector<u64> prefix_;
    std::vector<std::size_t> source_;
};

/// Result of the gcd-peeling admissibility test. Vectors are indexed by the
/// ORIGINAL input position of each polynomial.
struct AdmissibilityReport {
    bool admissible = false;
    std::vector<bool> has_private_root;
    std::vector<bool> nonzero_at_zero;
    /// Nonconstant content of f_i coprime to every other f_j (the witness
    /// carrying the private root), or the zero polynomial when none remains.
    std::vector<DensePoly> private_factor;
};

/// Flag i is true iff f_i keeps a nonconstant factor after exhaustively
/// peeling gcds with the product of the other polynomials; that is exactly
/// "f_i has a root in the algebraic closure shared with no other f_j".
AdmissibilityReport check_admissible(const PolySystem& sys);

/// The parameter tuple of the construction, all floors taken by exact integer
/// root extraction, all conditions settled in (halved-)integer arithmetic.
struct StepanovParams {
    u64 t = 0;
    std::vector<u64> m;        // ascending
    std::vector<u64> B;        // B_i = floor(B / m_i)
    u64 A = 0;                 // prod B_i
    u64 D = 0;                 // floor(A / M_n)
    BigInt b_pow_2n;           // B^(2n) = (prod m)^2 * t

    bool cond_var_ok = false;      // 2AD + M_n D^2 < 2 A^2
    bool degree_ok = false;        // A-1 + sum_{i<n}(B_i-1) m_i t < p
    bool ord_t_paper_ok = false;   // 2t > 2A*Bpre + M_n Bpre^2
    bool ord_t_proof_ok = false;   // 2t >= 2A*Bpre + M_{n-1} Bpre^2 + 2 Bpre
    bool ord_t_ok = false;         // the stronger of the two = both
    bool gamma_ok = false;         // (n m_n)^(2n) < (prod m)^2 t, i.e. m_n/B < 1/n
    BigInt gamma_lhs, gamma_rhs;

    BigInt deg_psi_bound;          // A-1 + sum (B_i - 1) m_i t
    bool deg_psi_lt_p = false;
    bool d_lt_p = false;

    u64 b_prefix = 0;              // B_1 ... B_{n-1}

    /// Everything the construction and its guarantees rely on.
    bool construction_ok() const {
        return cond_var_ok && degree_ok && ord_t_ok && deg_psi_lt_p && d_lt_p;
    }
};

/// Sets B_i, A, D per the parameter recipe and evaluates every hypothesis
/// exactly. Throws DegenerateParams when some B_i or D comes out zero.
StepanovParams compute_params(const PolySystem& sys, u64 t);

/// P_0..P_kmax for one product x^a f_1^(b_1 t)...f_n^(b_n t), via
///   P_0 = x^a,
///   P_{k+1} = (prod f_i) P_k' + P_k * sum_i (b_i t - k) f_i' prod_{j!=i} f_j.
/// Requires k_max < p so the integer factors stay faithful mod p.
std::vector<DensePoly> pk_recurrence(const PolySystem& sys, u64 a, const std::vector<u64>& b,
                                     u64 t, u64 k_max);

/// Same recurrence over an explicit factor list (admits a single factor; used
/// by tests and by the system builder).
std::vector<DensePoly> pk_recurrence(const FieldCtx& ctx, const std::vector<DensePoly>& polys,
                                     u64 a, const std::vector<u64>& b, u64 t, u64 k_max);

/// Dense homogeneous system over F_p, row-major.
struct LinearSystem {
    u64 p = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> a;  // rows * cols

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Unknown lambda_(a,b) lives at column a + A * (b_1 + B_1*(b_2 + B_2*(...))).
std::size_t lambda_column(const StepanovParams& params, u64 a, const std::vector<u64>& b);

/// One row per coefficient of Q_k = sum lambda_(a,b) gamma_b P_(k,a,b), for
/// every k < D, where gamma_b = prod g_i^(b_i t). Row count follows the
/// degree bound A-1+(M_n-1)k per k.
LinearSystem build_linear_system(const PolySystem& sys, const StepanovParams& params,
                                 const std::vector<CosetSpec>& cosets);

/// Deterministic kernel vector: Gaussian elimination, first free column set
/// to 1, remaining free columns 0, pivots back-substituted. Throws
/// TrivialKernel on full column rank.
std::vector<Elem> solve_nullspace(LinearSystem sys);

/// Expands Psi = sum lambda_(a,b) x^a f_1^(b_1 t)...f_n^(b_n t). Powers
/// f_i^(b t) are computed once per exponent and the sum is grouped factor by
/// factor, so each cached power is multiplied in exactly once per group.
/// Throws DegreeOverflow unless A-1 + sum (B_i-1) m_i t < p.
DensePoly assemble_psi(const PolySystem& sys, const StepanovParams& params,
                       const std::vector<Elem>& lambda, u64 t);

/// The certificate: coefficients, the assembled polynomial, the vanishing
/// order target D, and measured multiplicity evidence per element of M'.
struct PsiCertificate {
    std::vector<Elem> lambda;  // column-indexed, not all zero
    u64 A = 0;
    std::vector<u64> B;
    u64 D = 0;
    u64 t = 0;
    DensePoly psi;
    std::map<Elem, u64> per_root;

    PsiCertificate() : psi(FieldCtx(2)) {}
    explicit PsiCertificate(DensePoly poly) : psi(std::move(poly)) {}
};

struct VerificationOutcome {
    bool psi_nonzero = false;
    bool all_multiplicities_ge_D = false;
    bool sum_multiplicities_ok = false;  // sum of orders <= deg Psi
    u64 sum_multiplicities = 0;
    u64 implied_count_bound = 0;  // 1 + M_n + ceil(deg Psi / D)
    std::map<Elem, u64> multiplicities;

    bool ok() const {
        return psi_nonzero && all_multiplicities_ge_D && sum_multiplicities_ok;
    }
};

/// Re-measures the vanishing order of cert.psi at every x in M_prime by
/// synthetic division (independent of how the certificate was built) and
/// evaluates the counting consequences. Throws ZeroPsi for a zero psi.
VerificationOutcome verify_certificate(const PsiCertificate& cert,
                                       const std::vector<Elem>& M_prime,
                                       const PolySystem& sys);

/// Full construction: linear system, kernel vector, assembled Psi,
/// multiplicity evidence at the supplied M'.
PsiCertificate construct_certificate(const PolySystem& sys, const StepanovParams& params,
                                     const std::vector<CosetSpec>& cosets,
                                     const std::vector<Elem>& M_prime);

}  // namespace stepcert

#endif
