#ifndef STEPCERT_ORACLE_HPP
#define STEPCERT_ORACLE_HPP

#include <string>
#include <vector>

#include "stepcert/bounds.hpp"
#include "stepcert/ffield.hpp"
#include "stepcert/stepanov.hpp"

namespace stepcert {

/// Worker count for range-partitioned scans and sweep pools; the environment
/// variable STEPANOV_THREADS overrides the hardware default.
unsigned worker_count();

struct EnumerationResult {
    std::vector<Elem> M;        // sorted ascending
    std::vector<Elem> M_prime;  // sorted; x in M with x*f_1(x)...f_n(x) != 0
    std::vector<Elem> excluded; // M \ M'
};

/// Exhaustive scan of F_p: x is in M iff f_i(x) lies in coset i for every i.
/// Guarded at p <= 10^7; ranges above 10^5 are scanned in disjoint chunks
/// (concurrently) and merged in order, so the result is deterministic.
EnumerationResult enumerate_M(const PolySystem& sys, const std::vector<CosetSpec>& cosets);

/// Gamma intersect (Gamma + mu_1) ... intersect (Gamma + mu_n), exhaustively.
/// Equals enumerate_M under the embedding x -> (x, x - mu_1, ..., x - mu_n)
/// with every coset the subgroup itself.
std::vector<Elem> coset_intersection(const FieldCtx& ctx, u64 t,
                                     const std::vector<Elem>& shifts);

struct InstanceConfig {
    u64 p = 0;
    u64 t = 0;
    std::vector<std::string> poly_texts;  // polyring text form, original order
    std::vector<Elem> coset_reps;         // g_i, original order
};

enum class InstanceStatus { Pass, Fail, Skipped };

std::string to_string(InstanceStatus s);

/// Everything one full run produces: the oracle counts, the construction
/// parameters, the certificate checks, and the exact bound comparisons.
struct InstanceReport {
    InstanceStatus status = InstanceStatus::Skipped;
    std::string skip_reason;

    u64 p = 0, t = 0;
    unsigned n = 0;
    std::vector<u64> m;  // normalized (ascending)

    u64 M_size = 0, M_prime_size = 0, excluded_size = 0;

    u64 A = 0, D = 0;
    std::vector<u64> B;
    std::size_t system_rows = 0, system_cols = 0;

    std::int64_t deg_psi = -1;
    u64 est_bound = 0;  // 1 + M_n + ceil(deg Psi / D)

    bool lambda_nonzero = false;
    bool psi_nonzero = false;
    bool multiplicities_ok = false;
    bool sum_multiplicities_ok = false;
    bool deg_psi_in_bound = false;
    bool est_bound_ok = false;

    BoundReport bounds;  // window + Theorem-2 avatar with margin
};

/// Runs the oracle enumeration, the full construction, the certificate
/// verification, and the exact bound comparisons. Hypothesis failures
/// (admissibility, window, parameter conditions) yield Skipped, never Fail.
InstanceReport verify_instance(const InstanceConfig& config);

}  // namespace stepcert

#endif
