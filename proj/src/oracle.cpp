#include "stepcert/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

namespace stepcert {

namespace {

constexpr u64 kScanCap = 10000000;   // exhaustive-scan guard
constexpr u64 kChunk = 100000;       // ranges above this are scanned in chunks

std::vector<Elem> scan_range(const PolySystem& sys, const std::vector<CosetSpec>& cosets,
                             u64 lo, u64 hi) {
    std::vector<Elem> hits;
    for (u64 x = lo; x < hi; ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < sys.n() && ok; ++i)
            ok = in_coset(sys.poly(i).eval(x), cosets[i]);
        if (ok) hits.push_back(x);
    }
    return hits;
}

}  // namespace

unsigned worker_count() {
    if (const char* env = std::getenv("STEPANOV_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(std::min(v, 64L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

EnumerationResult enumerate_M(const PolySystem& sys, const std::vector<CosetSpec>& cosets) {
    const u64 p = sys.ctx().p();
    if (p > kScanCap)
        throw FieldTooLarge("enumerate_M: p = " + std::to_string(p) + " exceeds scan cap");
    if (cosets.size() != sys.n())
        throw std::invalid_argument("enumerate_M: coset count != n");
    for (const CosetSpec& c : cosets)
        if (c.ctx() != sys.ctx()) throw ModulusMismatch("enumerate_M: coset modulus");

    EnumerationResult result;
    if (p <= kChunk) {
        result.M = scan_range(sys, cosets, 0, p);
    } else {
        const unsigned workers = worker_count();
        std::vector<std::future<std::vector<Elem>>> futures;
        std::vector<std::pair<u64, u64>> ranges;
        for (u64 lo = 0; lo < p; lo += kChunk) ranges.emplace_back(lo, std::min(lo + kChunk, p));
        std::size_t next = 0;
        // bounded fan-out; chunk results merge in range order
        std::vector<std::vector<Elem>> parts(ranges.size());
        while (next < ranges.size()) {
            const std::size_t batch = std::min<std::size_t>(workers, ranges.size() - next);
            futures.clear();
            for (std::size_t i = 0; i < batch; ++i) {
                auto [lo, hi] = ranges[next + i];
                futures.push_back(std::async(std::launch::async, scan_range, std::cref(sys),
                                             std::cref(cosets), lo, hi));
            }
            for (std::size_t i = 0; i < batch; ++i) parts[next + i] = futures[i].get();
            next += batch;
        }
        for (auto& part : parts)
            result.M.insert(result.M.end(), part.begin(), part.end());
    }

    for (Elem x : result.M) {
        Elem prod = x;
        for (std::size_t i = 0; i < sys.n(); ++i) prod = sys.ctx().mul(prod, sys.poly(i).eval(x));
        if (prod != 0)
            result.M_prime.push_back(x);
        else
            result.excluded.push_back(x);
    }
    return result;
}

std::vector<Elem> coset_intersection(const FieldCtx& ctx, u64 t,
                                     const std::vector<Elem>& shifts) {
    const u64 p = ctx.p();
    if (p > kScanCap)
        throw FieldTooLarge("coset_intersection: p exceeds scan cap");
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (shifts[i] % p == 0)
            throw std::invalid_argument("coset_intersection: shifts must be nonzero");
        for (std::size_t j = i + 1; j < shifts.size(); ++j)
            if (shifts[i] % p == shifts[j] % p)
                throw std::invalid_argument("coset_intersection: shifts must be distinct");
    }

    SubgroupSpec gamma(ctx, t);  // throws NotADivisor when t does not divide p-1
    std::vector<Elem> out;
    if (gamma.materialized()) {
        for (Elem x : gamma.elements()) {
            bool ok = true;
            for (Elem mu : shifts) {
                if (!gamma.member(ctx.sub(x, mu % p))) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(x);
        }
    } else {
        for (u64 x = 1; x < p; ++x) {
            if (!gamma.member(x)) continue;
            bool ok = true;
            for (Elem mu : shifts) {
                if (!gamma.member(ctx.sub(x, mu % p))) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(x);
        }
    }
    return out;  // ascending: subgroup elements are sorted, scan is ascending
}

std::string to_string(InstanceStatus s) {
    switch (s) {
        case InstanceStatus::Pass: return "PASS";
        case InstanceStatus::Fail: return "FAIL";
        case InstanceStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

InstanceReport verify_instance(const InstanceConfig& config) {
    InstanceReport report;
    report.p = config.p;
    report.t = config.t;

    FieldCtx ctx(config.p);
    std::vector<DensePoly> polys;
    polys.reserve(config.poly_texts.size());
    for (const std::string& text : config.poly_texts)
        polys.push_back(DensePoly::from_text(ctx, text));
    if (config.coset_reps.size() != polys.size())
        throw std::invalid_argument("verify_instance: coset count != polynomial count");

    PolySystem sys(ctx, std::move(polys));
    report.n = static_cast<unsigned>(sys.n());
    report.m = sys.degrees();

    report.bounds = constants_remark1(sys.degrees(), report.n, config.p, config.t);

    const AdmissibilityReport adm = check_admissible(sys);
    if (!adm.admissible) {
        report.skip_reason = "admissibility";
        return report;
    }
    if (!report.bounds.window_ok) {
        report.skip_reason = report.bounds.above_c1 ? "window-upper" : "window-lower";
        return report;
    }

    StepanovParams params;
    try {
        params = compute_params(sys, config.t);
    } catch (const DegenerateParams&) {
        report.skip_reason = "degenerate-params";
        return report;
    }
    report.A = params.A;
    report.D = params.D;
    report.B = params.B;
    if (!params.construction_ok()) {
        report.skip_reason = "construction-conditions";
        return report;
    }

    SubgroupSpec gamma(ctx, config.t);
    const std::vector<Elem> reps = sys.normalize_order(config.coset_reps);
    std::vector<CosetSpec> cosets;
    cosets.reserve(reps.size());
    for (Elem g : reps) cosets.emplace_back(gamma, g);

    const EnumerationResult oracle = enumerate_M(sys, cosets);
    report.M_size = oracle.M.size();
    report.M_prime_size = oracle.M_prime.size();
    report.excluded_size = oracle.excluded.size();

    LinearSystem system = build_linear_system(sys, params, cosets);
    report.system_rows = system.rows;
    report.system_cols = system.cols;

    std::vector<Elem> lambda;
    try {
        lambda = solve_nullspace(std::move(system));
    } catch (const TrivialKernel&) {
        // cond_var_ok promised a kernel vector; reaching here is a failure
        report.status = InstanceStatus::Fail;
        report.skip_reason = "trivial-kernel";
        return report;
    }
    report.lambda_nonzero =
        std::any_of(lambda.begin(), lambda.end(), [](Elem v) { return v != 0; });

    PsiCertificate cert(assemble_psi(sys, params, lambda, config.t));
    cert.lambda = std::move(lambda);
    cert.A = params.A;
    cert.B = params.B;
    cert.D = params.D;
    cert.t = config.t;

    report.deg_psi = cert.psi.degree();
    report.psi_nonzero = !cert.psi.is_zero();
    if (!report.psi_nonzero) {
        report.status = InstanceStatus::Fail;
        return report;
    }

    const VerificationOutcome outcome = verify_certificate(cert, oracle.M_prime, sys);
    report.multiplicities_ok = outcome.all_multiplicities_ge_D;
    report.sum_multiplicities_ok = outcome.sum_multiplicities_ok;
    report.est_bound = outcome.implied_count_bound;
    report.est_bound_ok = report.M_size <= report.est_bound;
    report.deg_psi_in_bound =
        BigInt(report.deg_psi) <= params.deg_psi_bound && report.deg_psi < (std::int64_t)config.p;

    apply_size_bound(report.bounds, config.t, report.M_size);

    const bool all_ok = report.lambda_nonzero && report.psi_nonzero &&
                        report.multiplicities_ok && report.sum_multiplicities_ok &&
                        report.deg_psi_in_bound && report.est_bound_ok &&
                        report.bounds.bound_holds;
    report.status = all_ok ? InstanceStatus::Pass : InstanceStatus::Fail;
    return report;
}

}  // namespace stepcert
