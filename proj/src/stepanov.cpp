#include "stepcert/stepanov.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stepcert {

namespace {

u64 checked_u64(const BigInt& v, const char* what) {
    if (v < 0 || v > BigInt(UINT64_MAX)) throw std::overflow_error(what);
    return v.convert_to<u64>();
}

}  // namespace

PolySystem::PolySystem(FieldCtx ctx, std::vector<DensePoly> polys)
    : ctx_(ctx), polys_(std::move(polys)) {
    if (polys_.size() < 2) throw std::invalid_argument("PolySystem: need n >= 2 polynomials");
    for (const DensePoly& f : polys_) {
        if (f.ctx() != ctx_) throw ModulusMismatch("PolySystem: mixed moduli");
        if (f.degree() < 1)
            throw std::invalid_argument("PolySystem: every polynomial must have degree >= 1");
    }
    source_.resize(polys_.size());
    std::iota(source_.begin(), source_.end(), std::size_t{0});
    std::stable_sort(source_.begin(), source_.end(), [&](std::size_t i, std::size_t j) {
        return polys_[i].degree() < polys_[j].degree();
    });
    std::vector<DensePoly> ordered;
    ordered.reserve(polys_.size());
    for (std::size_t i : source_) ordered.push_back(polys_[i]);
    polys_ = std::move(ordered);

    degrees_.reserve(polys_.size());
    prefix_.assign(1, 0);
    for (const DensePoly& f : polys_) {
        degrees_.push_back(static_cast<u64>(f.degree()));
        prefix_.push_back(prefix_.back() + degrees_.back());
    }
}

AdmissibilityReport check_admissible(const PolySystem& sys) {
    const std::size_t n = sys.n();
    AdmissibilityReport report;
    report.has_private_root.assign(n, false);
    report.nonzero_at_zero.assign(n, false);
    report.private_factor.assign(n, DensePoly(sys.ctx()));

    bool all_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        DensePoly others = DensePoly::constant(sys.ctx(), 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others *= sys.poly(j);

        DensePoly h = sys.poly(i);
        while (true) {
            DensePoly d = poly_gcd(h, others);
            if (d.degree() < 1) break;
            h = poly_divrem(h, d).first;
        }
        const bool private_root = h.degree() >= 1;
        const bool at_zero = sys.poly(i).eval(0) != 0;

        const std::size_t orig = sys.source_index()[i];
        report.has_private_root[orig] = private_root;
        report.nonzero_at_zero[orig] = at_zero;
        if (private_root) report.private_factor[orig] = h.monic();
        all_ok = all_ok && private_root && at_zero;
    }
    report.admissible = all_ok;
    return report;
}

StepanovParams compute_params(const PolySystem& sys, u64 t) {
    if (t < 2) throw std::invalid_argument("compute_params: t >= 2 required");
    const std::size_t n = sys.n();
    const u64 p = sys.ctx().p();

    StepanovParams params;
    params.t = t;
    params.m = sys.degrees();

    BigInt prod_m = 1;
    for (u64 mi : params.m) prod_m *= mi;
    const unsigned two_n = static_cast<unsigned>(2 * n);
    params.b_pow_2n = prod_m * prod_m * t;

    // B_i = floor(B / m_i) with B^(2n) = (prod m)^2 t; the floor commutes with
    // integer division of the radicand by m_i^(2n).
    BigInt A_big = 1;
    params.B.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BigInt radicand = params.b_pow_2n / big_pow(BigInt(params.m[i]), two_n);
        const u64 Bi = checked_u64(integer_root(radicand, two_n), "compute_params: B_i overflow");
        params.B.push_back(Bi);
        A_big *= Bi;
    }
    params.A = checked_u64(A_big, "compute_params: A overflow");

    const u64 M_n = sys.total_degree();
    params.D = params.A / M_n;

    for (u64 Bi : params.B)
        if (Bi == 0)
            throw DegenerateParams("compute_params: some B_i = 0 (t too small for degrees)");
    if (params.D == 0) throw DegenerateParams("compute_params: D = 0 (t too small for degrees)");

    BigInt b_prefix_big = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) b_prefix_big *= params.B[i];
    params.b_prefix = checked_u64(b_prefix_big, "compute_params: B prefix overflow");

    const BigInt A = params.A, D = params.D, Bpre = params.b_prefix;

    // (cond-var), halved-integer form: 2AD + M_n D^2 < 2 A prod(B_i) = 2 A^2.
    params.cond_var_ok = 2 * A * D + BigInt(M_n) * D * D < 2 * A * A;

    // (degree): A - 1 + sum_{i<n} (B_i - 1) m_i t < p.
    BigInt degree_lhs = A - 1;
    for (std::size_t i = 0; i + 1 < n; ++i)
        degree_lhs += BigInt(params.B[i] - 1) * params.m[i] * t;
    params.degree_ok = degree_lhs < p;

    // (ord-t) as stated and as concluded in the proof; the artifact requires
    // the stronger of the two, which is always their conjunction.
    const u64 M_n1 = sys.degree_prefix(n - 1);
    params.ord_t_paper_ok = 2 * BigInt(t) > 2 * A * Bpre + BigInt(M_n) * Bpre * Bpre;
    params.ord_t_proof_ok =
        2 * BigInt(t) >= 2 * A * Bpre + BigInt(M_n1) * Bpre * Bpre + 2 * Bpre;
    params.ord_t_ok = params.ord_t_paper_ok && params.ord_t_proof_ok;

    // m_n / B < 1/n, cleared to (n m_n)^(2n) < B^(2n).
    params.gamma_lhs = big_pow(BigInt(n) * params.m.back(), two_n);
    params.gamma_rhs = params.b_pow_2n;
    params.gamma_ok = params.gamma_lhs < params.gamma_rhs;

    params.deg_psi_bound = A - 1;
    for (std::size_t i = 0; i < n; ++i)
        params.deg_psi_bound += BigInt(params.B[i] - 1) * params.m[i] * t;
    params.deg_psi_lt_p = params.deg_psi_bound < p;
    params.d_lt_p = params.D < p;

    return params;
}

namespace {

/// Streams P_0, P_1, ... for fixed factors and exponent vector b.
class PkStream {
public:
    PkStream(const FieldCtx& ctx, const std::vector<DensePoly>& polys, u64 a,
             const std::vector<u64>& b, u64 t)
        : ctx_(ctx),
          p_(ctx.p()),
          full_product_(DensePoly::constant(ctx, 1)),
          current_(DensePoly::monomial(ctx, 1, a)),
          k_(0) {
        for (const DensePoly& f : polys) full_product_ *= f;
        cofactor_terms_.reserve(polys.size());
        bt_mod_.reserve(polys.size());
        for (std::size_t i = 0; i < polys.size(); ++i) {
            DensePoly term = polys[i].derivative();
            for (std::size_t j = 0; j < polys.size(); ++j)
                if (j != i) term *= polys[j];
            cofactor_terms_.push_back(std::move(term));
            bt_mod_.push_back(mul_mod(b[i] % p_, t % p_, p_));
        }
    }

    const DensePoly& current() const { return current_; }
    u64 k() const { return k_; }

    void advance() {
        if (k_ + 1 >= p_)
            throw std::invalid_argument("pk_recurrence: k must stay below the characteristic");
        DensePoly s(ctx_);
        const Elem k_mod = static_cast<Elem>(k_ % p_);
        for (std::size_t i = 0; i < cofactor_terms_.size(); ++i) {
            const Elem c = sub_mod(bt_mod_[i], k_mod, p_);
            if (c != 0) s += cofactor_terms_[i].scaled(c);
        }
        current_ = full_product_ * current_.derivative() + current_ * s;
        ++k_;
    }

private:
    FieldCtx ctx_;
    u64 p_;
    DensePoly full_product_;
    std::vector<DensePoly> cofactor_terms_;
    std::vector<Elem> bt_mod_;
    DensePoly current_;
    u64 k_;
};

}  // namespace

std::vector<DensePoly> pk_recurrence(const FieldCtx& ctx, const std::vector<DensePoly>& polys,
                                     u64 a, const std::vector<u64>& b, u64 t, u64 k_max) {
    if (polys.empty()) throw std::invalid_argument("pk_recurrence: empty factor list");
    if (b.size() != polys.size())
        throw std::invalid_argument("pk_recurrence: exponent count mismatch");
    if (k_max >= ctx.p())
        throw std::invalid_argument("pk_recurrence: k_max must be below the characteristic");
    PkStream stream(ctx, polys, a, b, t);
    std::vector<DensePoly> out;
    out.reserve(k_max + 1);
    out.push_back(stream.current());
    for (u64 k = 0; k < k_max; ++k) {
        stream.advance();
        out.push_back(stream.current());
    }
    return out;
}

std::vector<DensePoly> pk_recurrence(const PolySystem& sys, u64 a, const std::vector<u64>& b,
                                     u64 t, u64 k_max) {
    return pk_recurrence(sys.ctx(), sys.polys(), a, b, t, k_max);
}

std::size_t lambda_column(const StepanovParams& params, u64 a, const std::vector<u64>& b) {
    std::size_t idx = 0;
    for (std::size_t i = b.size(); i-- > 0;) idx = idx * params.B[i] + b[i];
    return static_cast<std::size_t>(a) + static_cast<std::size_t>(params.A) * idx;
}

LinearSystem build_linear_system(const PolySystem& sys, const StepanovParams& params,
                                 const std::vector<CosetSpec>& cosets) {
    const std::size_t n = sys.n();
    const u64 p = sys.ctx().p();
    if (cosets.size() != n) throw std::invalid_argument("build_linear_system: coset count != n");
    for (const CosetSpec& c : cosets) {
        if (c.ctx() != sys.ctx()) throw ModulusMismatch("build_linear_system: coset modulus");
        if (c.subgroup().order() != params.t)
            throw std::invalid_argument("build_linear_system: coset order != t");
    }
    if (params.D == 0) throw DegenerateParams("build_linear_system: D = 0");
    if (params.D >= p)
        throw std::invalid_argument("build_linear_system: D must stay below the characteristic");

    const u64 A = params.A;
    const u64 M_n = sys.total_degree();
    const u64 D = params.D;

    // Row block for derivative order k holds coefficient indices
    // 0 .. A-1+(M_n-1)k, per the degree bound on P_k.
    std::vector<std::size_t> row_base(D + 1, 0);
    for (u64 k = 0; k < D; ++k)
        row_base[k + 1] = row_base[k] + static_cast<std::size_t>(A + (M_n - 1) * k);

    LinearSystem system;
    system.p = p;
    system.rows = row_base[D];
    BigInt cols_big = BigInt(A);
    for (u64 Bi : params.B) cols_big *= Bi;
    system.cols = checked_u64(cols_big, "build_linear_system: too many unknowns");
    system.a.assign(system.rows * system.cols, 0);

    std::vector<u64> b(n, 0);
    while (true) {
        Elem gamma = 1;
        for (std::size_t i = 0; i < n; ++i)
            gamma = mul_mod(gamma, pow_mod(cosets[i].rep(), b[i] * params.t, p), p);

        for (u64 a_exp = 0; a_exp < A; ++a_exp) {
            const std::size_t col = lambda_column(params, a_exp, b);
            PkStream stream(sys.ctx(), sys.polys(), a_exp, b, params.t);
            for (u64 k = 0; k < D; ++k) {
                if (k > 0) stream.advance();
                const DensePoly& pk = stream.current();
                if (pk.degree() >= 0 &&
                    static_cast<u64>(pk.degree()) > a_exp + (M_n - 1) * k)
                    throw std::logic_error("build_linear_system: P_k degree bound violated");
                const auto& coeffs = pk.coeffs();
                for (std::size_t j = 0; j < coeffs.size(); ++j) {
                    if (coeffs[j] == 0) continue;
                    system.at(row_base[k] + j, col) = mul_mod(gamma, coeffs[j], p);
                }
            }
        }

        std::size_t i = 0;
        while (i < n && ++b[i] == params.B[i]) b[i++] = 0;
        if (i == n) break;
    }
    return system;
}

std::vector<Elem> solve_nullspace(LinearSystem sys) {
    const u64 p = sys.p;
    const std::size_t rows = sys.rows, cols = sys.cols;
    if (cols == 0) throw std::invalid_argument("solve_nullspace: no unknowns");

    std::vector<std::size_t> pivot_col;
    pivot_col.reserve(std::min(rows, cols));
    std::vector<bool> is_pivot(cols, false);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && sys.at(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            std::swap_ranges(sys.a.begin() + pr * cols, sys.a.begin() + (pr + 1) * cols,
                             sys.a.begin() + r * cols);

        Elem* pivot_row = &sys.a[r * cols];
        const Elem inv = inv_mod(pivot_row[c], p);
        for (std::size_t j = c; j < cols; ++j) pivot_row[j] = mul_mod(pivot_row[j], inv, p);

        for (std::size_t i = r + 1; i < rows; ++i) {
            Elem* row = &sys.a[i * cols];
            const Elem factor = row[c];
            if (factor == 0) continue;
            row[c] = 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (pivot_row[j] == 0) continue;
                row[j] = sub_mod(row[j], mul_mod(factor, pivot_row[j], p), p);
            }
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    if (free_col == cols)
        throw TrivialKernel("solve_nullspace: system has full column rank");

    std::vector<Elem> x(cols, 0);
    x[free_col] = 1;
    for (std::size_t i = pivot_col.size(); i-- > 0;) {
        const std::size_t c = pivot_col[i];
        const Elem* row = &sys.a[i * cols];
        Elem acc = 0;
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (x[j] == 0 || row[j] == 0) continue;
            acc = add_mod(acc, mul_mod(row[j], x[j], p), p);
        }
        x[c] = neg_mod(acc, p);
    }
    return x;
}

namespace {

DensePoly assemble_group(const PolySystem& sys, const StepanovParams& params,
                         const std::vector<Elem>& lambda,
                         const std::vector<std::vector<DensePoly>>& powers, std::size_t dim,
                         std::size_t suffix) {
    const FieldCtx& F = sys.ctx();
    if (dim == 0) {
        const std::size_t base = suffix * params.A;
        std::vector<Elem> h(lambda.begin() + base, lambda.begin() + base + params.A);
        return DensePoly(F, std::move(h));
    }
    DensePoly acc(F);
    const std::size_t i = dim - 1;
    for (u64 b = 0; b < params.B[i]; ++b) {
        DensePoly inner =
            assemble_group(sys, params, lambda, powers, dim - 1, b + suffix * params.B[i]);
        if (inner.is_zero()) continue;
        acc += powers[i][b] * inner;
    }
    return acc;
}

}  // namespace

DensePoly assemble_psi(const PolySystem& sys, const StepanovParams& params,
                       const std::vector<Elem>& lambda, u64 t) {
    const u64 p = sys.ctx().p();
    if (!(params.deg_psi_bound < p))
        throw DegreeOverflow("assemble_psi: deg Psi bound reaches the characteristic");
    BigInt expected = BigInt(params.A);
    for (u64 Bi : params.B) expected *= Bi;
    if (BigInt(lambda.size()) != expected)
        throw std::invalid_argument("assemble_psi: lambda size mismatch");

    std::vector<std::vector<DensePoly>> powers(sys.n());
    for (std::size_t i = 0; i < sys.n(); ++i) {
        powers[i].reserve(params.B[i]);
        powers[i].push_back(DensePoly::constant(sys.ctx(), 1));
        if (params.B[i] > 1) {
            const DensePoly base = sys.poly(i).pow(t);
            for (u64 b = 1; b < params.B[i]; ++b) powers[i].push_back(powers[i][b - 1] * base);
        }
    }
    return assemble_group(sys, params, lambda, powers, sys.n(), 0);
}

VerificationOutcome verify_certificate(const PsiCertificate& cert,
                                       const std::vector<Elem>& M_prime,
                                       const PolySystem& sys) {
    if (cert.psi.is_zero()) throw ZeroPsi("verify_certificate: zero certificate polynomial");

    VerificationOutcome out;
    out.psi_nonzero = true;
    const u64 deg = static_cast<u64>(cert.psi.degree());

    out.all_multiplicities_ge_D = true;
    for (Elem x : M_prime) {
        const u64 mult = multiplicity_at(cert.psi, x);
        out.multiplicities[x] = mult;
        out.sum_multiplicities += mult;
        if (mult < cert.D) out.all_multiplicities_ge_D = false;
    }
    out.sum_multiplicities_ok = out.sum_multiplicities <= deg;
    out.implied_count_bound = 1 + sys.total_degree() + (deg + cert.D - 1) / cert.D;
    return out;
}

PsiCertificate construct_certificate(const PolySystem& sys, const StepanovParams& params,
                                     const std::vector<CosetSpec>& cosets,
                                     const std::vector<Elem>& M_prime) {
    LinearSystem system = build_linear_system(sys, params, cosets);
    std::vector<Elem> lambda = solve_nullspace(std::move(system));

    PsiCertificate cert(assemble_psi(sys, params, lambda, params.t));
    cert.lambda = std::move(lambda);
    cert.A = params.A;
    cert.B = params.B;
    cert.D = params.D;
    cert.t = params.t;
    for (Elem x : M_prime)
        cert.per_root[x] = cert.psi.is_zero() ? 0 : multiplicity_at(cert.psi, x);
    return cert;
}

}  // namespace stepcert
