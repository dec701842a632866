#include "stepcert/independence.hpp"

#include <algorithm>
#include <stdexcept>

namespace stepcert {

namespace {

constexpr std::size_t kWronskianCap = 8;
constexpr std::size_t kBareissCap = 5;

DensePoly exact_quotient(const DensePoly& a, const DensePoly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_quotient: division was not exact");
    return q;
}

DensePoly det_bareiss(std::vector<std::vector<DensePoly>> m, const FieldCtx& F) {
    const std::size_t s = m.size();
    bool negate = false;
    DensePoly prev = DensePoly::constant(F, 1);
    for (std::size_t k = 0; k + 1 < s; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < s && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == s) return DensePoly(F);  // singular column
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < s; ++i) {
            for (std::size_t j = k + 1; j < s; ++j) {
                DensePoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? num : exact_quotient(num, prev);
            }
            m[i][k] = DensePoly(F);
        }
        prev = m[k][k];
    }
    DensePoly det = m[s - 1][s - 1];
    return negate ? -det : det;
}

DensePoly det_cofactor(const std::vector<std::vector<DensePoly>>& m, std::vector<bool>& used,
                       std::size_t row, const FieldCtx& F) {
    const std::size_t s = m.size();
    if (row == s) return DensePoly::constant(F, 1);
    DensePoly acc(F);
    bool negate = false;
    for (std::size_t c = 0; c < s; ++c) {
        if (used[c]) continue;
        if (!m[row][c].is_zero()) {
            used[c] = true;
            DensePoly sub = det_cofactor(m, used, row + 1, F);
            used[c] = false;
            if (!sub.is_zero()) {
                DensePoly term = m[row][c] * sub;
                acc = negate ? acc - term : acc + term;
            }
        }
        negate = !negate;
    }
    return acc;
}

}  // namespace

bool rank_independence(const std::vector<DensePoly>& polys) {
    if (polys.empty()) throw EmptyFamily("rank_independence: empty family");
    const FieldCtx& F = polys.front().ctx();
    const u64 p = F.p();
    std::size_t width = 0;
    for (const DensePoly& f : polys) {
        if (f.ctx() != F) throw ModulusMismatch("rank_independence: mixed moduli");
        if (f.is_zero()) return false;
        width = std::max(width, f.coeffs().size());
    }

    std::vector<std::vector<Elem>> rows;
    rows.reserve(polys.size());
    for (const DensePoly& f : polys) {
        std::vector<Elem> row(width, 0);
        std::copy(f.coeffs().begin(), f.coeffs().end(), row.begin());
        rows.push_back(std::move(row));
    }

    std::size_t rank = 0;
    for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
        std::size_t pr = rank;
        while (pr < rows.size() && rows[pr][c] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        const Elem inv = inv_mod(rows[rank][c], p);
        for (std::size_t j = c; j < width; ++j) rows[rank][j] = mul_mod(rows[rank][j], inv, p);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            const Elem f = rows[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < width; ++j)
                rows[i][j] = sub_mod(rows[i][j], mul_mod(f, rows[rank][j], p), p);
        }
        ++rank;
    }
    return rank == polys.size();
}

DensePoly wronskian(const std::vector<DensePoly>& polys) {
    if (polys.empty()) throw EmptyFamily("wronskian: empty family");
    if (polys.size() > kWronskianCap)
        throw FamilyTooLarge("wronskian: family size " + std::to_string(polys.size()) +
                             " exceeds cap " + std::to_string(kWronskianCap));
    const FieldCtx& F = polys.front().ctx();
    for (const DensePoly& f : polys)
        if (f.ctx() != F) throw ModulusMismatch("wronskian: mixed moduli");

    const std::size_t s = polys.size();
    std::vector<std::vector<DensePoly>> m(s, std::vector<DensePoly>(s, DensePoly(F)));
    for (std::size_t c = 0; c < s; ++c) {
        m[0][c] = polys[c];
        for (std::size_t k = 1; k < s; ++k) m[k][c] = m[k - 1][c].derivative();
    }

    if (s <= kBareissCap) return det_bareiss(std::move(m), F);
    std::vector<bool> used(s, false);
    return det_cofactor(m, used, 0, F);
}

SchmidtVerdict schmidt_consequence_check(const std::vector<DensePoly>& polys) {
    if (polys.size() > kWronskianCap)
        throw FamilyTooLarge("schmidt_consequence_check: family too large");
    SchmidtVerdict v;
    if (polys.empty()) return v;
    const u64 p = polys.front().ctx().p();

    v.wronskian_zero = wronskian(polys).is_zero();
    v.fp_independent = rank_independence(polys);
    v.degrees_below_p = true;
    for (const DensePoly& f : polys)
        if (f.degree() >= 0 && static_cast<u64>(f.degree()) >= p) v.degrees_below_p = false;

    v.violation = v.degrees_below_p && v.fp_independent && v.wronskian_zero;
    return v;
}

Lemma1Report lemma1_pipeline(const FieldCtx& ctx, const std::vector<DensePoly>& polys, u64 t,
                             u64 A, const std::vector<u64>& B) {
    const std::size_t s = polys.size();
    if (s == 0) throw EmptyFamily("lemma1_pipeline: empty family");
    if (B.size() != s) throw std::invalid_argument("lemma1_pipeline: B size mismatch");
    if (A == 0) throw std::invalid_argument("lemma1_pipeline: A >= 1 required");

    u64 b_product = 1;
    for (u64 Bi : B) {
        if (Bi == 0) throw std::invalid_argument("lemma1_pipeline: B_i >= 1 required");
        b_product *= Bi;
    }
    if (b_product > kWronskianCap)
        throw FamilyTooLarge("lemma1_pipeline: prod B_i exceeds Wronskian cap");

    Lemma1Report rep;
    rep.t = t;
    rep.A = A;
    rep.B = B;
    rep.b_product = b_product;

    std::vector<u64> m(s);
    u64 m_sum = 0;
    for (std::size_t i = 0; i < s; ++i) {
        if (polys[i].ctx() != ctx) throw ModulusMismatch("lemma1_pipeline: mixed moduli");
        if (polys[i].degree() < 1)
            throw std::invalid_argument("lemma1_pipeline: factors must have degree >= 1");
        m[i] = static_cast<u64>(polys[i].degree());
        m_sum += m[i];
    }

    const u64 p = ctx.p();
    BigInt degree_lhs = BigInt(A) - 1;
    for (std::size_t i = 0; i < s; ++i) degree_lhs += BigInt(B[i] - 1) * m[i] * t;
    rep.degree_ok = degree_lhs < p;
    const BigInt half_rhs = 2 * BigInt(A) * b_product + BigInt(m_sum) * b_product * b_product;
    rep.ord_t_paper_ok = 2 * BigInt(t) > half_rhs;
    rep.ord_t_proof_ok = 2 * BigInt(t) >= half_rhs + 2 * b_product;

    // Cached powers f_i^(b t).
    std::vector<std::vector<DensePoly>> powers(s);
    for (std::size_t i = 0; i < s; ++i) {
        powers[i].push_back(DensePoly::constant(ctx, 1));
        if (B[i] > 1) {
            const DensePoly base = polys[i].pow(t);
            for (u64 b = 1; b < B[i]; ++b) powers[i].push_back(powers[i][b - 1] * base);
        }
    }

    // Enumerate exponent tuples b in lexicographic order, b_1 fastest.
    std::vector<std::vector<u64>> tuples;
    {
        std::vector<u64> b(s, 0);
        while (true) {
            tuples.push_back(b);
            std::size_t i = 0;
            while (i < s && ++b[i] == B[i]) b[i++] = 0;
            if (i == s) break;
        }
    }

    // Full product family for the rank check.
    std::vector<DensePoly> products;
    products.reserve(A * tuples.size());
    for (const auto& b : tuples) {
        DensePoly base = DensePoly::constant(ctx, 1);
        for (std::size_t i = 0; i < s; ++i) base *= powers[i][b[i]];
        for (u64 a = 0; a < A; ++a) products.push_back(base.shifted(a));
    }
    rep.products_independent = rank_independence(products);

    // Grouped family: column j takes the indicator block of monomials
    // [jA/Bprod, (j+1)A/Bprod) as H_j. Every a < A lands in exactly one block.
    std::vector<DensePoly> q_family;
    q_family.reserve(tuples.size());
    for (std::size_t j = 0; j < tuples.size(); ++j) {
        const u64 lo = (j * A) / b_product;
        const u64 hi = ((j + 1) * A) / b_product;
        std::vector<Elem> h(hi, 0);
        for (u64 a = lo; a < hi; ++a) h[a] = 1;
        DensePoly q(ctx, std::move(h));
        for (std::size_t i = 0; i < s; ++i) q *= powers[i][tuples[j][i]];
        q_family.push_back(std::move(q));
    }

    DensePoly w = wronskian(q_family);
    rep.w_nonzero = !w.is_zero();
    rep.deg_w = w.degree();

    // Clamped divisor: each derivative removes at most one factor, so column j
    // stays divisible by f_i^max(b_i t - (Bprod-1), 0).
    DensePoly r_poly = DensePoly::constant(ctx, 1);
    for (std::size_t i = 0; i < s; ++i) {
        u64 total_exp = 0;
        for (const auto& b : tuples) {
            const u64 bt = b[i] * t;
            total_exp += bt > b_product - 1 ? bt - (b_product - 1) : 0;
        }
        if (total_exp > 0) r_poly *= polys[i].pow(total_exp);
    }
    rep.deg_r = r_poly.degree();

    if (rep.w_nonzero) {
        auto [quotient, remainder] = poly_divrem(w, r_poly);
        rep.r_divides_w = remainder.is_zero();
        if (rep.r_divides_w) {
            rep.quotient_degree_ok =
                2 * BigInt(quotient.degree()) <= 2 * BigInt(A) * b_product +
                                                     BigInt(m_sum) * b_product * b_product;
        }
    } else {
        rep.r_divides_w = true;  // zero is divisible; the bound is vacuous
        rep.quotient_degree_ok = false;
    }
    return rep;
}

}  // namespace stepcert
