#include "stepcert/bounds.hpp"

#include <stdexcept>

namespace stepcert {

BigInt big_pow(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

BigInt integer_root(const BigInt& x, unsigned k) {
    if (x < 0) throw std::invalid_argument("integer_root: negative radicand");
    if (k == 0) throw std::invalid_argument("integer_root: zeroth root");
    if (k == 1 || x < 2) return x;

    // hi = 2^(ceil(bits/k)) satisfies hi^k > x
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
    BigInt lo = 0, hi = BigInt(1) << ((bits + k - 1) / k);
    while (lo < hi) {  // invariant: lo^k <= x < (hi+1)^k
        const BigInt mid = (lo + hi + 1) / 2;
        if (big_pow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

namespace {

void require_sorted_m(const std::vector<u64>& m, unsigned n) {
    if (n < 2) throw std::invalid_argument("remark1: n >= 2 required");
    if (m.size() != n) throw std::invalid_argument("remark1: m size != n");
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i - 1] > m[i]) throw std::invalid_argument("remark1: m must be sorted ascending");
}

}  // namespace

BigInt remark1_c1(const std::vector<u64>& m, unsigned n) {
    require_sorted_m(m, n);
    return big_pow(BigInt(2), 2 * n) * big_pow(BigInt(m.back()), 4 * n);
}

BigInt remark1_bound_coeff(const std::vector<u64>& m, unsigned n) {
    require_sorted_m(m, n);
    BigInt prod_m = 1;
    u64 sum_m = 0;
    for (u64 mi : m) {
        prod_m *= mi;
        sum_m += mi;
    }
    return big_pow(BigInt(4) * (n + 1) * sum_m, 2 * n) * prod_m * prod_m;
}

BoundReport constants_remark1(const std::vector<u64>& m, unsigned n, u64 p, u64 t) {
    require_sorted_m(m, n);

    BoundReport r;
    r.n = n;
    r.m = m;

    BigInt prod_m = 1;
    for (u64 mi : m) prod_m *= mi;

    r.c1 = remark1_c1(m, n);

    r.c2_window_lhs = big_pow(BigInt(t), 2 * n + 1) * big_pow(BigInt(n) + 1, 2 * n) *
                      prod_m * prod_m;
    r.c2_window_rhs = big_pow(BigInt(p), 2 * n);

    r.c3_coeff = remark1_bound_coeff(m, n);
    r.c3_size_power = 2 * n;
    r.c3_t_power = n + 1;

    r.above_c1 = BigInt(t) > r.c1;
    r.below_c2 = r.c2_window_lhs < r.c2_window_rhs;
    r.window_ok = r.above_c1 && r.below_c2;
    return r;
}

void apply_size_bound(BoundReport& report, u64 t, u64 size) {
    report.bound_lhs = big_pow(BigInt(size), report.c3_size_power);
    report.bound_rhs = report.c3_coeff * big_pow(BigInt(t), report.c3_t_power);
    report.bound_holds = report.bound_lhs <= report.bound_rhs;
    report.margin = report.bound_rhs - report.bound_lhs;
    report.margin_ratio =
        report.bound_rhs == 0
            ? 0.0
            : report.margin.convert_to<double>() / report.bound_rhs.convert_to<double>();
}

GvCheck gv_check(u64 t, u64 intersection_size, u64 p) {
    GvCheck r;
    const BigInt pm1 = BigInt(p) - 1;

    // t < (p-1)/((p-1)^(1/4)+1). Bracket with the floor of the fourth root,
    // and settle the in-between case by the cleared quartic inequality
    //   t^4 (p-1) < (p-1-t)^4.
    const BigInt root = integer_root(pm1, 4);
    if (BigInt(t) * (root + 1) >= pm1) {
        r.hypothesis_ok = false;
    } else if (BigInt(t) * (root + 2) <= pm1) {
        r.hypothesis_ok = true;
    } else {
        const BigInt rest = pm1 - t;
        r.hypothesis_ok = big_pow(BigInt(t), 4) * pm1 < big_pow(rest, 4);
    }

    r.lhs = big_pow(BigInt(intersection_size), 3);
    r.rhs = BigInt(64) * BigInt(t) * t;
    r.bound_ok = r.lhs <= r.rhs;
    return r;
}

Theorem1Check theorem1_check(u64 t, unsigned n, u64 intersection_size, u64 p) {
    if (n < 1) throw std::invalid_argument("theorem1_check: n >= 1 required");
    Theorem1Check r;

    // 32 n 2^(20 n log(n+1)) <= t, with log read base 2 so the constant is the
    // exact integer 32 n (n+1)^(20n).
    r.size_hypothesis_ok = BigInt(32) * n * big_pow(BigInt(n) + 1, 20 * n) <= t;

    // 4 n t (t^(1/(2n+1)) + 1) <= p, bracketed via the floor root and settled
    // exactly by clearing the fractional power.
    const BigInt root = integer_root(BigInt(t), 2 * n + 1);
    const BigInt base = BigInt(4) * n * t;
    if (base * (root + 2) <= p) {
        r.p_hypothesis_ok = true;
    } else if (base * (root + 1) > p) {
        r.p_hypothesis_ok = false;
    } else {
        const BigInt slack = BigInt(p) - base;  // need base * t^(1/(2n+1)) <= slack
        r.p_hypothesis_ok = slack >= 0 && big_pow(base, 2 * n + 1) * t <= big_pow(slack, 2 * n + 1);
    }

    // Conservative bound: +2 over-approximates the real root +1.
    r.bound_value = BigInt(4) * (n + 1) * big_pow(root + 2, n + 1);
    r.bound_ok = BigInt(intersection_size) <= r.bound_value;
    return r;
}

}  // namespace stepcert
