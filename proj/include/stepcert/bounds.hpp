#ifndef STEPCERT_BOUNDS_HPP
#define STEPCERT_BOUNDS_HPP

#include <vector>

#include "stepcert/common.hpp"

namespace stepcert {

/// floor(x^(1/k)) by binary search; the result r satisfies r^k <= x < (r+1)^k.
BigInt integer_root(const BigInt& x, unsigned k);

inline u64 integer_root_u64(u64 x, unsigned k) {
    return integer_root(BigInt(x), k).convert_to<u64>();
}

BigInt big_pow(const BigInt& base, unsigned e);

/// Exact data behind the subgroup-size window and the |M| bound.
///
/// Every boolean ultimately comes from one integer inequality:
///   window:  t^(2n+1) * (n+1)^(2n) * (prod m)^2  <  p^(2n)
///   bound:   |M|^(2n)  <=  (4(n+1)(m_1+..+m_n))^(2n) * (prod m)^2 * t^(n+1)
/// The lower window edge is t > c1 with c1 = 2^(2n) * m_n^(4n).
struct BoundReport {
    unsigned n = 0;
    std::vector<u64> m;  // ascending

    BigInt c1;                 // exact lower window constant
    BigInt c2_window_lhs;      // t^(2n+1) * (n+1)^(2n) * (prod m)^2
    BigInt c2_window_rhs;      // p^(2n)
    BigInt c3_coeff;           // (4(n+1)M_n)^(2n) * (prod m)^2
    unsigned c3_size_power = 0;  // 2n
    unsigned c3_t_power = 0;     // n+1

    bool above_c1 = false;
    bool below_c2 = false;
    bool window_ok = false;

    bool bound_holds = false;
    BigInt bound_lhs;    // |M|^(2n)
    BigInt bound_rhs;    // c3_coeff * t^(n+1)
    BigInt margin;       // bound_rhs - bound_lhs (when the bound holds)
    double margin_ratio = 0.0;  // display only, carries no contract
};

/// 2^(2n) * m_n^(4n), the exact lower window constant (m ascending).
BigInt remark1_c1(const std::vector<u64>& m, unsigned n);

/// (4(n+1)(m_1+..+m_n))^(2n) * (prod m)^2, the coefficient in the cleared
/// |M| bound |M|^(2n) <= coeff * t^(n+1).
BigInt remark1_bound_coeff(const std::vector<u64>& m, unsigned n);

/// Remark-1 constants and the exact window test for (m, n, p, t).
BoundReport constants_remark1(const std::vector<u64>& m, unsigned n, u64 p, u64 t);

/// Adds the |M| bound comparison to a report produced by constants_remark1.
void apply_size_bound(BoundReport& report, u64 t, u64 size);

struct GvCheck {
    bool hypothesis_ok = false;  // t < (p-1)/((p-1)^(1/4)+1), exact
    bool bound_ok = false;       // size^3 <= 64 t^2
    BigInt lhs;                  // size^3
    BigInt rhs;                  // 64 t^2
};

GvCheck gv_check(u64 t, u64 intersection_size, u64 p);

struct Theorem1Check {
    bool size_hypothesis_ok = false;  // 32 n (n+1)^(20n) <= t
    bool p_hypothesis_ok = false;     // 4 n t (t^(1/(2n+1)) + 1) <= p, exact
    bool bound_ok = false;            // size <= 4(n+1)(floor(t^(1/(2n+1)))+2)^(n+1)
    BigInt bound_value;
};

Theorem1Check theorem1_check(u64 t, unsigned n, u64 intersection_size, u64 p);

}  // namespace stepcert

#endif
