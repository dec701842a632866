#include "stepcert/ffield.hpp"

#include <algorithm>
#include <numeric>

namespace stepcert {

namespace {

// Miller-Rabin round for odd n > 2. Returns false when w certifies n composite.
bool mr_round(u64 n, u64 d, int s, u64 w) {
    w %= n;
    if (w == 0) return true;
    Elem x = pow_mod(w, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n, Rng& rng) {
    // Brent's cycle variant with gcd batching and backtracking; n must be an
    // odd composite.
    if (n % 2 == 0) return 2;
    while (true) {
        const u64 c = rng.range(1, n - 1);
        const auto f = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
        u64 y = rng.range(2, n - 1), x = y, ys = y;
        u64 d = 1, q = 1, r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && d == 1; k += 128) {
                ys = y;
                const u64 lim = std::min<u64>(128, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // the batch ran past the collision; redo single steps from ys
            d = 1;
            while (d == 1) {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out, Rng& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % d == 0) {
            out.push_back(d);
            factor_rec(n / d, out, rng);
            return;
        }
    }
    u64 d = pollard_rho(n, rng);
    factor_rec(d, out, rng);
    factor_rec(n / d, out, rng);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for every n < 2^64.
    for (u64 w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!mr_round(n, d, s, w)) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    if (n <= 1) return out;
    Rng rng(0x5eedULL ^ n);  // fixed seed: factorization is deterministic per n
    factor_rec(n, out, rng);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out;
    if (n == 0) return out;
    std::vector<std::pair<u64, int>> pf;
    u64 rest = n;
    for (u64 q : prime_factors(n)) {
        int e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        pf.emplace_back(q, e);
    }
    out.push_back(1);
    for (auto [q, e] : pf) {
        const size_t sz = out.size();
        u64 qe = 1;
        for (int i = 0; i < e; ++i) {
            qe *= q;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * qe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FieldCtx::FieldCtx(u64 p) : p_(p) {
    if (!is_prime(p)) throw NotPrime("FieldCtx: modulus " + std::to_string(p) + " is not prime");
}

Elem primitive_root(const FieldCtx& ctx) {
    const u64 p = ctx.p();
    if (p == 2) return 1;
    const u64 m = p - 1;
    const std::vector<u64> qs = prime_factors(m);
    for (Elem g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : qs) {
            if (ctx.pow(g, m / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found (impossible for prime p)");
}

SubgroupSpec::SubgroupSpec(FieldCtx ctx, u64 t) : ctx_(ctx), t_(t) {
    const u64 p = ctx_.p();
    if (t == 0 || (p - 1) % t != 0)
        throw NotADivisor("subgroup order " + std::to_string(t) + " does not divide " +
                          std::to_string(p - 1));
    h_ = ctx_.pow(primitive_root(ctx_), (p - 1) / t);
    if (t <= kMaterializeCap) {
        elements_.reserve(t);
        Elem x = 1;
        for (u64 i = 0; i < t; ++i) {
            elements_.push_back(x);
            x = ctx_.mul(x, h_);
        }
        std::sort(elements_.begin(), elements_.end());
    }
}

CosetSpec::CosetSpec(SubgroupSpec subgroup, Elem g) : subgroup_(std::move(subgroup)), g_(g) {
    if (g_ == 0) throw std::invalid_argument("CosetSpec: representative must be nonzero");
    g_ %= ctx().p();
    if (g_ == 0) throw std::invalid_argument("CosetSpec: representative must be nonzero");
    g_inv_ = ctx().inv(g_);
}

bool in_coset(Elem x, const CosetSpec& c) {
    if (x == 0) return false;
    const FieldCtx& F = c.ctx();
    return F.pow(F.mul(x, c.rep_inv()), c.subgroup().order()) == 1;
}

}  // namespace stepcert
