#ifndef STEPCERT_FFIELD_HPP
#define STEPCERT_FFIELD_HPP

#include <vector>

#include "stepcert/common.hpp"

namespace stepcert {

/// Deterministic primality test (Miller-Rabin with a witness set that is
/// exact for all 64-bit inputs).
bool is_prime(u64 n);

/// Prime factorization of a word-size integer by trial division plus
/// Pollard rho. Returns the distinct prime factors, ascending.
std::vector<u64> prime_factors(u64 n);

/// All divisors of n, ascending.
std::vector<u64> divisors(u64 n);

/// The prime field F_p. Elements are canonical residues in [0, p).
class FieldCtx {
public:
    explicit FieldCtx(u64 p);

    u64 p() const { return p_; }

    Elem reduce(u64 a) const { return a % p_; }
    Elem add(Elem a, Elem b) const { return add_mod(a, b, p_); }
    Elem sub(Elem a, Elem b) const { return sub_mod(a, b, p_); }
    Elem neg(Elem a) const { return neg_mod(a, p_); }
    Elem mul(Elem a, Elem b) const { return mul_mod(a, b, p_); }
    Elem pow(Elem a, u64 e) const { return pow_mod(a, e, p_); }
    Elem inv(Elem a) const { return inv_mod(a, p_); }

    bool operator==(const FieldCtx& other) const { return p_ == other.p_; }
    bool operator!=(const FieldCtx& other) const { return p_ != other.p_; }

private:
    u64 p_;
};

/// Smallest primitive root of F_p*, i.e. the least gamma in [2, p-1] of
/// multiplicative order p-1. Deterministic. (p = 2 yields 1.)
Elem primitive_root(const FieldCtx& ctx);

/// Subgroup of F_p* of order t (t must divide p-1). The generator is
/// primitive_root(ctx)^((p-1)/t), so construction is deterministic.
/// Elements are materialized, sorted ascending, only when t <= 10^6;
/// membership always uses the power test.
class SubgroupSpec {
public:
    static constexpr u64 kMaterializeCap = 1000000;

    SubgroupSpec(FieldCtx ctx, u64 t);

    const FieldCtx& ctx() const { return ctx_; }
    u64 order() const { return t_; }
    Elem generator() const { return h_; }
    bool materialized() const { return !elements_.empty() || t_ == 0; }
    const std::vector<Elem>& elements() const { return elements_; }

    /// x in Gamma, via x^t == 1 (and x != 0).
    bool member(Elem x) const {
        return x != 0 && ctx_.pow(x, t_) == 1;
    }

private:
    FieldCtx ctx_;
    u64 t_;
    Elem h_;
    std::vector<Elem> elements_;
};

inline SubgroupSpec subgroup_of_order(const FieldCtx& ctx, u64 t) {
    return SubgroupSpec(ctx, t);
}

/// Coset g*Gamma of a subgroup. Membership of x is (x/g)^t == 1.
class CosetSpec {
public:
    CosetSpec(SubgroupSpec subgroup, Elem g);

    const SubgroupSpec& subgroup() const { return subgroup_; }
    const FieldCtx& ctx() const { return subgroup_.ctx(); }
    Elem rep() const { return g_; }
    Elem rep_inv() const { return g_inv_; }

private:
    SubgroupSpec subgroup_;
    Elem g_;
    Elem g_inv_;
};

bool in_coset(Elem x, const CosetSpec& c);

}  // namespace stepcert

#endif
