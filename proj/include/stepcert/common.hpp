#ifndef STEPCERT_COMMON_HPP
#define STEPCERT_COMMON_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stepcert {

using Elem = std::uint64_t;          // canonical residue in [0, p)
using BigInt = boost::multiprecision::cpp_int;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---- error types ----------------------------------------------------------

struct NotPrime : std::invalid_argument {
    explicit NotPrime(const std::string& m) : std::invalid_argument(m) {}
};
struct NotADivisor : std::invalid_argument {
    explicit NotADivisor(const std::string& m) : std::invalid_argument(m) {}
};
struct ModulusMismatch : std::invalid_argument {
    explicit ModulusMismatch(const std::string& m) : std::invalid_argument(m) {}
};
struct DivisionByZeroPoly : std::domain_error {
    explicit DivisionByZeroPoly(const std::string& m) : std::domain_error(m) {}
};
struct BothZero : std::domain_error {
    explicit BothZero(const std::string& m) : std::domain_error(m) {}
};
struct ZeroPolynomial : std::domain_error {
    explicit ZeroPolynomial(const std::string& m) : std::domain_error(m) {}
};
struct DegenerateParams : std::domain_error {
    explicit DegenerateParams(const std::string& m) : std::domain_error(m) {}
};
struct TrivialKernel : std::runtime_error {
    explicit TrivialKernel(const std::string& m) : std::runtime_error(m) {}
};
struct DegreeOverflow : std::domain_error {
    explicit DegreeOverflow(const std::string& m) : std::domain_error(m) {}
};
struct ZeroPsi : std::domain_error {
    explicit ZeroPsi(const std::string& m) : std::domain_error(m) {}
};
struct FieldTooLarge : std::invalid_argument {
    explicit FieldTooLarge(const std::string& m) : std::invalid_argument(m) {}
};
struct FamilyTooLarge : std::invalid_argument {
    explicit FamilyTooLarge(const std::string& m) : std::invalid_argument(m) {}
};
struct EmptyFamily : std::invalid_argument {
    explicit EmptyFamily(const std::string& m) : std::invalid_argument(m) {}
};
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& m) : std::runtime_error(m) {}
};

// ---- modular word arithmetic ----------------------------------------------
// All helpers assume operands already reduced to [0, p). Valid for any p < 2^64.

inline Elem add_mod(Elem a, Elem b, Elem p) {
    return (a >= p - b && b != 0) ? a - (p - b) : a + b;
}

inline Elem sub_mod(Elem a, Elem b, Elem p) {
    return (a >= b) ? a - b : a + (p - b);
}

inline Elem neg_mod(Elem a, Elem p) { return a == 0 ? 0 : p - a; }

inline Elem mul_mod(Elem a, Elem b, Elem p) {
    return static_cast<Elem>((u128)a * b % p);
}

inline Elem pow_mod(Elem base, u64 exp, Elem p) {
    Elem r = 1 % p;
    Elem x = base % p;
    while (exp) {
        if (exp & 1) r = mul_mod(r, x, p);
        x = mul_mod(x, x, p);
        exp >>= 1;
    }
    return r;
}

// Inverse of a unit mod prime p.
inline Elem inv_mod(Elem a, Elem p) {
    if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
    return pow_mod(a, p - 2, p);
}

// ---- deterministic RNG -----------------------------------------------------
// mt19937_64 has a standard-mandated output sequence; the bounded draw below is
// rejection-based, so every stream is reproducible across platforms.

class Rng {
public:
    explicit Rng(u64 seed) : eng_(seed) {}

    u64 next() { return eng_(); }

    // uniform in [0, n), unbiased
    u64 below(u64 n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        const u64 limit = UINT64_MAX - UINT64_MAX % n;
        u64 r;
        do {
            r = eng_();
        } while (r >= limit);
        return r % n;
    }

    // uniform in [lo, hi] inclusive
    u64 range(u64 lo, u64 hi) {
        return lo + below(hi - lo + 1);
    }

    double unit() { return (eng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

}  // namespace stepcert

#endif
