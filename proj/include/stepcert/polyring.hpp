#ifndef STEPCERT_POLYRING_HPP
#define STEPCERT_POLYRING_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stepcert/common.hpp"
#include "stepcert/ffield.hpp"

namespace stepcert {

/// Dense univariate polynomial over F_p.
///
/// Coefficients are stored ascending by degree with no trailing zeros; the
/// zero polynomial is the empty coefficient sequence and has degree() == -1.
/// All operations are exact and return canonical values. Instances are
/// immutable values; sharing across threads is safe.
class DensePoly {
public:
    explicit DensePoly(FieldCtx ctx) : ctx_(ctx) {}
    DensePoly(FieldCtx ctx, std::vector<Elem> coeffs);

    static DensePoly zero(FieldCtx ctx) { return DensePoly(ctx); }
    static DensePoly constant(FieldCtx ctx, u64 c);
    static DensePoly monomial(FieldCtx ctx, u64 c, std::size_t degree);
    /// x - r
    static DensePoly linear_root(FieldCtx ctx, Elem r);

    /// Parses the CLI/config text form: comma-separated residues, ascending
    /// degree ("1,0,1" is 1 + x^2). Values are reduced mod p.
    static DensePoly from_text(FieldCtx ctx, std::string_view text);
    /// Inverse of from_text on canonical input; the zero polynomial prints "0".
    std::string to_text() const;

    const FieldCtx& ctx() const { return ctx_; }
    u64 modulus() const { return ctx_.p(); }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const;
    Elem constant_term() const { return coeffs_.empty() ? 0 : coeffs_[0]; }

    DensePoly operator-() const;
    DensePoly scaled(Elem k) const;
    /// Multiply by x^k.
    DensePoly shifted(std::size_t k) const;
    DensePoly derivative() const;
    /// k-fold formal derivative.
    DensePoly derivative(std::size_t k) const;
    DensePoly pow(u64 e) const;
    Elem eval(Elem x) const;
    DensePoly monic() const;

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    DensePoly& operator+=(const DensePoly& b) { return *this = *this + b; }
    DensePoly& operator-=(const DensePoly& b) { return *this = *this - b; }
    DensePoly& operator*=(const DensePoly& b) { return *this = *this * b; }

    bool operator==(const DensePoly& b) const {
        return ctx_.p() == b.ctx_.p() && coeffs_ == b.coeffs_;
    }
    bool operator!=(const DensePoly& b) const { return !(*this == b); }

private:
    void trim();
    friend void require_same_field(const DensePoly& a, const DensePoly& b);

    FieldCtx ctx_;
    std::vector<Elem> coeffs_;
};

/// Exact division with remainder: a = q*b + r, deg r < deg b.
std::pair<DensePoly, DensePoly> poly_divrem(const DensePoly& a, const DensePoly& b);

/// Monic gcd via Euclid.
DensePoly poly_gcd(const DensePoly& a, const DensePoly& b);

/// Largest k with (x - x0)^k dividing a, by repeated synthetic division.
/// Characteristic-independent; never touches derivatives.
u64 multiplicity_at(const DensePoly& a, Elem x0);

inline DensePoly formal_derivative(const DensePoly& a) { return a.derivative(); }

}  // namespace stepcert

#endif
