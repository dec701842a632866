#include "stepcert/polyring.hpp"

#include <algorithm>
#include <charconv>
#include <span>

namespace stepcert {

namespace {

constexpr std::size_t kSchoolbookCutoff = 64;

void mul_schoolbook(std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out,
                    u64 p) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Elem ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = add_mod(out[i + j], mul_mod(ai, b[j], p), p);
        }
    }
}

// out += a*b, out must have size >= a.size()+b.size()-1. Karatsuba above the
// schoolbook cutoff; uneven operand lengths are handled by the split itself.
void mul_into(std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out, u64 p) {
    if (a.empty() || b.empty()) return;
    if (std::min(a.size(), b.size()) <= kSchoolbookCutoff) {
        mul_schoolbook(a, b, out, p);
        return;
    }
    const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    std::span<const Elem> a0 = a.subspan(0, std::min(h, a.size()));
    std::span<const Elem> a1 = a.size() > h ? a.subspan(h) : std::span<const Elem>{};
    std::span<const Elem> b0 = b.subspan(0, std::min(h, b.size()));
    std::span<const Elem> b1 = b.size() > h ? b.subspan(h) : std::span<const Elem>{};

    if (a1.empty() || b1.empty()) {
        // Only cross terms besides a0*b0; recurse directly.
        mul_into(a0, b0, out, p);
        if (!a1.empty()) mul_into(a1, b, out.subspan(h), p);
        if (!b1.empty()) mul_into(a, b1, out.subspan(h), p);
        return;
    }

    // z0 = a0*b0, z2 = a1*b1, z1 = (a0+a1)(b0+b1) - z0 - z2
    std::vector<Elem> z0(a0.size() + b0.size() - 1, 0);
    std::vector<Elem> z2(a1.size() + b1.size() - 1, 0);
    mul_into(a0, b0, z0, p);
    mul_into(a1, b1, z2, p);

    std::vector<Elem> sa(std::max(a0.size(), a1.size()), 0);
    std::vector<Elem> sb(std::max(b0.size(), b1.size()), 0);
    for (std::size_t i = 0; i < sa.size(); ++i)
        sa[i] = add_mod(i < a0.size() ? a0[i] : 0, i < a1.size() ? a1[i] : 0, p);
    for (std::size_t i = 0; i < sb.size(); ++i)
        sb[i] = add_mod(i < b0.size() ? b0[i] : 0, i < b1.size() ? b1[i] : 0, p);

    std::vector<Elem> z1(sa.size() + sb.size() - 1, 0);
    mul_into(sa, sb, z1, p);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = sub_mod(z1[i], z0[i], p);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = sub_mod(z1[i], z2[i], p);

    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = add_mod(out[i], z0[i], p);
    for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] = add_mod(out[i + h], z1[i], p);
    for (std::size_t i = 0; i < z2.size(); ++i)
        out[i + 2 * h] = add_mod(out[i + 2 * h], z2[i], p);
}

}  // namespace

void require_same_field(const DensePoly& a, const DensePoly& b) {
    if (a.ctx_.p() != b.ctx_.p())
        throw ModulusMismatch("polynomial operands over F_" + std::to_string(a.ctx_.p()) +
                              " and F_" + std::to_string(b.ctx_.p()));
}

DensePoly::DensePoly(FieldCtx ctx, std::vector<Elem> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
    for (Elem& c : coeffs_) c %= ctx_.p();
    trim();
}

void DensePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly DensePoly::constant(FieldCtx ctx, u64 c) {
    return DensePoly(ctx, std::vector<Elem>{c % ctx.p()});
}

DensePoly DensePoly::monomial(FieldCtx ctx, u64 c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c % ctx.p();
    return DensePoly(ctx, std::move(v));
}

DensePoly DensePoly::linear_root(FieldCtx ctx, Elem r) {
    return DensePoly(ctx, std::vector<Elem>{ctx.neg(r % ctx.p()), 1});
}

DensePoly DensePoly::from_text(FieldCtx ctx, std::string_view text) {
    std::vector<Elem> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        u64 value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("DensePoly::from_text: bad coefficient '" +
                                        std::string(tok) + "'");
        coeffs.push_back(value % ctx.p());
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return DensePoly(ctx, std::move(coeffs));
}

std::string DensePoly::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs_[i]);
    }
    return s;
}

Elem DensePoly::leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return coeffs_.back();
}

DensePoly DensePoly::operator-() const {
    DensePoly r(ctx_);
    r.coeffs_.reserve(coeffs_.size());
    for (Elem c : coeffs_) r.coeffs_.push_back(ctx_.neg(c));
    return r;
}

DensePoly DensePoly::scaled(Elem k) const {
    k %= ctx_.p();
    if (k == 0) return DensePoly(ctx_);
    DensePoly r(ctx_);
    r.coeffs_.reserve(coeffs_.size());
    for (Elem c : coeffs_) r.coeffs_.push_back(ctx_.mul(c, k));
    r.trim();
    return r;
}

DensePoly DensePoly::shifted(std::size_t k) const {
    if (coeffs_.empty() || k == 0) return k == 0 ? *this : DensePoly(ctx_, coeffs_);
    DensePoly r(ctx_);
    r.coeffs_.assign(k, 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

DensePoly DensePoly::derivative() const {
    DensePoly r(ctx_);
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = ctx_.mul(coeffs_[i], ctx_.reduce(i));
    r.trim();
    return r;
}

DensePoly DensePoly::derivative(std::size_t k) const {
    DensePoly r = *this;
    for (std::size_t i = 0; i < k && !r.is_zero(); ++i) r = r.derivative();
    return r;
}

DensePoly DensePoly::pow(u64 e) const {
    DensePoly result = DensePoly::constant(ctx_, 1);
    DensePoly base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Elem DensePoly::eval(Elem x) const {
    x %= ctx_.p();
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), coeffs_[i]);
    return acc;
}

DensePoly DensePoly::monic() const {
    if (coeffs_.empty()) return *this;
    return scaled(ctx_.inv(coeffs_.back()));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    require_same_field(a, b);
    DensePoly r(a.ctx_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = a.ctx_.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    require_same_field(a, b);
    DensePoly r(a.ctx_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = a.ctx_.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    require_same_field(a, b);
    DensePoly r(a.ctx_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    mul_into(a.coeffs_, b.coeffs_, r.coeffs_, a.ctx_.p());
    r.trim();
    return r;
}

std::pair<DensePoly, DensePoly> poly_divrem(const DensePoly& a, const DensePoly& b) {
    require_same_field(a, b);
    const FieldCtx& F = a.ctx();
    if (b.is_zero()) throw DivisionByZeroPoly("poly_divrem: zero divisor");
    if (a.is_zero() || a.degree() < b.degree()) return {DensePoly(F), a};

    const u64 p = F.p();
    std::vector<Elem> rem = a.coeffs();
    const std::vector<Elem>& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const Elem lead_inv = F.inv(d.back());
    std::vector<Elem> q(rem.size() - db, 0);

    for (std::size_t i = rem.size(); i-- > db;) {
        const Elem top = rem[i];
        if (top == 0) continue;
        const Elem factor = mul_mod(top, lead_inv, p);
        q[i - db] = factor;
        // rem -= factor * d * x^(i-db); top coefficient cancels by construction
        const std::size_t base = i - db;
        for (std::size_t j = 0; j < db; ++j)
            rem[base + j] = sub_mod(rem[base + j], mul_mod(factor, d[j], p), p);
        rem[i] = 0;
    }
    return {DensePoly(F, std::move(q)), DensePoly(F, std::move(rem))};
}

DensePoly poly_gcd(const DensePoly& a, const DensePoly& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw BothZero("poly_gcd(0, 0)");
    DensePoly x = a, y = b;
    while (!y.is_zero()) {
        DensePoly r = poly_divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

u64 multiplicity_at(const DensePoly& a, Elem x0) {
    if (a.is_zero()) throw ZeroPolynomial("multiplicity_at: zero polynomial");
    const FieldCtx& F = a.ctx();
    const u64 p = F.p();
    x0 %= p;
    u64 mult = 0;
    std::vector<Elem> cur = a.coeffs();
    while (true) {
        // one synthetic-division pass by (x - x0): quotient in place, Horner remainder
        Elem carry = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            const Elem next = add_mod(mul_mod(carry, x0, p), cur[i], p);
            cur[i] = carry;
            carry = next;
        }
        if (carry != 0) return mult;
        ++mult;
        cur.pop_back();  // top slot is the unused degree-d position
        if (cur.empty()) return mult;
    }
}

}  // namespace stepcert
