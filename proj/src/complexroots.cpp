#include "stepcert/complexroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stepcert/bounds.hpp"

namespace stepcert {

namespace {

constexpr std::size_t kMaxDegree = 256;

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

Complex pow_u64(Complex base, u64 e) {
    Complex r = 1.0;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool less_re_im(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs) {
    if (coeffs.size() < 2)
        throw std::invalid_argument("complex_roots: degree >= 1 required");
    if (coeffs.size() - 1 > kMaxDegree)
        throw std::invalid_argument("complex_roots: degree exceeds 256");
    if (std::abs(coeffs.back()) == 0.0)
        throw std::invalid_argument("complex_roots: zero leading coefficient");

    double norm = 0.0;
    for (const Complex& c : coeffs) norm = std::max(norm, std::abs(c));

    // monic working copy; zero roots are stripped before iterating
    std::vector<Complex> work(coeffs);
    for (Complex& c : work) c /= coeffs.back();
    std::vector<Complex> roots;
    while (work.size() > 1 && std::abs(work.front()) == 0.0) {
        roots.push_back(0.0);
        work.erase(work.begin());
    }

    const std::size_t deg = work.size() - 1;
    if (deg > 0) {
        std::vector<Complex> deriv(deg);
        for (std::size_t i = 1; i <= deg; ++i) deriv[i - 1] = work[i] * double(i);

        // initial guesses on a circle of radius |c0|^(1/deg), phase-offset to
        // dodge symmetric stalls
        const double radius = std::max(std::pow(std::abs(work[0]), 1.0 / double(deg)), 0.5);
        std::vector<Complex> z(deg);
        for (std::size_t j = 0; j < deg; ++j) {
            const double angle = 2.0 * std::numbers::pi * double(j) / double(deg) + 0.4;
            z[j] = std::polar(radius, angle);
        }

        for (int iter = 0; iter < 800; ++iter) {
            double max_step = 0.0, max_abs = 0.0;
            for (std::size_t j = 0; j < deg; ++j) {
                Complex denom = 1.0;
                for (std::size_t k = 0; k < deg; ++k) {
                    if (k == j) continue;
                    Complex d = z[j] - z[k];
                    if (std::abs(d) < 1e-300) d = Complex(1e-300, 0.0);
                    denom *= d;
                }
                const Complex step = horner(work, z[j]) / denom;
                z[j] -= step;
                max_step = std::max(max_step, std::abs(step));
                max_abs = std::max(max_abs, std::abs(z[j]));
            }
            if (max_step < 1e-14 * (1.0 + max_abs)) break;
        }

        for (std::size_t j = 0; j < deg; ++j) {
            for (int it = 0; it < 4; ++it) {
                const Complex d = horner(deriv, z[j]);
                if (std::abs(d) < 1e-300) break;
                z[j] -= horner(work, z[j]) / d;
            }
            roots.push_back(z[j]);
        }
    }

    for (const Complex& r : roots) {
        const double bound =
            kRootResidualTol * std::pow(1.0 + std::abs(r), double(coeffs.size() - 1)) * norm;
        if (std::abs(horner(coeffs, r)) > bound)
            throw NoConvergence("complex_roots: residual above tolerance");
    }
    std::sort(roots.begin(), roots.end(), less_re_im);
    return roots;
}

std::vector<Complex> enumerate_M_complex(const std::vector<std::vector<double>>& polys, u64 t,
                                         const std::vector<Complex>& reps) {
    if (polys.size() < 2) throw std::invalid_argument("enumerate_M_complex: n >= 2 required");
    if (reps.size() != polys.size())
        throw std::invalid_argument("enumerate_M_complex: reps count != n");
    if (t == 0) throw std::invalid_argument("enumerate_M_complex: t >= 1 required");
    for (const Complex& g : reps)
        if (std::abs(g) == 0.0)
            throw std::invalid_argument("enumerate_M_complex: zero representative");

    std::vector<std::size_t> degree(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].size() < 2 || polys[i].back() == 0.0)
            throw std::invalid_argument("enumerate_M_complex: factors must have degree >= 1");
        degree[i] = polys[i].size() - 1;
    }
    const std::size_t anchor =
        std::min_element(degree.begin(), degree.end()) - degree.begin();
    if (degree[anchor] * t > kMaxDegree)
        throw std::invalid_argument("enumerate_M_complex: anchor resolvent degree exceeds 256");

    std::vector<std::vector<Complex>> cpolys(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        cpolys[i].assign(polys[i].begin(), polys[i].end());

    const auto residual = [&](std::size_t i, Complex z) {
        return std::abs(pow_u64(horner(cpolys[i], z), t) - pow_u64(reps[i], t));
    };

    // f_anchor(z)^t = g^t  <=>  f_anchor(z) = g * zeta for a t-th root of
    // unity zeta; each zeta contributes a small, well-conditioned solve.
    std::vector<Complex> accepted;
    for (u64 k = 0; k < t; ++k) {
        const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(t));
        std::vector<Complex> shifted = cpolys[anchor];
        shifted[0] -= reps[anchor] * zeta;
        for (const Complex& z : complex_roots(shifted)) {
            bool ok = true;
            for (std::size_t i = 0; i < polys.size() && ok; ++i)
                ok = residual(i, z) <= kAcceptTol;
            if (ok) accepted.push_back(z);
        }
    }

    std::sort(accepted.begin(), accepted.end(), less_re_im);
    std::vector<Complex> dedup;
    for (const Complex& z : accepted) {
        bool fresh = true;
        for (const Complex& w : dedup) {
            if (std::abs(z - w) <= kDedupTol) {
                fresh = false;
                break;
            }
        }
        if (fresh) dedup.push_back(z);
    }
    return dedup;
}

Theorem3Report verify_theorem3_instance(const std::vector<std::vector<double>>& polys, u64 t,
                                        const std::vector<Complex>& reps) {
    Theorem3Report rep;
    rep.t = t;
    rep.n = static_cast<unsigned>(polys.size());
    for (const auto& f : polys) {
        if (f.size() < 2) throw std::invalid_argument("verify_theorem3_instance: bad factor");
        rep.m.push_back(static_cast<u64>(f.size() - 1));
    }
    std::sort(rep.m.begin(), rep.m.end());

    rep.c1 = remark1_c1(rep.m, rep.n);
    if (BigInt(t) <= rep.c1) {
        rep.skipped = true;
        rep.skip_reason = "t below the Remark-2 threshold";
        return rep;
    }

    rep.members = enumerate_M_complex(polys, t, reps);
    rep.M_size = rep.members.size();

    std::vector<std::vector<Complex>> cpolys(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        cpolys[i].assign(polys[i].begin(), polys[i].end());
    for (const Complex& z : rep.members) {
        for (std::size_t i = 0; i < polys.size(); ++i) {
            Complex acc = 0.0;
            for (std::size_t c = cpolys[i].size(); c-- > 0;) acc = acc * z + cpolys[i][c];
            const double res = std::abs(pow_u64(acc, t) - pow_u64(reps[i], t));
            rep.max_residual = std::max(rep.max_residual, res);
        }
    }

    rep.bound_lhs = big_pow(BigInt(rep.M_size), 2 * rep.n);
    rep.bound_rhs = remark1_bound_coeff(rep.m, rep.n) * big_pow(BigInt(t), rep.n + 1);
    rep.bound_ok = rep.bound_lhs <= rep.bound_rhs;
    return rep;
}

}  // namespace stepcert
