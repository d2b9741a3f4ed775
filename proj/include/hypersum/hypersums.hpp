#pragma once

// Hypersums S^(L)_k(N): the four parity-family closed forms, and the
// factored determinant form in the Faulhaber variable y = N(N+L+1).

#include "hypersum/coefficients.hpp"
#include "hypersum/ltt.hpp"
#include "hypersum/polynomial.hpp"
#include "hypersum/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hypersum {

/// x = 2N+L+1 and y = N(N+L+1); x^2 = 4y + (L+1)^2.
struct XVariable {
    int level = 0;
    Rat n;
    Rat x;
    Rat y;

    XVariable(int level_, const Rat& n_) : level(level_), n(n_), x(2 * n_ + level_ + 1), y(n_ * (n_ + level_ + 1)) {}
};

/// S^(L)_k = prefactor * sqrt(4y+(L+1)^2)^A * prod_q (y + offset_q) * core_scale * core(y).
struct FactoredHypersum {
    int level = 0;
    long k = 1;
    Rat prefactor;
    int sqrt_exponent = 0;
    std::vector<long> linear_offsets;
    PolyY core;      // primitive integer coefficients, positive leading coefficient
    Rat core_scale;  // the determinant is core_scale * core
    long n = 1;      // determinant order floor((k+1)/2)
    long m = 0;      // D_m conjugation index
    bool degenerate_core = false;  // set when deg(core) < n-1

    Poly delta() const { return Poly(core_scale) * core.poly(); }

    /// Value at y, with `x` standing for the square root sqrt(4y+(L+1)^2).
    Rat evaluate(const Rat& y, const Rat& x) const {
        Rat v = prefactor * core_scale * core(y);
        v *= pow_rat(x, static_cast<unsigned long>(sqrt_exponent));
        for (long off : linear_offsets) v *= y + off;
        return v;
    }

    Rat eval_at_N(const Rat& n_value) const {
        const XVariable v(level, n_value);
        return evaluate(v.y, v.x);
    }

    /// Everything except the radical, as a polynomial in y.
    Poly y_part() const {
        Poly out = Poly(prefactor * core_scale) * core.poly();
        for (long off : linear_offsets) out *= Poly{Rat(off), Rat(1)};
        return out;
    }

    friend bool operator==(const FactoredHypersum&, const FactoredHypersum&) = default;
};

namespace detail {

// (x+lo)(x+lo+2)...(x+hi); empty product = 1.
inline Rat chain(const Rat& x, long lo, long hi) {
    Rat r = 1;
    for (long j = lo; j <= hi; j += 2) r *= x + j;
    return r;
}

inline std::vector<CoeffTable> hyper_levels(const CoeffProvider& coeffs, int max_level, long depth) {
    std::vector<CoeffTable> out;
    const CoeffTable base = coeffs.level0(depth);
    out.push_back(base);
    for (int l = 1; l <= max_level; ++l) out.push_back(convolve(out.back(), base, l));
    return out;
}

inline LttSeries<Rat> offsets_product(int level, std::size_t order) {
    auto s = LttSeries<Rat>::identity(order);
    for (int q = 0; q <= level / 2; ++q) {
        const long r = level + 1 - 2 * q;
        s = ltt_mul(s, ltt_one_minus(Rat(r * r), order));
    }
    return s;
}

inline void check_args(int level, long k) {
    if (level < 0) throw std::invalid_argument("hyper level L must be >= 0");
    if (k < 1) throw std::invalid_argument("power k must be >= 1");
}

}  // namespace detail

/// Parity-family closed form at x = 2N+L+1 (k = 0 reduces to S^(L-1)_1).
inline Rat theorem2_eval(int level, long k, const Rat& n_value, const CoeffProvider& coeffs = default_coeffs()) {
    if (level < 0) throw std::invalid_argument("hyper level L must be >= 0");
    if (k < 0) throw std::invalid_argument("power k must be >= 0");
    if (k == 0) return level == 0 ? n_value : theorem2_eval(level - 1, 1, n_value, coeffs);

    const XVariable v(level, n_value);
    const Rat& x = v.x;
    const bool even_k = k % 2 == 0;
    const bool even_level = level % 2 == 0;
    const long p = even_k ? k / 2 : (k - 1) / 2;

    // Family selection:
    //   L=2M,   k=2p   -> A      L=2M+1, k=2p   -> B
    //   L=2M-1, k=2p+1 -> C      L=2M,   k=2p+1 -> D
    enum class Family { A, B, C, D };
    Family fam;
    long big_m;
    if (even_k) {
        fam = even_level ? Family::A : Family::B;
        big_m = even_level ? level / 2 : (level - 1) / 2;
    } else {
        fam = even_level ? Family::D : Family::C;
        big_m = even_level ? level / 2 : (level + 1) / 2;
    }

    const long depth = p + big_m;
    const auto tables = detail::hyper_levels(coeffs, level + 1, depth);
    auto C = [&](long lv, long idx) { return tables[static_cast<std::size_t>(lv)].at_or_zero(idx); };
    const FactorialTable fact(2 * depth + 3);
    auto inv = [&](long i) { return fact.reciprocal(i); };

    Rat total = 0;
    for (long q = 0; q <= depth; ++q) {
        Rat first, second = 0;
        switch (fam) {
            case Family::A:
                first = C(2 * big_m, depth - q) * pow_rat(x, 2 * q + 1) * inv(2 * q + 1);
                for (long s = 1; s <= big_m; ++s)
                    second += C(2 * big_m + 2 - 2 * s, depth + 1 - q - s) * inv(2 * s - 1) * x *
                              detail::chain(x, -(2 * s - 3), 2 * s - 3);
                second *= inv(2 * q + 1);
                break;
            case Family::B:
                first = C(2 * big_m + 1, depth - q) * pow_rat(x, 2 * q + 2) * inv(2 * q + 2);
                for (long s = 1; s <= big_m; ++s)
                    second += C(2 * big_m + 2 - 2 * s, depth + 1 - q - s) * inv(2 * s) * x *
                              detail::chain(x, -(2 * s - 2), 2 * s - 2);
                second *= inv(2 * q + 1);
                break;
            case Family::C:
                first = C(2 * big_m - 1, depth - q) * pow_rat(x, 2 * q + 1) * inv(2 * q + 1);
                for (long s = 1; s <= big_m; ++s)
                    second += C(2 * big_m - 2 * s, depth + 1 - q - s) * inv(2 * s - 1) *
                              detail::chain(x, -(2 * s - 2), 2 * s - 2);
                second *= inv(2 * q);
                break;
            case Family::D:
                first = C(2 * big_m, depth - q) * (pow_rat(x, 2 * q + 2) - 1) * inv(2 * q + 2);
                for (long s = 1; s <= big_m; ++s)
                    second += C(2 * big_m - 2 * s, depth + 1 - q - s) * inv(2 * s) *
                              detail::chain(x, -(2 * s - 1), 2 * s - 1);
                second *= inv(2 * q);
                break;
        }
        total += first - second;
    }

    long two_power = 0;
    switch (fam) {
        case Family::A: two_power = 2 * p + 1 + 2 * big_m; break;
        case Family::B: two_power = 2 * p + 2 + 2 * big_m; break;
        case Family::C: two_power = 2 * p + 1 + 2 * big_m; break;
        case Family::D: two_power = 2 * p + 2 + 2 * big_m; break;
    }
    return Rat(factorial(k)) * total / pow2(two_power);
}

/// a_1 .. a_n: the s x s scalar determinants whose weighted sum
/// sum_s (4y)^{n-s} a_s is the core determinant.
inline std::vector<Rat> prop1_coeffs(int level, long k) {
    detail::check_args(level, k);
    const long n = (k + 1) / 2;
    const long r = level + 1;
    std::vector<Rat> a;
    for (long s = 1; s <= n; ++s) {
        const auto order = static_cast<std::size_t>(s);
        auto series = ltt_pow(ltt_one_minus(Rat(r * r), order), static_cast<unsigned>(n + 1 - s));
        series = ltt_mul(series, detail::offsets_product(level, order));
        const auto powered = ltt_pow(ltt_from_harmonic(Harmonic::P, order), static_cast<unsigned>(level + 1));
        const auto conj = d_conjugate(DiagFactorial{level + k + 3 - 2 * s}, powered);
        const auto base = series * conj;
        a.push_back(det_base_tower(base, Tower<Rat>::unit(order, order - 1)));
    }
    return a;
}

/// Core determinant reassembled from prop1_coeffs.
inline Poly delta_from_prop1(int level, long k) {
    const auto a = prop1_coeffs(level, k);
    const long n = static_cast<long>(a.size());
    Poly delta;
    for (long s = 1; s <= n; ++s) {
        const auto e = static_cast<std::size_t>(n - s);
        delta += Poly::monomial(Rat(pow_int(Int(4), e)) * a[static_cast<std::size_t>(s - 1)], e);
    }
    return delta;
}

/// Core determinant from the n x n matrix with entries linear in y.
inline Poly delta_direct(int level, long k) {
    detail::check_args(level, k);
    const long n = (k + 1) / 2;
    const long m = level + 3 - k % 2;
    const auto order = static_cast<std::size_t>(n);
    const long r = level + 1;

    // I - (4y + (L+1)^2) J
    const Poly shift_coeff{Rat(r * r), Rat(4)};
    const auto y_factor = ltt_one_minus(shift_coeff, order);

    const auto powered = ltt_pow(ltt_from_harmonic(Harmonic::P, order), static_cast<unsigned>(level + 1));
    const auto scalar_base = detail::offsets_product(level, order) * d_conjugate(DiagFactorial{m}, powered);
    const auto base = y_factor * lift<Poly>(scalar_base);
    return det_base_tower(base, Tower<Poly>::unit(order, order - 1));
}

/// Factored form; the core comes from prop1_coeffs and is cross-checked
/// against delta_direct (throws std::logic_error on disagreement).
inline FactoredHypersum theorem3_factored(int level, long k) {
    detail::check_args(level, k);
    FactoredHypersum f;
    f.level = level;
    f.k = k;
    f.n = (k + 1) / 2;
    f.m = level + 3 - k % 2;
    f.sqrt_exponent = static_cast<int>(level % 2 + (k + 1) % 2);
    f.prefactor = make_rat(factorial(k), factorial(level + k + 1) * pow_int(Int(2), static_cast<unsigned long>(k - 1)) *
                                             (1 + level % 2));
    for (long q = 0; q <= level / 2; ++q) f.linear_offsets.push_back(q * (level + 1 - q));

    const Poly delta = delta_from_prop1(level, k);
    const Poly check = delta_direct(level, k);
    if (!(delta == check))
        throw std::logic_error("core determinant mismatch for L=" + std::to_string(level) + ", k=" + std::to_string(k) +
                               ": " + delta.to_string() + " vs " + check.to_string());
    f.core_scale = signed_content(delta);
    f.core = PolyY(exact_div(delta, Poly(f.core_scale)), level);
    f.degenerate_core = delta.degree() != f.n - 1;
    return f;
}

inline Rat theorem3_eval(int level, long k, const Rat& n_value) {
    return theorem3_factored(level, k).eval_at_N(n_value);
}

/// S^(L)_0 = S^(L-1)_1; S^(0)_0(N) = N.
inline Rat hypersum_k0(int level, const Rat& n_value) {
    if (level < 0) throw std::invalid_argument("hyper level L must be >= 0");
    if (level == 0) return n_value;
    return theorem3_eval(level - 1, 1, n_value);
}

/// Ascending coefficients in N after substituting y = N(N+L+1), x = 2N+L+1.
inline std::vector<Rat> expand_in_N(const FactoredHypersum& f) {
    const Poly y = PolyY::y_in_N(f.level);
    const Poly x{Rat(f.level + 1), Rat(2)};
    Poly out = Poly(f.prefactor * f.core_scale) * f.core.poly().compose(y);
    for (int i = 0; i < f.sqrt_exponent; ++i) out *= x;
    for (long off : f.linear_offsets) out *= y + Poly(Rat(off));
    auto c = out.coeffs();
    if (c.size() < static_cast<std::size_t>(f.level + f.k + 2)) c.resize(static_cast<std::size_t>(f.level + f.k + 2));
    return c;
}

}  // namespace hypersum
