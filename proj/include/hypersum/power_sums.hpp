#pragma once

// Ordinary power sums S_k(N) = 1^k + ... + N^k (hyper-level 0).

#include "hypersum/coefficients.hpp"
#include "hypersum/hypersums.hpp"
#include "hypersum/polynomial.hpp"
#include "hypersum/rational.hpp"

#include <stdexcept>

namespace hypersum {

inline Int sum_powers_brute(long k, long n) {
    if (k < 0 || n < 0) throw std::invalid_argument("sum_powers_brute needs k, N >= 0");
    Int total = 0;
    for (long i = 1; i <= n; ++i) total += pow_int(Int(i), static_cast<unsigned long>(k));
    return total;
}

/// Faulhaber's formula with the (-1)^{delta_{nk}} twist applied to the B_1 term.
inline Rat faulhaber_eval(long k, const Rat& n_value, const CoeffProvider& coeffs = default_coeffs()) {
    if (k < 1) throw std::invalid_argument("faulhaber_eval needs k >= 1");
    Rat total = 0;
    for (long n = 1; n <= k + 1; ++n) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(n));
        Rat term = Rat(binom) * bernoulli(k + 1 - n, coeffs) * pow_rat(n_value, static_cast<unsigned long>(n));
        total += n == k ? Rat(-term) : term;
    }
    return total / (k + 1);
}

/// S_k as a polynomial in x = 2N+1:
///   k!/2^{k+1} sum_{q=0}^{floor(k/2)} C_q (x^{k+1-2q} - 1)/(k+1-2q)!.
inline Poly theorem1_poly_x(long k, const CoeffProvider& coeffs = default_coeffs()) {
    if (k < 0) throw std::invalid_argument("theorem1 needs k >= 0");
    const auto c = coeffs.level0(k / 2);
    const FactorialTable fact(k + 1);
    Poly out;
    for (long q = 0; q <= k / 2; ++q) {
        const long e = k + 1 - 2 * q;
        const Rat w = c.at(q) * fact.reciprocal(e);
        out += Poly::monomial(w, static_cast<std::size_t>(e)) - Poly(w);
    }
    return Poly(Rat(factorial(k)) / pow2(k + 1)) * out;
}

inline Rat theorem1_eval(long k, const Rat& n_value, const CoeffProvider& coeffs = default_coeffs()) {
    return theorem1_poly_x(k, coeffs)(2 * n_value + 1);
}

/// Right side of the same-parity recursion for S_k, assembled from the lower
/// sums S_{k-2}, S_{k-4}, ... as evaluated by theorem1_eval.
inline Rat parity_recursion_rhs(long k, const Rat& n_value, const CoeffProvider& coeffs = default_coeffs()) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const auto e = static_cast<unsigned long>(k + 1);
    Rat acc = (pow_rat(n_value + 1, e) + pow_rat(n_value, e) - 1) / 2;
    for (long q = k % 2; q < k; q += 2) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), e, static_cast<unsigned long>(q));
        acc -= Rat(binom) * theorem1_eval(q, n_value, coeffs);
    }
    return acc / (k + 1);
}

inline void require_odd_positive(long n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("odd power sums need an odd N >= 1");
}

/// 1 + 3^k + 5^k + ... + N^k, N odd.
inline Int odd_power_sum_brute(long k, long n) {
    require_odd_positive(n);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    Int total = 0;
    for (long i = 1; i <= n; i += 2) total += pow_int(Int(i), static_cast<unsigned long>(k));
    return total;
}

/// k!/2 sum_{q=0}^{floor(k/2)} C_q (N+1)^{k+1-2q}/(k+1-2q)!, N odd.
inline Rat odd_power_sum(long k, long n, const CoeffProvider& coeffs = default_coeffs()) {
    require_odd_positive(n);
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const auto c = coeffs.level0(k / 2);
    const FactorialTable fact(k + 1);
    Rat total = 0;
    for (long q = 0; q <= k / 2; ++q) {
        const long e = k + 1 - 2 * q;
        total += c.at(q) * Rat(pow_int(Int(n + 1), static_cast<unsigned long>(e))) * fact.reciprocal(e);
    }
    return Rat(factorial(k)) * total / 2;
}

/// L = 0 factored form in y = N(N+1).
inline FactoredHypersum powersum_poly_y(long k) { return theorem3_factored(0, k); }

/// Checks odd-sum(N) = 2^k [S_k(ybar) - S_k(-1/4)] with ybar = N(N+2)/4,
/// evaluating S_k from its y-form. The radical sqrt(4y+1) is N+1 at ybar
/// and 0 at -1/4.
inline bool odd_sum_shift_check(long k, long n) {
    require_odd_positive(n);
    if (k < 1) throw std::invalid_argument("odd_sum_shift_check needs k >= 1");
    const auto s = powersum_poly_y(k);
    const Rat ybar = make_rat(n * (n + 2), 4);
    const Rat rhs = pow2(k) * (s.evaluate(ybar, Rat(n + 1)) - s.evaluate(make_rat(-1, 4), Rat(0)));
    return Rat(odd_power_sum_brute(k, n)) == rhs;
}

}  // namespace hypersum
