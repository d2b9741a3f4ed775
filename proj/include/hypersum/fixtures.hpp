#pragma once

// Worked examples in their printed form, kept independent of the factored
// evaluator so they can be checked against it.

#include "hypersum/polynomial.hpp"
#include "hypersum/rational.hpp"

#include <string>
#include <vector>

namespace hypersum::fixtures {

/// value(N) = k!/(L+k+1)! * radical_scale * x^radical_power * prod (y+o) * core(y) / core_divisor,
/// x = 2N+L+1, y = N(N+L+1).
struct PrintedForm {
    std::string label;
    int level;
    long k;
    Rat radical_scale;
    int radical_power;
    std::vector<long> offsets;            // includes a folded 4y+(L+1)^2 factor when present
    std::vector<long> core_coeffs;        // ascending in y
    long core_divisor;

    Rat factorial_ratio() const { return make_rat(factorial(k), factorial(level + k + 1)); }

    Poly core() const {
        std::vector<Rat> c;
        for (long v : core_coeffs) c.emplace_back(v);
        return Poly(std::move(c));
    }

    Rat value(const Rat& n) const {
        const Rat x = 2 * n + level + 1;
        const Rat y = n * (n + level + 1);
        Rat v = factorial_ratio() * radical_scale * pow_rat(x, static_cast<unsigned long>(radical_power));
        for (long o : offsets) v *= y + o;
        return v * core()(y) / core_divisor;
    }
};

inline std::vector<PrintedForm> printed_forms() {
    return {
        {"S_6^(10)", 10, 6, make_rat(1, 2), 1, {0, 10, 18, 24, 28, 30}, {-220, 22, 3}, 3},
        {"S_6^(3)", 3, 6, Rat(1), 0, {0, 3, 4}, {-1, -2, 1}, 1},
        // sqrt(y+9) = x/2
        {"S_7^(5)", 5, 7, make_rat(1, 2), 1, {0, 5, 8}, {295, -238, 14, 7}, 7},
        {"S_11^(8)", 8, 11, Rat(1), 0, {0, 8, 14, 18, 20}, {-1199616, 145896, 25868, -4011, 0, 14}, 14},
        {"S_14^(14)", 14, 14, make_rat(1, 2), 1, {0, 14, 26, 36, 44, 50, 54, 56},
         {62455917, -11436860, 376167, 29960, -1750, 0, 1}, 1},
    };
}

/// Expansion of S_6^(10) in N: coefficient of N^power equals value * 5!/17!.
struct ExpansionTerm {
    long power;
    long long value;
};

inline std::vector<ExpansionTerm> s6_level10_expansion() {
    return {{17, 6}, {16, 561}, {5, 1021675563656LL}, {1, -96598656000LL}};
}

inline Rat s6_level10_expansion_unit() { return make_rat(factorial(5), factorial(17)); }

/// Ordinary power sums in y = N(N+1): S_k = sqrt(4y+1)^A * numerator(y) / denominator.
struct PowerSumRow {
    long k;
    int sqrt_power;
    std::vector<std::vector<long>> factors;  // each ascending in y; numerator is their product
    long denominator;
    long printed_denominator;  // as typeset; differs from `denominator` where the print is wrong

    Poly numerator() const {
        Poly out(Rat(1));
        for (const auto& f : factors) {
            std::vector<Rat> c;
            for (long v : f) c.emplace_back(v);
            out *= Poly(std::move(c));
        }
        return out;
    }

    Poly y_part(long denom) const { return numerator() * Poly(make_rat(1, denom)); }
};

inline std::vector<PowerSumRow> power_sum_table() {
    return {
        {1, 0, {{0, 1}}, 2, 2},
        {2, 1, {{0, 1}}, 6, 6},
        {3, 0, {{0, 0, 1}}, 4, 4},
        {4, 1, {{0, 1}, {-1, 3}}, 30, 30},
        {5, 0, {{0, 0, 1}, {-1, 2}}, 12, 12},
        {6, 1, {{0, 1}, {1, -3, 3}}, 42, 52},
        {7, 0, {{0, 0, 1}, {2, -4, 3}}, 24, 24},
        {8, 1, {{0, 1}, {-3, 9, -10, 5}}, 90, 90},
        {9, 0, {{0, 0, 1}, {-1, 1}, {3, -3, 2}}, 20, 20},
    };
}

}  // namespace hypersum::fixtures
