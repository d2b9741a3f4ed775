#pragma once

// Ground-truth evaluators that share nothing with the formula paths: literal
// nested summation and the Stirling-number binomial formula. Only integer
// addition and multiplication (plus one exact division per binomial).

#include "hypersum/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hypersum::oracle {

/// S^(L)_k(N) = sum_{n=1}^{N} S^(L-1)_k(n), S^(0)_k(N) = sum n^k.
inline Int hypersum_brute(int level, long k, long n) {
    if (level < 0 || k < 0 || n < 0) throw std::invalid_argument("hypersum_brute needs L, k, N >= 0");
    // sums[i] holds the current level's value at argument i+1.
    std::vector<Int> sums(static_cast<std::size_t>(n));
    Int running = 0;
    for (long i = 1; i <= n; ++i) {
        Int term = 1;
        for (long e = 0; e < k; ++e) term *= i;
        running += term;
        sums[static_cast<std::size_t>(i - 1)] = running;
    }
    for (int l = 1; l <= level; ++l) {
        Int acc = 0;
        for (auto& s : sums) {
            acc += s;
            s = acc;
        }
    }
    return n == 0 ? Int(0) : sums.back();
}

/// Triangle of Stirling numbers of the second kind, S(k, q) for q <= k <= k_max.
class StirlingTable {
public:
    explicit StirlingTable(long k_max) {
        if (k_max < 0) throw std::invalid_argument("Stirling table needs k_max >= 0");
        rows_.push_back({Int(1)});
        for (long k = 1; k <= k_max; ++k) {
            std::vector<Int> row(static_cast<std::size_t>(k + 1));
            const auto& prev = rows_.back();
            for (long q = 1; q <= k; ++q) {
                Int v = q < k ? Int(q * prev[static_cast<std::size_t>(q)]) : Int(0);
                v += prev[static_cast<std::size_t>(q - 1)];
                row[static_cast<std::size_t>(q)] = v;
            }
            rows_.push_back(std::move(row));
        }
    }

    long k_max() const { return static_cast<long>(rows_.size()) - 1; }

    const Int& operator()(long k, long q) const {
        if (k < 0 || k > k_max() || q < 0 || q > k)
            throw std::out_of_range("Stirling index (" + std::to_string(k) + "," + std::to_string(q) + ")");
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
    }

private:
    std::vector<std::vector<Int>> rows_;
};

inline Int stirling2(long k, long q) {
    if (k < 0 || q < 0 || q > k)
        throw std::out_of_range("Stirling index (" + std::to_string(k) + "," + std::to_string(q) + ")");
    return StirlingTable(k)(k, q);
}

/// binomial(t, r) = t(t-1)...(t-r+1)/r!, valid for negative t.
inline Int binomial_poly(const Int& t, long r) {
    if (r < 0) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < r; ++i) {
        num *= t - i;
        den *= i + 1;
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// sum_{q=0}^{k} S(k,q) q! binomial(N+L+1, q+L+1), for any integer N.
/// At k = 0 that sum also counts the n = 0 term 0^0 = 1, so the sum proper,
/// binomial(N+L, L+1), is returned instead.
inline Rat hypersum_stirling(int level, long k, long n) {
    if (level < 0 || k < 0) throw std::invalid_argument("hypersum_stirling needs L, k >= 0");
    if (k == 0) return Rat(binomial_poly(Int(n + level), level + 1));
    const StirlingTable s(k);
    Int total = 0, q_fact = 1;
    for (long q = 0; q <= k; ++q) {
        if (q > 0) q_fact *= q;
        total += s(k, q) * q_fact * binomial_poly(Int(n + level + 1), q + level + 1);
    }
    return Rat(total);
}

/// B_0..B_n from sum_{j=0}^{m} binomial(m+1, j) B_j = 0 (so B_1 = -1/2).
inline std::vector<Rat> bernoulli_recurrence(long n_max) {
    if (n_max < 0) throw std::invalid_argument("Bernoulli table needs n >= 0");
    std::vector<Rat> b{Rat(1)};
    for (long m = 1; m <= n_max; ++m) {
        Rat acc = 0;
        for (long j = 0; j < m; ++j) acc += Rat(binomial_poly(Int(m + 1), j)) * b[static_cast<std::size_t>(j)];
        b.push_back(-acc / (m + 1));
    }
    return b;
}

}  // namespace hypersum::oracle
