#pragma once

// The C_p coefficients of x/sinh(x), their hyper-level generalisations
// C_p^(L) (coefficients of (x/sinh x)^{L+1}), and the Bernoulli and Euler
// bridges.

#include "hypersum/ltt.hpp"
#include "hypersum/rational.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypersum {

/// Immutable C_0^(L) .. C_{p_max}^(L).
class CoeffTable {
public:
    CoeffTable(int level, std::vector<Rat> values) : level_(level), values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("coefficient table needs p_max >= 0");
    }

    int level() const { return level_; }
    long p_max() const { return static_cast<long>(values_.size()) - 1; }
    const std::vector<Rat>& values() const { return values_; }

    const Rat& at(long p) const {
        if (p < 0 || p > p_max())
            throw std::out_of_range("C^(" + std::to_string(level_) + ")_" + std::to_string(p) +
                                    " outside table of depth " + std::to_string(p_max()));
        return values_[static_cast<std::size_t>(p)];
    }

    /// Zero for negative p; out-of-range above p_max still throws.
    Rat at_or_zero(long p) const { return p < 0 ? Rat(0) : at(p); }

    friend bool operator==(const CoeffTable& a, const CoeffTable& b) {
        return a.level_ == b.level_ && a.values_ == b.values_;
    }

private:
    int level_;
    std::vector<Rat> values_;
};

/// Level-0 table from sum_{q=0}^{p} C_{p-q}/(2q+1)! = 0 (p > 0), C_0 = 1.
inline CoeffTable c_table(long p_max) {
    if (p_max < 0) throw std::invalid_argument("p_max must be >= 0");
    FactorialTable fact(2 * p_max + 3);
    std::vector<Rat> c(static_cast<std::size_t>(p_max + 1));
    c[0] = 1;
    for (long p = 1; p <= p_max; ++p) {
        Rat acc = 0;
        for (long q = 1; q <= p; ++q) acc += c[static_cast<std::size_t>(p - q)] * fact.reciprocal(2 * q + 1);
        c[static_cast<std::size_t>(p)] = -acc;
    }
    return CoeffTable(0, std::move(c));
}

/// Truncated Cauchy product of two tables of equal depth.
inline CoeffTable convolve(const CoeffTable& a, const CoeffTable& b, int level) {
    if (a.p_max() != b.p_max()) throw std::invalid_argument("table depth mismatch");
    const auto prod = ltt_mul(LttSeries<Rat>(a.values()), LttSeries<Rat>(b.values()));
    return CoeffTable(level, prod.coeffs());
}

/// Source of coefficient tables for the formula evaluators. Higher levels
/// are always convolutions of whatever level0() returns, so a substituted
/// level-0 table propagates everywhere.
class CoeffProvider {
public:
    virtual ~CoeffProvider() = default;

    virtual CoeffTable level0(long p_max) const { return c_table(p_max); }

    /// Level L >= -1; level -1 is the identity [1, 0, 0, ...].
    CoeffTable table(int level, long p_max) const {
        if (level < -1) throw std::invalid_argument("coefficient level must be >= -1");
        if (level == -1) {
            std::vector<Rat> unit(static_cast<std::size_t>(p_max + 1));
            unit[0] = 1;
            return CoeffTable(-1, std::move(unit));
        }
        const CoeffTable base = level0(p_max);
        CoeffTable t = base;
        for (int l = 1; l <= level; ++l) t = convolve(t, base, l);
        return t;
    }
};

inline const CoeffProvider& default_coeffs() {
    static const CoeffProvider provider;
    return provider;
}

/// Level-0 table with one entry shifted by `delta`. Test-harness only.
class CorruptedCoeffs final : public CoeffProvider {
public:
    CorruptedCoeffs(long index, Rat delta) : index_(index), delta_(std::move(delta)) {}

    CoeffTable level0(long p_max) const override {
        auto v = c_table(p_max).values();
        if (index_ >= 0 && index_ <= p_max) v[static_cast<std::size_t>(index_)] += delta_;
        return CoeffTable(0, std::move(v));
    }

private:
    long index_;
    Rat delta_;
};

inline CoeffTable c_hyper_table(int level, long p_max, const CoeffProvider& coeffs = default_coeffs()) {
    if (level < 0) throw std::invalid_argument("hyper level must be >= 0");
    if (p_max < 0) throw std::invalid_argument("p_max must be >= 0");
    return coeffs.table(level, p_max);
}

/// B_n with B_1 = -1/2; even indices from B_{2p} = (2p)! C_p / (2 - 2^{2p}).
inline Rat bernoulli(long n, const CoeffProvider& coeffs = default_coeffs()) {
    if (n < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
    if (n == 0) return 1;
    if (n == 1) return make_rat(-1, 2);
    if (n % 2 == 1) return 0;
    const long p = n / 2;
    const auto c = coeffs.level0(p);
    return Rat(factorial(n)) * c.at(p) / (Rat(2) - pow2(2 * p));
}

/// E_{2p}/(2p)! for p = 0..p_max, read off Q^{-1}.
inline std::vector<Rat> euler_table(long p_max) {
    if (p_max < 0) throw std::invalid_argument("p_max must be >= 0");
    return ltt_inv(ltt_from_harmonic(Harmonic::Q, static_cast<std::size_t>(p_max + 1))).coeffs();
}

struct IdentityResult {
    std::string name;
    long max_index = 0;
    bool pass = true;
    std::string failure;  // offending (identity, p, L, N) tuple when !pass
};

struct IdentityReport {
    std::vector<IdentityResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

namespace detail {

class IdentityChecker {
public:
    IdentityChecker(std::string name, long max_index) {
        result_.name = std::move(name);
        result_.max_index = max_index;
    }

    void check(const Rat& lhs, const Rat& rhs, long p, std::optional<int> level = {}, std::optional<long> n = {}) {
        if (!result_.pass || lhs == rhs) return;
        std::ostringstream os;
        os << "(" << result_.name << ", p=" << p << ", L=" << (level ? std::to_string(*level) : "-")
           << ", N=" << (n ? std::to_string(*n) : "-") << "): " << lhs.get_str() << " != " << rhs.get_str();
        result_.pass = false;
        result_.failure = os.str();
    }

    IdentityResult result() const { return result_; }

private:
    IdentityResult result_;
};

// 2/(2p-1)! style prefactor times (N-1)^e + (N-3)^e + ... down to 1 or 2.
inline Rat descending_parity_sum(long n, long exponent) {
    Rat acc = 0;
    for (long j = n - 1; j >= 1; j -= 2) acc += Rat(pow_int(Int(j), static_cast<unsigned long>(exponent)));
    return acc;
}

}  // namespace detail

/// Exact check of the recursion identities (13a)-(13l) for p <= p_max and of
/// the hyper-level relations (58a)/(58b) for -1 <= L <= L_max.
inline IdentityReport verify_identity_suite(long p_max, int level_max,
                                            const CoeffProvider& coeffs = default_coeffs()) {
    if (p_max < 1) throw std::invalid_argument("identity suite needs p_max >= 1");
    if (level_max < 0) throw std::invalid_argument("identity suite needs L_max >= 0");

    const FactorialTable fact(2 * p_max + 3);
    const CoeffTable ct = coeffs.level0(p_max);
    const auto& C = ct.values();
    const auto E = euler_table(p_max);
    auto c = [&](long i) { return C[static_cast<std::size_t>(i)]; };
    auto e = [&](long i) { return E[static_cast<std::size_t>(i)]; };
    auto inv = [&](long i) { return fact.reciprocal(i); };

    IdentityReport report;
    detail::IdentityChecker a("13a", p_max), b("13b", p_max), cc("13c", p_max), d("13d", p_max), ee("13e", p_max),
        f("13f", p_max), g("13g", p_max), h("13h", p_max), i_("13i", p_max), j("13j", p_max), k("13k", p_max),
        l("13l", p_max), sign("sign", p_max);

    for (long p = 0; p <= p_max; ++p) {
        Rat sa = 0, sb = 0, sc = 0, sd = 0, se = 0, sf = 0, sg = 0, sh = 0, si = 0, sj = 0;
        for (long q = 0; q <= p; ++q) {
            const Rat cpq = c(p - q);
            sa += cpq * inv(2 * q + 1);
            sb += pow2(2 * q) * cpq * inv(2 * q + 1);
            sc += pow2(2 * q + 1) * cpq * inv(2 * q + 2);
            sd += pow2(2 * p - 2 * q) * cpq * inv(2 * q);
            se += pow2(2 * p - 2 * q) * cpq * inv(2 * q + 1);
            sf += e(q) * cpq;
            sg += cpq * inv(2 * q);
            const Rat twist = pow2(2 * p - 2 * q) - 2;
            sh += inv(2 * q + 1) * cpq / twist;
            si += inv(2 * q) * cpq / twist;
            sj += c(q) * cpq;
        }
        if (p > 0) a.check(sa, 0, p);
        b.check(sb, inv(2 * p), p);
        cc.check(sc, inv(2 * p + 1), p);
        d.check(sd, c(p), p);
        ee.check(se, e(p), p);
        f.check(sf, pow2(2 * p) * c(p), p);
        g.check(sg, c(p) / (pow2(1 - 2 * p) - 1), p);
        h.check(sh, Rat(p == 0 ? make_rat(-1, 2) : Rat(0)) - inv(2 * p) / 2, p);
        i_.check(si, c(p) / (pow2(2 * p) - 2) - inv(2 * p - 1) / 2, p);
        j.check(sj, Rat(2 * p - 1) / (Rat(1) - pow2(1 - 2 * p)) * c(p), p);

        const Rat expected_sign = p % 2 == 0 ? 1 : -1;
        sign.check(Rat(sgn(c(p))), expected_sign, p);

        for (long n = 2; n <= 5; ++n) {
            const bool odd = n % 2 == 1;
            Rat lk = 0, ll = 0;
            for (long q = 0; q <= p; ++q) {
                lk += c(p - q) * inv(2 * q + 1) * Rat(pow_int(Int(n), static_cast<unsigned long>(2 * q + 1)));
                ll += c(p - q) * inv(2 * q) * Rat(pow_int(Int(n), static_cast<unsigned long>(2 * q)));
            }
            if (!(odd && p == 0)) k.check(lk, 2 * inv(2 * p) * detail::descending_parity_sum(n, 2 * p), p, {}, n);
            Rat rl = odd ? c(p) / (pow2(1 - 2 * p) - 1) : c(p);
            if (p > 0) rl += 2 * inv(2 * p - 1) * detail::descending_parity_sum(n, 2 * p - 1);
            l.check(ll, rl, p, {}, n);
        }
    }
    for (auto* chk : {&a, &b, &cc, &d, &ee, &f, &g, &h, &i_, &j, &k, &l, &sign}) report.results.push_back(chk->result());

    // Hyper-level relations. The first equality of each line also holds at L = -1.
    detail::IdentityChecker x1("58a-first", p_max), x2("58a-second", p_max), y1("58b-first", p_max),
        y2("58b-second", p_max);
    std::vector<CoeffTable> levels;
    for (int lv = -1; lv <= level_max + 2; ++lv) levels.push_back(coeffs.table(lv, p_max));
    auto lvl = [&](int lv, long p) { return levels[static_cast<std::size_t>(lv + 1)].at(p); };
    for (int lv = -1; lv <= level_max; ++lv) {
        for (long p = 0; p <= p_max; ++p) {
            Rat a2 = 0, a1 = 0, b2 = 0, b1 = 0;
            for (long q = 0; q <= p; ++q) {
                a2 += pow2(2 * q + 1) * lvl(lv + 2, p - q) * inv(2 * q + 2);
                a1 += lvl(lv + 1, p - q) * inv(2 * q + 1);
                b2 += pow2(2 * q) * lvl(lv + 2, p - q) * inv(2 * q + 1);
                b1 += lvl(lv + 1, p - q) * inv(2 * q);
            }
            x1.check(a2, a1, p, lv);
            y1.check(b2, b1, p, lv);
            if (lv >= 0) {
                x2.check(a1, lvl(lv, p), p, lv);
                y2.check(b1, Rat(lv + 1 - 2 * p) / (lv + 1) * lvl(lv, p), p, lv);
            }
        }
    }
    for (auto* chk : {&x1, &x2, &y1, &y2}) report.results.push_back(chk->result());
    return report;
}

}  // namespace hypersum
