#pragma once

// Invariant suites over bounded grids. Each suite collects its own report;
// reports come back in a fixed order regardless of how they were run.

#include "hypersum/coefficients.hpp"
#include "hypersum/document.hpp"
#include "hypersum/fixtures.hpp"
#include "hypersum/hypersums.hpp"
#include "hypersum/ltt.hpp"
#include "hypersum/oracles.hpp"
#include "hypersum/power_sums.hpp"

#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hypersum {

struct SelfCheckBounds {
    long p_max = 10;
    int level_max = 6;
    long k_max = 10;
    long n_max = 15;
};

struct SuiteReport {
    explicit SuiteReport(std::string name_ = {}) : name(std::move(name_)) {}

    std::string name;
    long checks = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        else if (!ok) failures.back() = "... and more (" + what + ")";
    }
};

namespace detail {

inline std::string tuple(const std::string& tag, long level, long k, long n) {
    return "(" + tag + ", L=" + std::to_string(level) + ", k=" + std::to_string(k) + ", N=" + std::to_string(n) + ")";
}

inline Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return make_rat(num(rng), den(rng));
}

inline LttSeries<Rat> random_series(std::mt19937& rng, std::size_t order, bool unit) {
    std::vector<Rat> c(order);
    for (auto& v : c) v = random_rat(rng);
    if (unit) c[0] = 1;
    else if (c[0] == 0) c[0] = 1;
    return LttSeries<Rat>(std::move(c));
}

inline SuiteReport suite_identities(const SelfCheckBounds& b, const CoeffProvider& coeffs) {
    SuiteReport r{"identities"};
    const auto report = verify_identity_suite(b.p_max, b.level_max, coeffs);
    for (const auto& res : report.results) r.expect(res.pass, res.failure);
    return r;
}

inline SuiteReport suite_coefficients(const SelfCheckBounds& b, const CoeffProvider& coeffs) {
    SuiteReport r{"coefficients"};
    const auto table = coeffs.level0(b.p_max);
    const auto reference = oracle::bernoulli_recurrence(2 * b.p_max);
    const auto p_inv = ltt_inv(ltt_from_harmonic(Harmonic::P, static_cast<std::size_t>(b.p_max + 1)));
    for (long p = 0; p <= b.p_max; ++p) {
        const std::string at = "(p=" + std::to_string(p) + ")";
        r.expect(p_inv.coeff(static_cast<std::size_t>(p)) == table.at(p), "inverse of P " + at);
        if (p >= 1) r.expect(c_via_det(p) == table.at(p), "determinant form " + at);
        r.expect(bernoulli(2 * p, coeffs) == reference[static_cast<std::size_t>(2 * p)], "Bernoulli bridge " + at);
        if (p >= 1) r.expect((table.at(p) < 0) == (p % 2 == 1), "sign alternation " + at);
    }
    r.expect(bernoulli(1, coeffs) == reference[1], "B_1");
    for (int level = 1; level <= b.level_max; ++level)
        r.expect(c_hyper_table(level, b.p_max, coeffs).at(0) == 1, "C_0 at L=" + std::to_string(level));
    return r;
}

inline SuiteReport suite_ltt(const SelfCheckBounds& b) {
    SuiteReport r{"ltt-algebra"};
    constexpr std::size_t order = 8;
    std::mt19937 rng(20240607);
    for (int trial = 0; trial < 4; ++trial) {
        const auto a = random_series(rng, order, false);
        const auto c = random_series(rng, order, false);
        r.expect(ltt_mul(a, c) == ltt_mul(c, a), "commutativity");
        const auto prod = ltt_mul(a, c);
        const auto inv = ltt_inv(a);
        for (std::size_t t = 1; t <= order; ++t) {
            r.expect(prod.truncate(t) == ltt_mul(a.truncate(t), c.truncate(t)), "truncated product order " + std::to_string(t));
            r.expect(inv.truncate(t) == ltt_inv(a.truncate(t)), "truncated inverse order " + std::to_string(t));
        }
    }

    const auto P = ltt_from_harmonic(Harmonic::P, order);
    const auto Q = ltt_from_harmonic(Harmonic::Q, order);
    const auto pq = ltt_mul(P, Q), pp = ltt_mul(P, P), qq = ltt_mul(Q, Q);
    const FactorialTable fact(2 * order + 2);
    for (std::size_t n = 0; n < order; ++n) {
        const long ln = static_cast<long>(n);
        r.expect(pq.coeff(n) == pow2(2 * ln) * fact.reciprocal(2 * ln + 1), "P*Q coefficient " + std::to_string(n));
        r.expect(pp.coeff(n) == pow2(2 * ln + 1) * fact.reciprocal(2 * ln + 2), "P^2 coefficient " + std::to_string(n));
        const Rat shifted = n == 0 ? Rat(1) : pp.coeff(n - 1);
        r.expect(qq.coeff(n) == shifted, "Q^2 = I + J P^2 coefficient " + std::to_string(n));
    }

    // First columns of (I-J) D_1 P D_1^-1 and (I-J)^2 D_2 P D_2^-1 are the unit column.
    const auto one_minus = ltt_one_minus(Rat(1), order);
    const auto e1 = LttSeries<Rat>::identity(order).coeffs();
    r.expect((one_minus * d_conjugate(DiagFactorial{1}, P)).first_column() == e1, "unit column, D_1");
    r.expect((ltt_mul(one_minus, one_minus) * d_conjugate(DiagFactorial{2}, P)).first_column() == e1, "unit column, D_2");

    // Tower identities on random order-5 data.
    constexpr std::size_t k5 = 5;
    for (int trial = 0; trial < 3; ++trial) {
        LowerTri<Rat> base(k5);
        for (std::size_t i = 0; i < k5; ++i)
            for (std::size_t j = 0; j <= i; ++j) base.set(i, j, random_rat(rng));
        std::vector<Rat> col(k5), col2(k5);
        for (auto& v : col) v = random_rat(rng);
        for (auto& v : col2) v = random_rat(rng);
        const Tower<Rat> t(col), t2(col2);
        const Rat scale = random_rat(rng);
        const Rat d0 = det_base_tower(base, t);
        r.expect(det_base_tower(base, scale * t) == scale * d0, "tower scaling");
        r.expect(det_base_tower(base, t + t2) == d0 + det_base_tower(base, t2), "tower additivity");

        const auto unit = random_series(rng, k5, true).to_matrix();
        const auto unit_inv = ltt_inv(LttSeries<Rat>(unit.first_column())).to_matrix();
        r.expect(det_base_tower(base, unit * t) == det_base_tower(unit_inv * base, t), "unit lower factor moved into base");

        LowerTri<Rat> diag(k5), diag_inv(k5);
        for (std::size_t i = 0; i < k5; ++i) {
            Rat d = random_rat(rng);
            if (d == 0) d = 2;
            diag.set(i, i, d);
            diag_inv.set(i, i, 1 / d);
        }
        r.expect(det_base_tower(diag * base * diag_inv, diag * t) == diag(k5 - 1, k5 - 1) * d0,
                 "diagonal conjugation of base and tower");
    }
    (void)b;
    return r;
}

inline SuiteReport suite_lemma2(const SelfCheckBounds& b) {
    SuiteReport r{"power-columns"};
    const long k_top = std::max<long>(b.level_max, 0);
    for (long k = 0; k <= k_top; ++k) {
        for (auto side : {Lemma2Side::I, Lemma2Side::II, Lemma2Side::III, Lemma2Side::IV}) {
            const auto cols = lemma2_column(side, static_cast<std::size_t>(k), static_cast<std::size_t>(k + 6));
            r.expect(cols.left == cols.right,
                     "(side " + std::to_string(static_cast<int>(side) + 1) + ", k=" + std::to_string(k) + ")");
        }
    }
    return r;
}

inline SuiteReport suite_grid(const SelfCheckBounds& b, const CoeffProvider& coeffs) {
    SuiteReport r{"grid"};
    for (int level = 0; level <= b.level_max; ++level) {
        for (long k = 0; k <= b.k_max; ++k) {
            FactoredHypersum f;
            if (k >= 1) {
                try {
                    f = theorem3_factored(level, k);
                } catch (const std::logic_error& e) {
                    r.expect(false, tuple("core routes", level, k, 0) + ": " + e.what());
                    continue;
                }
            }
            for (long n = 0; n <= b.n_max; ++n) {
                const Rat brute(oracle::hypersum_brute(level, k, n));
                const Rat nn(n);
                r.expect(oracle::hypersum_stirling(level, k, n) == brute, tuple("stirling", level, k, n));
                r.expect(theorem2_eval(level, k, nn, coeffs) == brute, tuple("theorem2", level, k, n));
                const Rat t3 = k == 0 ? hypersum_k0(level, nn) : f.eval_at_N(nn);
                r.expect(t3 == brute, tuple("theorem3", level, k, n));
                if (level == 0) {
                    if (k >= 1) r.expect(faulhaber_eval(k, nn, coeffs) == brute, tuple("faulhaber", level, k, n));
                    r.expect(theorem1_eval(k, nn, coeffs) == brute, tuple("theorem1", level, k, n));
                }
            }
        }
    }
    return r;
}

inline SuiteReport suite_structure(const SelfCheckBounds& b) {
    SuiteReport r{"structure"};
    for (int level = 0; level <= b.level_max; ++level) {
        for (long k = 1; k <= b.k_max; ++k) {
            const auto f = theorem3_factored(level, k);
            r.expect(delta_from_prop1(level, k) == delta_direct(level, k), tuple("prop1 expansion", level, k, 0));
            r.expect(f.eval_at_N(Rat(1)) == 1, tuple("value at 1", level, k, 1));

            const auto c = expand_in_N(f);
            const Poly in_n(c);
            r.expect(in_n.degree() == level + k + 1, tuple("degree in N", level, k, 0));
            r.expect(in_n.leading() == make_rat(factorial(k), factorial(level + k + 1)), tuple("leading coefficient", level, k, 0));
            for (long n = 0; n >= -level - 1; --n) {
                r.expect(in_n(Rat(n)) == 0, tuple("zero of expansion", level, k, n));
                r.expect(oracle::hypersum_stirling(level, k, n) == 0, tuple("zero of binomial form", level, k, n));
            }
            const long ledger = f.sqrt_exponent + 2 * (level / 2 + 1) + 2 * f.core.poly().degree();
            r.expect(ledger == level + k + 1, tuple("degree ledger", level, k, 0));
            r.expect(!f.degenerate_core, tuple("core degree n-1", level, k, 0));

            // partial sums climb one level
            const auto up = theorem3_factored(level + 1, k);
            Rat running = 0;
            for (long n = 1; n <= b.n_max; ++n) {
                running += f.eval_at_N(Rat(n));
                r.expect(up.eval_at_N(Rat(n)) == running, tuple("level recursion", level, k, n));
            }
        }
    }
    return r;
}

inline SuiteReport suite_power_sums(const SelfCheckBounds& b, const CoeffProvider& coeffs) {
    SuiteReport r{"power-sums"};
    for (long k = 0; k <= b.k_max; ++k) {
        const Poly px = theorem1_poly_x(k, coeffs);
        if (k >= 1) {
            // S_{2p} odd in x, S_{2p+1} even
            bool parity_ok = true;
            for (std::size_t i = 0; i < px.coeffs().size(); ++i)
                if (px.coeffs()[i] != 0 && static_cast<long>(i % 2) == k % 2) parity_ok = false;
            r.expect(parity_ok, "(parity in x, k=" + std::to_string(k) + ")");
            r.expect(px(Rat(1)) == 0 && px(Rat(-1)) == 0, "(zeros at N=0,-1, k=" + std::to_string(k) + ")");
        }
        for (long n = 0; n <= b.n_max; ++n)
            r.expect(theorem1_eval(k, Rat(n), coeffs) == parity_recursion_rhs(k, Rat(n), coeffs),
                     tuple("parity recursion", 0, k, n));
        for (long n = 1; n <= b.n_max; n += 2) {
            r.expect(odd_power_sum(k, n, coeffs) == Rat(odd_power_sum_brute(k, n)), tuple("odd sums", 0, k, n));
            if (k >= 1) r.expect(odd_sum_shift_check(k, n), tuple("odd sums via y", 0, k, n));
        }
    }
    return r;
}

inline SuiteReport suite_fixtures() {
    SuiteReport r{"fixtures"};
    for (const auto& fx : fixtures::printed_forms()) {
        const auto f = theorem3_factored(fx.level, fx.k);
        for (long n = 1; n <= 10; ++n) r.expect(f.eval_at_N(Rat(n)) == fx.value(Rat(n)), fx.label + " value N=" + std::to_string(n));
        r.expect(f.core.poly() == fx.core(), fx.label + " core");
        auto offsets = f.linear_offsets;
        if (f.sqrt_exponent == 2) offsets.push_back((fx.level + 1) * (fx.level + 1) / 4);
        std::sort(offsets.begin(), offsets.end());
        r.expect(offsets == fx.offsets, fx.label + " offsets");
        r.expect(f.prefactor * pow2(fx.k - 1) * (1 + fx.level % 2) == fx.factorial_ratio(), fx.label + " factorial ratio");
    }
    const auto big = expand_in_N(theorem3_factored(10, 6));
    for (const auto& term : fixtures::s6_level10_expansion())
        r.expect(big.at(static_cast<std::size_t>(term.power)) == Rat(Int(std::to_string(term.value))) * fixtures::s6_level10_expansion_unit(),
                 "S_6^(10) coefficient of N^" + std::to_string(term.power));
    for (const auto& row : fixtures::power_sum_table()) {
        const auto f = powersum_poly_y(row.k);
        r.expect(f.sqrt_exponent == row.sqrt_power, "power-sum table radical k=" + std::to_string(row.k));
        r.expect(f.y_part() == row.y_part(row.denominator), "power-sum table k=" + std::to_string(row.k));
    }
    return r;
}

inline SuiteReport suite_json(const SelfCheckBounds& b) {
    SuiteReport r{"json-roundtrip"};
    for (int level = 0; level <= b.level_max; ++level)
        for (long k = 1; k <= b.k_max; ++k) {
            const auto f = theorem3_factored(level, k);
            const auto back = parse_document(to_document(f).dump());
            bool same = back == f;
            for (long n = 1; n <= 10; ++n) same = same && back.eval_at_N(Rat(n)) == f.eval_at_N(Rat(n));
            r.expect(same, tuple("round trip", level, k, 0));
        }
    return r;
}

}  // namespace detail

/// Runs every suite; the work items run concurrently, reports are returned in
/// a fixed order.
inline std::vector<SuiteReport> run_selfcheck(const SelfCheckBounds& b, const CoeffProvider& coeffs = default_coeffs()) {
    if (b.p_max < 1 || b.level_max < 1 || b.k_max < 1 || b.n_max < 1)
        throw std::invalid_argument("selfcheck bounds must be >= 1");
    std::vector<std::function<SuiteReport()>> jobs = {
        [&] { return detail::suite_identities(b, coeffs); },
        [&] { return detail::suite_coefficients(b, coeffs); },
        [&] { return detail::suite_ltt(b); },
        [&] { return detail::suite_lemma2(b); },
        [&] { return detail::suite_grid(b, coeffs); },
        [&] { return detail::suite_structure(b); },
        [&] { return detail::suite_power_sums(b, coeffs); },
        [&] { return detail::suite_fixtures(); },
        [&] { return detail::suite_json(b); },
    };
    std::vector<std::future<SuiteReport>> running;
    for (auto& job : jobs) running.push_back(std::async(std::launch::async, job));
    std::vector<SuiteReport> out;
    for (auto& fut : running) {
        try {
            out.push_back(fut.get());
        } catch (const std::exception& e) {
            SuiteReport failed{"suite #" + std::to_string(out.size() + 1)};
            failed.expect(false, std::string("exception: ") + e.what());
            out.push_back(failed);
        }
    }
    return out;
}

inline bool all_pass(const std::vector<SuiteReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass()) return false;
    return true;
}

inline std::string format_reports(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.pass() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
        for (const auto& f : r.failures) os << "    " << f << "\n";
    }
    os << (all_pass(reports) ? "all suites passed" : "FAILED") << "\n";
    return os.str();
}

}  // namespace hypersum
