#pragma once

// Dense univariate polynomials with exact rational coefficients.

#include "hypersum/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypersum {

/// Coefficients ascending in powers of the variable. The highest stored
/// coefficient is nonzero; the zero polynomial stores nothing.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { if (c != 0) coeffs_.push_back(c); }  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rat(c)) {}                              // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(const Rat& c, std::size_t degree) {
        std::vector<Rat> v(degree + 1);
        v[degree] = c;
        return Poly(std::move(v));
    }

    /// The variable itself.
    static Poly identity() { return monomial(Rat(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    Rat operator()(const Rat& t) const {
        Rat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// p(inner(t)) as a polynomial in t.
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder of Euclidean division over the rationals.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly rem = a;
        if (rem.degree() < b.degree()) return {Poly{}, rem};
        std::vector<Rat> quot(static_cast<std::size_t>(rem.degree() - b.degree() + 1));
        const Rat lead = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const Rat factor = rem.leading() / lead;
            quot[shift] = factor;
            rem -= monomial(factor, shift) * b;
        }
        return {Poly(std::move(quot)), rem};
    }

    /// a / b when b divides a; throws otherwise.
    friend Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    /// Renders with variable name `var`, descending powers, e.g. "3*y^2+22*y-220".
    std::string to_string(const std::string& var = "y") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const Rat& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            Rat mag = abs(c);
            if (c < 0) os << "-";
            else if (!first) os << "+";
            first = false;
            if (i == 0) { os << mag.get_str(); continue; }
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

inline bool is_zero(const Rat& v) { return v == 0; }
inline bool is_zero(const Poly& v) { return v.is_zero(); }
inline Rat exact_div(const Rat& a, const Rat& b) {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
}

/// Positive rational content c such that p / c is primitive with integer
/// coefficients, sign chosen so the leading coefficient of p / c is positive.
inline Rat signed_content(const Poly& p) {
    if (p.is_zero()) return Rat(1);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content = make_rat(num_gcd, den_lcm);
    return p.leading() < 0 ? Rat(-content) : content;
}

/// Polynomial in the Faulhaber variable y = N(N+L+1) of hyper-level L.
class PolyY {
public:
    PolyY() = default;
    PolyY(Poly poly, int level) : poly_(std::move(poly)), level_(level) {}

    const Poly& poly() const { return poly_; }
    int level() const { return level_; }

    static Rat y_of(const Rat& n, int level) { return n * (n + level + 1); }

    Rat operator()(const Rat& y) const { return poly_(y); }
    Rat eval_at_N(const Rat& n) const { return poly_(y_of(n, level_)); }

    /// y(N) = N^2 + (L+1) N as a polynomial in N.
    static Poly y_in_N(int level) { return Poly{Rat(0), Rat(level + 1), Rat(1)}; }

    friend bool operator==(const PolyY& a, const PolyY& b) {
        return a.level_ == b.level_ && a.poly_ == b.poly_;
    }

private:
    Poly poly_;
    int level_ = 0;
};

}  // namespace hypersum
