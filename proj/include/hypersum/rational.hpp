#pragma once

// Exact scalars: arbitrary-precision integers and canonical rationals (GMP).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypersum {

using Int = mpz_class;

/// Canonical rational: gcd(|num|, den) = 1 and den > 0 after every
/// construction. GMP arithmetic keeps results canonical; construction
/// from a raw numerator/denominator pair must go through make_rat().
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Rat rat_from_string(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rat& v) { return v.get_str(); }

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
    r.canonicalize();
    return r;
}

/// 2^e for signed e.
inline Rat pow2(long e) {
    Int p = pow_int(Int(2), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? make_rat(Int(1), p) : Rat(p);
}

/// 0!, 1!, ..., n! computed once.
class FactorialTable {
public:
    explicit FactorialTable(long n_max) : values_(static_cast<std::size_t>(n_max < 0 ? 1 : n_max + 1)) {
        values_[0] = 1;
        for (std::size_t i = 1; i < values_.size(); ++i) values_[i] = values_[i - 1] * static_cast<unsigned long>(i);
    }

    const Int& operator()(long n) const {
        if (n < 0 || static_cast<std::size_t>(n) >= values_.size())
            throw std::out_of_range("factorial table index " + std::to_string(n));
        return values_[static_cast<std::size_t>(n)];
    }

    /// 1/n!, with 1/n! = 0 for negative n (reciprocal gamma at the poles).
    Rat reciprocal(long n) const {
        if (n < 0) return Rat(0);
        return make_rat(Int(1), (*this)(n));
    }

    long max_index() const { return static_cast<long>(values_.size()) - 1; }

private:
    std::vector<Int> values_;
};

}  // namespace hypersum
