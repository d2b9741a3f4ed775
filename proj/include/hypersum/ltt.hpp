#pragma once

// Truncated lower-triangular Toeplitz (LTT) algebra.
//
// An LTT matrix of order k is a power series sum_q a_q J^q in the lower
// shift matrix J, truncated to k x k. Products and inverses of truncations
// equal truncations of products and inverses, so every operation here works
// directly on the k leading coefficients.
//
// Indexing: the matrices in the literature are 1-based. Internally every
// row/column index is 0-based; row r of a printed matrix is index r-1. The
// tower matrix K_q of order k has its single 1 in printed row k-q, which is
// internal index k-q-1. Only the named constructors below encode that map.

#include "hypersum/polynomial.hpp"
#include "hypersum/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypersum {

template <typename S>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t order) : order_(order), entries_(order * order, S(0)) {}

    static SquareMatrix from_rows(const std::vector<std::vector<S>>& rows) {
        SquareMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows are not square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t order() const { return order_; }
    S& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < order_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t order_ = 0;
    std::vector<S> entries_;
};

/// Fraction-free (Bareiss) elimination. Every division is exact, so this
/// works over any integral domain with exact_div, including Poly.
template <typename S>
S det_bareiss(SquareMatrix<S> m) {
    const std::size_t n = m.order();
    if (n == 0) return S(1);
    bool negate = false;
    S prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t pivot = k + 1;
            while (pivot < n && is_zero(m(pivot, k))) ++pivot;
            if (pivot == n) return S(0);
            m.swap_rows(k, pivot);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = S(0);
        }
        prev = m(k, k);
    }
    S d = m(n - 1, n - 1);
    return negate ? S(-d) : d;
}

/// Gaussian elimination over the rationals.
inline Rat det_gauss(SquareMatrix<Rat> m) {
    const std::size_t n = m.order();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            m.swap_rows(k, pivot);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rat f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

inline Rat determinant(const SquareMatrix<Rat>& m) { return det_gauss(m); }
inline Poly determinant(const SquareMatrix<Poly>& m) { return det_bareiss(m); }

template <typename S>
class LowerTri;

/// Truncated series a_0 + a_1 J + ... + a_{k-1} J^{k-1}.
template <typename S>
class LttSeries {
public:
    explicit LttSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("LTT series needs order >= 1");
    }

    static LttSeries identity(std::size_t order) { return shift(order, 0); }

    /// J^power truncated to `order`.
    static LttSeries shift(std::size_t order, std::size_t power) {
        std::vector<S> c(order, S(0));
        if (power < order) c[power] = S(1);
        return LttSeries(std::move(c));
    }

    std::size_t order() const { return coeffs_.size(); }
    const S& coeff(std::size_t q) const { return coeffs_.at(q); }
    const std::vector<S>& coeffs() const { return coeffs_; }

    LttSeries truncate(std::size_t order) const {
        if (order == 0 || order > coeffs_.size()) throw std::invalid_argument("bad truncation order");
        return LttSeries(std::vector<S>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
    }

    LowerTri<S> to_matrix() const;

    friend bool operator==(const LttSeries& a, const LttSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<S> coeffs_;
};

/// Truncated Cauchy product.
template <typename S>
LttSeries<S> ltt_mul(const LttSeries<S>& a, const LttSeries<S>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("LTT order mismatch: " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
    std::vector<S> c(a.order(), S(0));
    for (std::size_t q = 0; q < c.size(); ++q)
        for (std::size_t r = 0; r <= q; ++r) c[q] += a.coeff(r) * b.coeff(q - r);
    return LttSeries<S>(std::move(c));
}

template <typename S>
LttSeries<S> operator*(const LttSeries<S>& a, const LttSeries<S>& b) {
    return ltt_mul(a, b);
}

template <typename S>
LttSeries<S> ltt_inv(const LttSeries<S>& a) {
    if (is_zero(a.coeff(0))) throw std::domain_error("singular LTT series (a_0 = 0)");
    std::vector<S> b(a.order(), S(0));
    b[0] = exact_div(S(1), a.coeff(0));
    for (std::size_t q = 1; q < b.size(); ++q) {
        S acc(0);
        for (std::size_t r = 1; r <= q; ++r) acc += a.coeff(r) * b[q - r];
        b[q] = exact_div(S(-acc), a.coeff(0));
    }
    return LttSeries<S>(std::move(b));
}

/// a^e by repeated multiplication.
template <typename S>
LttSeries<S> ltt_pow(const LttSeries<S>& a, unsigned e) {
    auto r = LttSeries<S>::identity(a.order());
    for (unsigned i = 0; i < e; ++i) r = ltt_mul(r, a);
    return r;
}

/// (I - zJ)^{-1} = [1, z, z^2, ...].
template <typename S>
LttSeries<S> ltt_geometric(const S& z, std::size_t order) {
    if (order == 0) throw std::invalid_argument("LTT series needs order >= 1");
    std::vector<S> c;
    c.reserve(order);
    S p(1);
    for (std::size_t i = 0; i < order; ++i) {
        c.push_back(p);
        p = p * z;
    }
    return LttSeries<S>(std::move(c));
}

/// I - zJ.
template <typename S>
LttSeries<S> ltt_one_minus(const S& z, std::size_t order) {
    auto c = LttSeries<S>::identity(order).coeffs();
    if (order > 1) c[1] = S(-z);
    return LttSeries<S>(std::move(c));
}

enum class Harmonic { P, Q };

/// P = sum J^q/(2q+1)!, Q = sum J^q/(2q)!.
inline LttSeries<Rat> ltt_from_harmonic(Harmonic kind, std::size_t order) {
    if (order == 0) throw std::invalid_argument("LTT series needs order >= 1");
    const long offset = kind == Harmonic::P ? 1 : 0;
    FactorialTable fact(2 * static_cast<long>(order) + 1);
    std::vector<Rat> c;
    for (std::size_t q = 0; q < order; ++q) c.push_back(fact.reciprocal(2 * static_cast<long>(q) + offset));
    return LttSeries<Rat>(std::move(c));
}

/// General k x k lower-triangular matrix.
template <typename S>
class LowerTri {
public:
    explicit LowerTri(std::size_t order) : m_(order) {}

    static LowerTri from_rows(const std::vector<std::vector<S>>& rows) {
        LowerTri t(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j) t.set(i, j, rows[i].at(j));
        return t;
    }

    std::size_t order() const { return m_.order(); }
    const S& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    void set(std::size_t i, std::size_t j, const S& v) {
        if (j > i && !is_zero(v)) throw std::invalid_argument("nonzero entry above the diagonal");
        m_(i, j) = v;
    }

    std::vector<S> column(std::size_t j) const {
        std::vector<S> c(order(), S(0));
        for (std::size_t i = 0; i < order(); ++i) c[i] = m_(i, j);
        return c;
    }
    std::vector<S> first_column() const { return column(0); }

    const SquareMatrix<S>& dense() const { return m_; }

    friend LowerTri operator*(const LowerTri& a, const LowerTri& b) {
        if (a.order() != b.order()) throw std::invalid_argument("lower-triangular order mismatch");
        LowerTri c(a.order());
        for (std::size_t i = 0; i < a.order(); ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                S acc(0);
                for (std::size_t r = j; r <= i; ++r) acc += a(i, r) * b(r, j);
                c.m_(i, j) = acc;
            }
        return c;
    }

    friend LowerTri operator*(const LttSeries<S>& a, const LowerTri& b) { return a.to_matrix() * b; }

    friend bool operator==(const LowerTri& a, const LowerTri& b) {
        if (a.order() != b.order()) return false;
        for (std::size_t i = 0; i < a.order(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (!(a(i, j) == b(i, j))) return false;
        return true;
    }

private:
    SquareMatrix<S> m_;
};

template <typename S>
LowerTri<S> LttSeries<S>::to_matrix() const {
    LowerTri<S> t(order());
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = 0; j <= i; ++j) t.set(i, j, coeffs_[i - j]);
    return t;
}

/// Lifts a rational matrix into a richer scalar ring.
template <typename To>
LowerTri<To> lift(const LowerTri<Rat>& a) {
    LowerTri<To> t(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j <= i; ++j) t.set(i, j, To(a(i, j)));
    return t;
}

/// Last-column tower; column[r] (0-based) is the coefficient of K_{k-1-r}.
template <typename S>
class Tower {
public:
    explicit Tower(std::vector<S> column) : column_(std::move(column)) {}

    /// K_q of order k: a single 1 in printed row k-q.
    static Tower unit(std::size_t order, std::size_t q) {
        if (q >= order) throw std::out_of_range("tower index q must be < order");
        std::vector<S> c(order, S(0));
        c[order - 1 - q] = S(1);
        return Tower(std::move(c));
    }

    /// sum_q c_{k-1-q} K_q, i.e. column entries c_0 .. c_{k-1} from the top.
    static Tower from_column(std::vector<S> column) { return Tower(std::move(column)); }

    std::size_t order() const { return column_.size(); }
    const std::vector<S>& column() const { return column_; }

    /// The coefficient multiplying K_q.
    const S& coeff_of_unit(std::size_t q) const { return column_.at(order() - 1 - q); }

    friend Tower operator+(const Tower& a, const Tower& b) {
        if (a.order() != b.order()) throw std::invalid_argument("tower order mismatch");
        auto c = a.column_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.column_[i];
        return Tower(std::move(c));
    }

    friend Tower operator*(const S& x, const Tower& t) {
        auto c = t.column_;
        for (auto& v : c) v = v * x;
        return Tower(std::move(c));
    }

    /// Left multiplication by a lower-triangular matrix, M T.
    friend Tower operator*(const LowerTri<S>& m, const Tower& t) {
        if (m.order() != t.order()) throw std::invalid_argument("tower order mismatch");
        std::vector<S> c(t.order(), S(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j) c[i] += m(i, j) * t.column_[j];
        return Tower(std::move(c));
    }

private:
    std::vector<S> column_;
};

/// D_m = diag(m!, (m+2)!, (m+4)!, ...).
struct DiagFactorial {
    long m = 0;

    Int diagonal(std::size_t i) const { return factorial(m + 2 * static_cast<long>(i)); }
};

/// D_m A D_m^{-1}: entry (i,j) scaled by (m+2i)!/(m+2j)!.
template <typename S>
LowerTri<S> d_conjugate(DiagFactorial d, const LowerTri<S>& a) {
    FactorialTable fact(d.m + 2 * static_cast<long>(a.order()));
    LowerTri<S> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const Rat scale = make_rat(fact(d.m + 2 * static_cast<long>(i)), fact(d.m + 2 * static_cast<long>(j)));
            out.set(i, j, a(i, j) * S(scale));
        }
    return out;
}

template <typename S>
LowerTri<S> d_conjugate(DiagFactorial d, const LttSeries<S>& s) {
    return d_conjugate(d, s.to_matrix());
}

/// det{A - a_0 K_0 + T}: the base with its last column replaced by the tower.
template <typename S>
S det_base_tower(const LowerTri<S>& base, const Tower<S>& tower) {
    if (base.order() != tower.order()) throw std::invalid_argument("base/tower order mismatch");
    SquareMatrix<S> m = base.dense();
    const std::size_t last = base.order() - 1;
    for (std::size_t i = 0; i < base.order(); ++i) m(i, last) = tower.column()[i];
    return determinant(m);
}

/// C_p as the (-1)^p-signed p x p determinant with 1/3!, 1/5!, ... down the
/// subdiagonal bands and ones on the superdiagonal.
inline Rat c_via_det(long p) {
    if (p < 1) throw std::invalid_argument("c_via_det requires p >= 1");
    FactorialTable fact(2 * p + 1);
    SquareMatrix<Rat> m(static_cast<std::size_t>(p));
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < p; ++j) {
            const long q = i - j + 1;
            if (q >= 0) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = fact.reciprocal(2 * q + 1);
        }
    const Rat d = det_gauss(m);
    return p % 2 == 0 ? d : Rat(-d);
}

enum class Lemma2Side { I, II, III, IV };

struct ColumnPair {
    std::vector<Rat> left;
    std::vector<Rat> right;
};

/// First columns of both sides of the P-identities at truncation `depth`:
///   (I)   D_1 P^{2k+1} D_1^{-1} J^k   vs  J^k / prod_{q=0}^{k}   [I-(2q+1)^2 J]
///   (II)  D_2 P^{2k+2} D_2^{-1} J^k   vs  J^k / prod_{q=0}^{k}   [I-(2q+2)^2 J]
///   (III) D_1 Q P^{2k+1} D_1^{-1} J^k vs  J^k / prod_{q=0}^{k}   [I-(2q+2)^2 J]
///   (IV)  D_2 Q P^{2k+2} D_2^{-1} J^k vs  J^k / prod_{q=0}^{k+1} [I-(2q+1)^2 J]
inline ColumnPair lemma2_column(Lemma2Side side, std::size_t k, std::size_t depth) {
    if (depth < k + 1) throw std::invalid_argument("lemma2_column requires depth >= k+1");
    const auto p = ltt_from_harmonic(Harmonic::P, depth);
    const auto q = ltt_from_harmonic(Harmonic::Q, depth);
    const bool odd_family = side == Lemma2Side::I || side == Lemma2Side::III;
    const auto exponent = static_cast<unsigned>(odd_family ? 2 * k + 1 : 2 * k + 2);
    auto series = ltt_pow(p, exponent);
    if (side == Lemma2Side::III || side == Lemma2Side::IV) series = ltt_mul(q, series);
    const auto conj = d_conjugate(DiagFactorial{odd_family ? 1 : 2}, series);

    // J^k I_1 picks out column k.
    ColumnPair out;
    out.left = conj.column(k);

    std::size_t factors = k + 1;
    long base = 1;  // odd squares (2q+1)^2
    switch (side) {
        case Lemma2Side::I: break;
        case Lemma2Side::II:
        case Lemma2Side::III: base = 2; break;
        case Lemma2Side::IV: factors = k + 2; break;
    }
    auto rhs = LttSeries<Rat>::shift(depth, k);
    for (std::size_t i = 0; i < factors; ++i) {
        const long root = 2 * static_cast<long>(i) + base;
        rhs = ltt_mul(rhs, ltt_geometric(Rat(root * root), depth));
    }
    out.right = rhs.coeffs();
    return out;
}

}  // namespace hypersum
