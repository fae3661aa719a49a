#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "kappa/matrix.hpp"

namespace kappa {

template <class S>
struct RrefResult {
    Mat<S> matrix;
    std::vector<Index> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination.  Pivots are chosen
// column by column among unit entries; over a field that is classical RREF.
// Over the dual ring the pivot columns are those of the value-part RREF, and
// non-unit (pure infinitesimal) entries may legitimately survive in non-pivot
// columns.
template <class S>
RrefResult<S> rref(Mat<S> m) {
    const Index rows = m.rows(), cols = m.cols();
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pr = -1;
        for (Index i = r; i < rows; ++i)
            if (is_unit_scalar(m(i, c))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r) m.row(pr).swap(m.row(r));
        S inv = S(1) / m(r, c);
        for (Index j = 0; j < cols; ++j) m(r, j) = m(r, j) * inv;
        m(r, c) = S(1);
        for (Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == S(0)) continue;
            S f = m(i, c);
            for (Index j = 0; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
            m(i, c) = S(0);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

namespace detail {

// Plain Gaussian elimination rank; used for F_p where divisions are cheap.
template <class S>
Index rank_gauss(Mat<S> m) {
    const Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pr = -1;
        for (Index i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r) m.row(pr).swap(m.row(r));
        S inv = S(1) / m(r, c);
        for (Index i = r + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            S f = m(i, c) * inv;
            for (Index j = c + 1; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
            m(i, c) = S(0);
        }
        ++r;
    }
    return r;
}

struct ZMatrix {
    Index rows = 0, cols = 0;
    std::vector<mpz_class> a;
    mpz_class& at(Index i, Index j) { return a[static_cast<std::size_t>(i * cols + j)]; }
};

// Clear denominators row by row and strip row content; neither changes the rank.
inline ZMatrix integerize(const Mat<Rational>& m) {
    ZMatrix z;
    z.rows = m.rows();
    z.cols = m.cols();
    z.a.resize(static_cast<std::size_t>(z.rows * z.cols));
    mpz_class lcm, g, t;
    for (Index i = 0; i < z.rows; ++i) {
        lcm = 1;
        for (Index j = 0; j < z.cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        g = 0;
        for (Index j = 0; j < z.cols; ++j) {
            mpz_divexact(t.get_mpz_t(), lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
            z.at(i, j) = m(i, j).numerator() * t;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.at(i, j).get_mpz_t());
        }
        if (g > 1)
            for (Index j = 0; j < z.cols; ++j) mpz_divexact(z.at(i, j).get_mpz_t(), z.at(i, j).get_mpz_t(), g.get_mpz_t());
    }
    return z;
}

// Fraction-free (Bareiss) elimination on an integer matrix.  Every
// intermediate entry is a minor of the input, so sizes stay polynomial.
inline Index rank_bareiss(ZMatrix z) {
    const Index rows = z.rows, cols = z.cols;
    mpz_class prev = 1, t, u;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pr = -1;
        std::size_t best_bits = 0;
        for (Index i = r; i < rows; ++i) {
            if (z.at(i, c) == 0) continue;
            std::size_t bits = mpz_sizeinbase(z.at(i, c).get_mpz_t(), 2);
            if (pr < 0 || bits < best_bits) {
                pr = i;
                best_bits = bits;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (Index j = 0; j < cols; ++j) std::swap(z.at(pr, j), z.at(r, j));
        const mpz_class& piv = z.at(r, c);
        for (Index i = r + 1; i < rows; ++i) {
            if (z.at(i, c) == 0) {
                // rows untouched by the pivot still need the Bareiss rescale
                for (Index j = c + 1; j < cols; ++j) {
                    t = z.at(i, j) * piv;
                    mpz_divexact(z.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (Index j = c + 1; j < cols; ++j) {
                t = z.at(i, j) * piv;
                u = z.at(i, c) * z.at(r, j);
                t -= u;
                mpz_divexact(z.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z.at(i, c) = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

}  // namespace detail

// Rank of a matrix over the dual ring, full pivot search among units.
// Throws PivotNotUnit when the residual submatrix is nonzero but contains no
// unit, i.e. the rank is not determined by the value parts.
template <class F>
Index rank_over_dual(Mat<Dual<F>> m) {
    const Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    while (r < rows && r < cols) {
        Index pi = -1, pj = -1;
        for (Index i = r; i < rows && pi < 0; ++i)
            for (Index j = r; j < cols; ++j)
                if (m(i, j).is_unit()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r) m.row(pi).swap(m.row(r));
        if (pj != r) m.col(pj).swap(m.col(r));
        Dual<F> piv = m(r, r);
        for (Index i = r + 1; i < rows; ++i) {
            if (m(i, r) == Dual<F>(0)) continue;
            Dual<F> f = m(i, r) / piv;
            for (Index j = r; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    for (Index i = r; i < rows; ++i)
        for (Index j = r; j < cols; ++j)
            if (!m(i, j).is_zero()) throw PivotNotUnit("rank undetermined: non-unit residual entry");
    return r;
}

template <class S>
Index rank(const Mat<S>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if constexpr (is_dual_v<S>) {
        return rank_over_dual(m);
    } else if constexpr (std::is_same_v<S, Rational>) {
        return detail::rank_bareiss(detail::integerize(m));
    } else {
        return detail::rank_gauss(m);
    }
}

// Exact determinant.  Fraction-free elimination over Q; plain elimination
// over F_p.
template <class S>
S determinant(Mat<S> m) {
    static_assert(!is_dual_v<S>, "determinant over the dual ring is not supported");
    if (m.rows() != m.cols()) throw WrongShape("determinant of a non-square matrix");
    const Index n = m.rows();
    if (n == 0) return S(1);
    bool flip = false;
    if constexpr (std::is_same_v<S, Rational>) {
        S prev(1);
        for (Index c = 0; c < n; ++c) {
            Index pr = -1;
            for (Index i = c; i < n; ++i)
                if (!m(i, c).is_zero()) {
                    pr = i;
                    break;
                }
            if (pr < 0) return S(0);
            if (pr != c) {
                m.row(pr).swap(m.row(c));
                flip = !flip;
            }
            S piv = m(c, c);
            for (Index i = c + 1; i < n; ++i) {
                for (Index j = c + 1; j < n; ++j) m(i, j) = (m(i, j) * piv - m(i, c) * m(c, j)) / prev;
                m(i, c) = S(0);
            }
            prev = piv;
        }
        return flip ? -m(n - 1, n - 1) : m(n - 1, n - 1);
    } else {
        S det(1);
        for (Index c = 0; c < n; ++c) {
            Index pr = -1;
            for (Index i = c; i < n; ++i)
                if (!m(i, c).is_zero()) {
                    pr = i;
                    break;
                }
            if (pr < 0) return S(0);
            if (pr != c) {
                m.row(pr).swap(m.row(c));
                flip = !flip;
            }
            S inv = S(1) / m(c, c);
            det = det * m(c, c);
            for (Index i = c + 1; i < n; ++i) {
                if (m(i, c).is_zero()) continue;
                S f = m(i, c) * inv;
                for (Index j = c + 1; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
                m(i, c) = S(0);
            }
        }
        return flip ? -det : det;
    }
}

// Basis of the right kernel, read off the RREF.
template <class S>
std::vector<Vec<S>> kernel_basis(const Mat<S>& m) {
    auto [red, pivots] = rref(m);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec<S>> basis;
    for (Index c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        Vec<S> v = Vec<S>::Zero(cols);
        v(c) = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -red(static_cast<Index>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A X = B for invertible A (value-part invertible over duals).
template <class S>
Mat<S> solve_columns(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw WrongShape("solve_columns shape mismatch");
    const Index n = a.rows();
    Mat<S> aug(n, n + b.cols());
    aug.leftCols(n) = a;
    aug.rightCols(b.cols()) = b;
    auto [red, pivots] = rref(std::move(aug));
    if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
        throw SingularTransform("matrix is not invertible");
    return red.rightCols(b.cols());
}

// Extends the given independent vectors to a basis of S^d; the input vectors
// become the last columns of the returned invertible matrix.
template <class S>
Mat<S> complete_to_basis(const std::vector<Vec<S>>& vs, Index d) {
    std::vector<Vec<S>> chosen = vs;
    std::vector<Vec<S>> completion;
    auto current_rank = [&]() {
        Mat<S> m(d, static_cast<Index>(chosen.size()));
        for (Index j = 0; j < static_cast<Index>(chosen.size()); ++j) m.col(j) = chosen[static_cast<std::size_t>(j)];
        return rank(m);
    };
    Index r = current_rank();
    if (r != static_cast<Index>(vs.size())) throw DependentBasis("vectors to complete are dependent");
    for (Index i = 0; i < d && static_cast<Index>(chosen.size()) < d; ++i) {
        Vec<S> e = Vec<S>::Zero(d);
        e(i) = S(1);
        chosen.push_back(e);
        if (current_rank() == static_cast<Index>(chosen.size())) {
            completion.push_back(std::move(e));
        } else {
            chosen.pop_back();
        }
    }
    Mat<S> g(d, d);
    Index j = 0;
    for (const auto& v : completion) g.col(j++) = v;
    for (const auto& v : vs) g.col(j++) = v;
    return g;
}

namespace detail {
inline constexpr std::array<std::uint32_t, 8> kRankPrimePool = {
    10007u, 20011u, 65537u, 104729u, 1000003u, 15485863u, 998244353u, 2147483629u};
}

// Rank modulo `prime_count` primes drawn deterministically from `seed`;
// the maximum is a certified lower bound for the rank over Q.  Primes
// dividing any denominator are skipped.
Index rank_mod_primes(const Mat<Rational>& m, std::uint64_t seed, int prime_count);

// Fast path: if the modular lower bound already meets min(rows, cols) it is
// the rank; otherwise exact elimination over Q is the authority.
Index rank_certified(const Mat<Rational>& m, std::uint64_t seed);

}  // namespace kappa
