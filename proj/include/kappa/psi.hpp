#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "kappa/forms.hpp"
#include "kappa/linalg.hpp"
#include "kappa/wedge.hpp"

namespace kappa {

// The sequence (kappa_0, ..., kappa_{e-1}) of ranks of the wedge maps of a
// (1,d,e) quadric space.
struct KappaVector {
    Index d = 0;
    Index e = 0;
    std::vector<long> entries;

    long ceiling(Index j) const {
        return static_cast<long>(d * std::min(binom(e, j), binom(e, j + 1)));
    }

    friend bool operator==(const KappaVector& a, const KappaVector& b) {
        return a.d == b.d && a.e == b.e && a.entries == b.entries;
    }
};

inline std::string to_string(const KappaVector& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k.entries[i]);
    }
    return s + ")";
}

// Matrix of psi_j : S_1 (x) wedge^j V -> S_1^* (x) wedge^{j+1} V in the bases
// {x_k (x) e_S} and {y_k (x) e_T}, both ordered subset-major then coordinate.
// Block (T,S) is sign(S,i) * A_i whenever T = S u {i}.
template <class S>
Mat<S> build_psi(const QuadricSpace<S>& v, int j) {
    const Index d = v.d;
    const int e = static_cast<int>(v.e());
    if (j < 0 || j >= e) throw WrongShape("psi grade out of range");
    WedgeBasis dom(e, j), cod(e, j + 1);
    Mat<S> m = Mat<S>::Zero(d * cod.size(), d * dom.size());
    for (int s = 0; s < dom.size(); ++s) {
        std::uint32_t sm = dom.mask(s);
        for (int i = 0; i < e; ++i) {
            int sign = WedgeBasis::wedge_sign(sm, i);
            if (sign == 0) continue;
            int t = cod.index_of(sm | (1u << i));
            const Mat<S>& a = v.basis[static_cast<std::size_t>(i)];
            if (sign > 0)
                m.block(t * d, s * d, d, d) += a;
            else
                m.block(t * d, s * d, d, d) -= a;
        }
    }
    return m;
}

// kappa_j = rank(psi_j) for j = 0..e-1; the symmetry kappa_j = kappa_{e-1-j}
// is asserted on every output.  Over Q the certified fast path settles
// full-rank maps from two modular ranks and leaves the rest to exact
// elimination.
template <class S>
KappaVector kappa_vector(const QuadricSpace<S>& v) {
    const int e = static_cast<int>(v.e());
    KappaVector k{v.d, v.e(), {}};
    k.entries.reserve(static_cast<std::size_t>(e));
    for (int j = 0; j < e; ++j) {
        Mat<S> psi = build_psi(v, j);
        if constexpr (std::is_same_v<S, Rational>) {
            k.entries.push_back(static_cast<long>(rank_certified(psi, 0)));
        } else {
            k.entries.push_back(static_cast<long>(rank(psi)));
        }
    }
    for (int j = 0; j < e; ++j)
        if (k.entries[static_cast<std::size_t>(j)] != k.entries[static_cast<std::size_t>(e - 1 - j)])
            throw std::logic_error("kappa symmetry violated: " + to_string(k));
    return k;
}

// kappa_0 as d minus the dimension of the common kernel of the A_i; avoids
// the wedge machinery entirely.
template <class S>
long kappa_zero(const QuadricSpace<S>& v) {
    Mat<S> stacked(v.d * v.e(), v.d);
    for (Index i = 0; i < v.e(); ++i) stacked.block(i * v.d, 0, v.d, v.d) = v.basis[static_cast<std::size_t>(i)];
    return static_cast<long>(rank(stacked));
}

// The composite psi_{j+1} . psi_j under the identification x_i -> y_i.
template <class S>
Mat<S> psi_compose(const QuadricSpace<S>& v, int j) {
    const int e = static_cast<int>(v.e());
    if (j < 0 || j > e - 2) throw WrongShape("no composition at grade " + std::to_string(j));
    return build_psi(v, j + 1) * build_psi(v, j);
}

// Reindexes the block rows of a matrix whose row blocks are labeled by
// grade-g subsets: block T moves to the slot of its complement, scaled by
// the sign of e_{T^c} ^ e_T.  For e = 3 this turns psi_1 into the
// skew-symmetric layout and relates psi_2 to psi_0^T.
template <class S>
Mat<S> hodge_relabel_rows(const Mat<S>& m, Index d, int e, int grade) {
    WedgeBasis from(e, grade), to(e, e - grade);
    Mat<S> out(m.rows(), m.cols());
    std::uint32_t full = (e == 32) ? ~0u : ((1u << e) - 1);
    for (int t = 0; t < from.size(); ++t) {
        std::uint32_t mask = from.mask(t);
        int slot = to.index_of(full ^ mask);
        int sign = WedgeBasis::hodge_sign(mask, e);
        if (sign > 0)
            out.block(slot * d, 0, d, m.cols()) = m.block(t * d, 0, d, m.cols());
        else
            out.block(slot * d, 0, d, m.cols()) = -m.block(t * d, 0, d, m.cols());
    }
    return out;
}

template <class S>
Mat<S> hodge_relabel_cols(const Mat<S>& m, Index d, int e, int grade) {
    return hodge_relabel_rows(Mat<S>(m.transpose()), d, e, grade).transpose();
}

}  // namespace kappa
