#pragma once

#include <utility>
#include <vector>

#include "kappa/linalg.hpp"
#include "kappa/matrix.hpp"

namespace kappa {

// An e-dimensional space of quadratic forms in d dual variables, stored as a
// basis of symmetric d x d Gram matrices.  This is the degree-two inverse
// system that determines a (1,d,e)-ideal.
template <class S>
struct QuadricSpace {
    Index d = 0;
    std::vector<Mat<S>> basis;

    Index e() const { return static_cast<Index>(basis.size()); }
};

// Stacks the flattened Gram matrices as rows of an e x d(d+1)/2 matrix; the
// coefficient matrix of the space in the monomial basis of S_2^*.
template <class S>
Mat<S> coefficient_matrix(const QuadricSpace<S>& v) {
    Mat<S> m(v.e(), v.d * (v.d + 1) / 2);
    for (Index i = 0; i < v.e(); ++i) m.row(i) = sym_flatten(v.basis[static_cast<std::size_t>(i)]).transpose();
    return m;
}

template <class S>
QuadricSpace<S> make_space(std::vector<Mat<S>> forms) {
    if (forms.empty()) throw FormatError("a quadric space needs at least one form");
    const Index d = forms.front().rows();
    for (const auto& f : forms) {
        if (f.rows() != d || f.cols() != d) throw FormatError("forms of mixed dimension");
        if (!is_symmetric(f)) throw FormatError("Gram matrix is not symmetric");
    }
    QuadricSpace<S> v{d, std::move(forms)};
    if (v.e() > d * (d + 1) / 2) throw DependentBasis("more forms than dim S_2^*");
    if (rank(coefficient_matrix(v)) != v.e())
        throw DependentBasis("forms do not span a space of dimension " + std::to_string(v.e()));
    return v;
}

// Coordinate change on S_1: every Gram matrix A becomes g^T A g.
template <class S>
QuadricSpace<S> change_coordinates(const QuadricSpace<S>& v, const Mat<S>& g) {
    if (g.rows() != v.d || g.cols() != v.d) throw WrongShape("coordinate change of wrong size");
    try {
        if (rank(g) != v.d) throw SingularTransform("coordinate change is singular");
    } catch (const PivotNotUnit&) {
        throw SingularTransform("coordinate change is singular at the value level");
    }
    QuadricSpace<S> out;
    out.d = v.d;
    out.basis.reserve(v.basis.size());
    Mat<S> gt = g.transpose();
    for (const auto& a : v.basis) out.basis.push_back(gt * a * g);
    return out;
}

// Basis change of the space itself: new basis k is sum_i h(i,k) * A_i.
template <class S>
QuadricSpace<S> change_basis(const QuadricSpace<S>& v, const Mat<S>& h) {
    const Index e = v.e();
    if (h.rows() != e || h.cols() != e) throw WrongShape("basis change of wrong size");
    if (rank(h) != e) throw SingularTransform("basis change is singular");
    QuadricSpace<S> out;
    out.d = v.d;
    out.basis.resize(static_cast<std::size_t>(e));
    for (Index k = 0; k < e; ++k) {
        Mat<S> m = Mat<S>::Zero(v.d, v.d);
        for (Index i = 0; i < e; ++i) m += v.basis[static_cast<std::size_t>(i)] * h(i, k);
        out.basis[static_cast<std::size_t>(k)] = std::move(m);
    }
    return out;
}

}  // namespace kappa
