#pragma once

#include <utility>
#include <vector>

#include "kappa/forms.hpp"
#include "kappa/linalg.hpp"

namespace kappa {

// n points in affine d-space.  For the smoothable construction n = 1+d+e:
// a frame of d+1 points followed by e residual points.
template <class S>
struct PointConfiguration {
    Index d = 0;
    std::vector<Vec<S>> points;

    Index n() const { return static_cast<Index>(points.size()); }
};

template <class S>
PointConfiguration<S> make_points(Index d, std::vector<Vec<S>> pts) {
    for (const auto& p : pts)
        if (p.size() != d) throw WrongShape("point of wrong dimension");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw FormatError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    return {d, std::move(pts)};
}

template <class S>
struct NormalizedPoints {
    PointConfiguration<S> config;  // origin, canonical basis vectors, residuals
    Mat<S> frame;                  // columns p_i - p_0; the inverse of the normalizing linear map
    Vec<S> origin;                 // p_0

    Vec<S> residual(Index j) const {  // j = 0..e-1
        return config.points[static_cast<std::size_t>(config.d + 1 + j)];
    }
    Index e() const { return config.n() - config.d - 1; }
};

// Applies the unique affine map taking point 0 to the origin and points
// 1..d to the canonical basis vectors; the remaining e points become the
// residual coordinates a^(j).
template <class S>
NormalizedPoints<S> normalize_points(const PointConfiguration<S>& p, Index e) {
    const Index d = p.d;
    if (p.n() != 1 + d + e) throw LengthMismatch("expected 1+d+e = " + std::to_string(1 + d + e) + " points");
    Mat<S> frame(d, d);
    for (Index i = 0; i < d; ++i) frame.col(i) = p.points[static_cast<std::size_t>(i + 1)] - p.points[0];
    Mat<S> rhs(d, e);
    for (Index j = 0; j < e; ++j) rhs.col(j) = p.points[static_cast<std::size_t>(d + 1 + j)] - p.points[0];
    Mat<S> residuals;
    try {
        residuals = solve_columns(frame, rhs);
    } catch (const SingularTransform&) {
        throw DegenerateFrame("first d+1 points are affinely dependent");
    }
    NormalizedPoints<S> out;
    out.frame = std::move(frame);
    out.origin = p.points[0];
    out.config.d = d;
    out.config.points.reserve(static_cast<std::size_t>(1 + d + e));
    out.config.points.push_back(Vec<S>::Zero(d));
    for (Index i = 0; i < d; ++i) {
        Vec<S> ei = Vec<S>::Zero(d);
        ei(i) = S(1);
        out.config.points.push_back(std::move(ei));
    }
    for (Index j = 0; j < e; ++j) out.config.points.push_back(residuals.col(j));
    return out;
}

// Gram matrix of q = sum_i a_i y_i^2 - (sum_i a_i y_i)^2, i.e. diag(a) - a a^T.
template <class S>
Mat<S> residual_quadric(const Vec<S>& a) {
    Mat<S> m = -(a * a.transpose());
    for (Index i = 0; i < a.size(); ++i) m(i, i) += a(i);
    return m;
}

// The space spanned by the residual quadrics of a normalized configuration.
// Throws DependentBasis when the configuration is too special for the q_j to
// be independent.
template <class S>
QuadricSpace<S> space_from_points(const NormalizedPoints<S>& np) {
    const Index d = np.config.d, e = np.e();
    if (e > d * (d + 1) / 2) throw WrongShape("e exceeds dim S_2^*");
    std::vector<Mat<S>> forms;
    forms.reserve(static_cast<std::size_t>(e));
    for (Index j = 0; j < e; ++j) forms.push_back(residual_quadric<S>(np.residual(j)));
    return make_space(std::move(forms));
}

template <class S>
QuadricSpace<S> space_from_points(const PointConfiguration<S>& p, Index e) {
    return space_from_points(normalize_points(p, e));
}

}  // namespace kappa
