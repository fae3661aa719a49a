#pragma once

#include <map>
#include <vector>

#include "kappa/dual.hpp"
#include "kappa/points.hpp"
#include "kappa/rng.hpp"

namespace kappa {

// Local chart of Gr(e, S_2^*): pivot columns of the RREF of the coefficient
// matrix, and the entries in the non-pivot columns as coordinates.
template <class S>
struct ChartPoint {
    std::vector<Index> pivots;
    Mat<S> coords;  // e x (dim S_2^* - e)
};

template <class S>
ChartPoint<S> chart_of_space(const QuadricSpace<S>& v) {
    auto [red, pivots] = rref(coefficient_matrix(v));
    if (static_cast<Index>(pivots.size()) != v.e())
        throw DependentBasis("coefficient matrix has rank below e");
    const Index cols = red.cols(), e = v.e();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Mat<S> coords(e, cols - e);
    Index k = 0;
    for (Index c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        coords.col(k++) = red.col(c);
    }
    return {std::move(pivots), std::move(coords)};
}

// Chart coordinates of the space cut out initially by 1+d+e points in
// general position: normalize, build the residual quadrics, then transport
// back through the frame (quadrics transform by congruence under the linear
// part of the normalization, so the space of the original configuration is
// F Q F^T for the frame matrix F).
template <class S>
ChartPoint<S> h_map(const PointConfiguration<S>& p, Index e) {
    NormalizedPoints<S> np = normalize_points(p, e);
    QuadricSpace<S> core = space_from_points(np);
    QuadricSpace<S> moved = change_coordinates(core, Mat<S>(np.frame.transpose()));
    return chart_of_space(moved);
}

// Published values of the dimension bound for e = 3 (columns d -> dim).
inline const std::map<Index, long>& smoothable_dimension_reference() {
    static const std::map<Index, long> table = {{4, 20}, {5, 33}, {6, 48}, {7, 65},
                                                {8, 84}, {9, 105}, {10, 128}, {11, 153}};
    return table;
}

// Lower bound for the dimension of the locus of smoothable (1,d,3)-ideals:
// the exact Jacobian rank of h_map at a random rational configuration.  Each
// of the n*d directional derivatives is one dual-number evaluation; the
// derivative rows are stacked and the rank is computed over Q.
//
// The base configuration keeps the standard frame and randomizes only the
// residual points: the chart map transforms equivariantly under affine
// motions of the configuration, so the generic Jacobian rank on that slice
// equals the generic rank, while the entries stay small.
inline long smoothable_locus_dimension_lower_bound(Index d, std::uint64_t seed, int max_retries = 8) {
    if (d < 4) throw WrongShape("dimension probe requires d >= 4");
    const Index e = 3;
    const Index n = 1 + d + e;
    using D = Dual<Rational>;

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Vec<Rational>> base;
        base.reserve(static_cast<std::size_t>(n));
        base.push_back(Vec<Rational>::Zero(d));
        for (Index i = 0; i < d; ++i) {
            Vec<Rational> ei = Vec<Rational>::Zero(d);
            ei(i) = Rational(1);
            base.push_back(std::move(ei));
        }
        FieldOf<Rational> fq;
        for (Index j = 0; j < e; ++j) {
            Vec<Rational> r(d);
            for (Index c = 0; c < d; ++c) r(c) = fq.from_int(rng.int_in(-20, 20));
            base.push_back(std::move(r));
        }
        try {
            PointConfiguration<Rational> base_config = make_points(d, base);
            ChartPoint<Rational> base_chart = h_map(base_config, e);
            const Index chart_dim = base_chart.coords.size();

            Mat<Rational> jacobian(n * d, chart_dim);
            Index row = 0;
            for (Index q = 0; q < n; ++q) {
                for (Index c = 0; c < d; ++c) {
                    std::vector<Vec<D>> pts;
                    pts.reserve(static_cast<std::size_t>(n));
                    for (Index pi = 0; pi < n; ++pi) {
                        Vec<D> lifted(d);
                        for (Index pc = 0; pc < d; ++pc) {
                            Rational deriv((pi == q && pc == c) ? 1 : 0);
                            lifted(pc) = D(base[static_cast<std::size_t>(pi)](pc), deriv);
                        }
                        pts.push_back(std::move(lifted));
                    }
                    ChartPoint<D> chart = h_map(PointConfiguration<D>{d, std::move(pts)}, e);
                    if (chart.pivots != base_chart.pivots)
                        throw PivotNotUnit("pivot drift between dual evaluations");
                    Index k = 0;
                    for (Index i = 0; i < chart.coords.rows(); ++i)
                        for (Index j = 0; j < chart.coords.cols(); ++j) jacobian(row, k++) = chart.coords(i, j).b;
                    ++row;
                }
            }
            return static_cast<long>(rank(jacobian));
        } catch (const DegenerateFrame&) {
        } catch (const DependentBasis&) {
        } catch (const PivotNotUnit&) {
        } catch (const FormatError&) {
        }
    }
    throw GenericityFailure("no generic configuration found within the retry budget");
}

}  // namespace kappa
