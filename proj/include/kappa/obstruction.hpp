#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kappa/points.hpp"
#include "kappa/psi.hpp"
#include "kappa/rng.hpp"

namespace kappa {

struct ConditionCheck {
    int j;       // kappa index the condition constrains
    long value;  // kappa_j
    long bound;
    bool ok;
};

// The two necessary conditions for smoothability:
//   (*)  kappa_j <= (d+e) * C(e-1,j)   for j = 1..e-1
//   (**) kappa_1 <= (e-1)d + C(e,2)
// Failure of either proves the scheme nonsmoothable; passing both proves
// nothing in general (see the advisory machinery in the report layer).
struct SmoothabilityVerdict {
    std::vector<ConditionCheck> condition_star;
    std::optional<ConditionCheck> condition_star_star;
    bool obstructed = false;
};

inline SmoothabilityVerdict smoothability_verdict(const KappaVector& k) {
    if (k.e < 1) throw WrongShape("kappa vector with e < 1");
    SmoothabilityVerdict v;
    for (int j = 1; j < k.e; ++j) {
        long bound = static_cast<long>((k.d + k.e) * binom(k.e - 1, j));
        long value = k.entries[static_cast<std::size_t>(j)];
        v.condition_star.push_back({j, value, bound, value <= bound});
    }
    if (k.e >= 2) {
        long bound = static_cast<long>((k.e - 1) * k.d + binom(k.e, 2));
        long value = k.entries[1];
        v.condition_star_star = ConditionCheck{1, value, bound, value <= bound};
    }
    for (const auto& c : v.condition_star) v.obstructed = v.obstructed || !c.ok;
    if (v.condition_star_star) v.obstructed = v.obstructed || !v.condition_star_star->ok;
    return v;
}

// Membership in the kappa-cycle Xi(s): entrywise kappa_i <= s_i.
inline bool kappa_cycle_member(const KappaVector& k, const std::vector<long>& spec) {
    if (k.entries.size() != spec.size())
        throw LengthMismatch("kappa vector of length " + std::to_string(k.entries.size()) +
                             " vs cycle spec of length " + std::to_string(spec.size()));
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (k.entries[i] > spec[i]) return false;
    return true;
}

// The three deformation statements for a degree-9 scheme in A^5 (d=5, e=3):
// deforms to 9 distinct points / to a (1,4,3)^{+1}-ideal / to a smoothable one.
struct Deform153 {
    bool smoothable;
    bool deforms_to_143_plus1;
    bool deforms_to_smoothable_143_plus1;
};

inline Deform153 deformation_table_153(const KappaVector& k) {
    if (k.d != 5 || k.e != 3) throw WrongShape("deformation table requires d = 5, e = 3");
    return {kappa_cycle_member(k, {5, 12, 5}), kappa_cycle_member(k, {4, 12, 4}),
            kappa_cycle_member(k, {4, 10, 4})};
}

// kappa_0 <= d' is exactly the condition for peeling d - d' points off.
template <class S>
bool peel_test(const QuadricSpace<S>& v, Index d_target) {
    if (d_target > v.d) throw WrongShape("peel target exceeds d");
    return kappa_zero(v) <= static_cast<long>(d_target);
}

// Changes coordinates so the common kernel of the A_i becomes the trailing
// coordinates (symmetry makes kernel directions annihilate rows and columns
// simultaneously), then drops them.  The kappa vector is unchanged.
template <class S>
QuadricSpace<S> restrict_to_kernel_complement(const QuadricSpace<S>& v) {
    Mat<S> stacked(v.d * v.e(), v.d);
    for (Index i = 0; i < v.e(); ++i) stacked.block(i * v.d, 0, v.d, v.d) = v.basis[static_cast<std::size_t>(i)];
    auto kernel = kernel_basis(stacked);
    if (kernel.empty()) return v;
    Mat<S> g = complete_to_basis(kernel, v.d);
    QuadricSpace<S> moved = change_coordinates(v, g);
    const Index d_new = v.d - static_cast<Index>(kernel.size());
    std::vector<Mat<S>> forms;
    forms.reserve(moved.basis.size());
    for (const auto& a : moved.basis) forms.push_back(a.topLeftCorner(d_new, d_new));
    return make_space(std::move(forms));
}

template <class S>
long commutator_rank(const Mat<S>& b, const Mat<S>& c) {
    if (b.rows() != c.rows() || b.cols() != c.cols() || b.rows() != b.cols())
        throw WrongShape("commutator of mismatched matrices");
    Mat<S> comm = b * c - c * b;
    return static_cast<long>(rank(comm));
}

// Coefficients f_{alpha,beta,gamma} of det(uA + vB + wC), a homogeneous
// polynomial of degree d in (u,v,w).
template <class S>
struct NetDeterminant {
    Index d = 0;
    std::vector<S> coeffs;  // indexed over (alpha,beta) with alpha+beta <= d

    static Index index_of(Index alpha, Index beta, Index d) {
        // row-major over alpha = 0..d, beta = 0..d-alpha
        Index idx = 0;
        for (Index a = 0; a < alpha; ++a) idx += d - a + 1;
        return idx + beta;
    }
    const S& at(Index alpha, Index beta, Index gamma) const {
        if (alpha + beta + gamma != d) throw WrongShape("net coefficient indices must sum to d");
        return coeffs[static_cast<std::size_t>(index_of(alpha, beta, d))];
    }
    bool all_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
};

// Recovers all f_{alpha,beta,gamma} by evaluating det(uA + vB + C) at
// C(d+2,2) interpolation nodes and solving the exact linear system.  The
// first attempt uses the triangular lattice 0 <= u+v <= d (always unisolvent
// over Q); later attempts draw random nodes from the seed.
template <class S>
NetDeterminant<S> net_determinant(const Mat<S>& a, const Mat<S>& b, const Mat<S>& c,
                                  std::uint64_t seed, const FieldOf<S>& field) {
    const Index d = a.rows();
    if (b.rows() != d || c.rows() != d || !is_symmetric(a) || !is_symmetric(b) || !is_symmetric(c))
        throw WrongShape("net determinant needs three symmetric matrices of equal size");
    const Index n = (d + 1) * (d + 2) / 2;

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<std::pair<S, S>> nodes;
        nodes.reserve(static_cast<std::size_t>(n));
        if (attempt == 0) {
            for (Index u = 0; u <= d; ++u)
                for (Index v = 0; v <= d - u; ++v)
                    nodes.emplace_back(field.from_int(u), field.from_int(v));
        } else {
            Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(attempt)));
            for (Index i = 0; i < n; ++i)
                nodes.emplace_back(random_scalar(field, rng, 50), random_scalar(field, rng, 50));
        }
        Mat<S> system(n, n);
        Mat<S> rhs(n, 1);
        for (Index r = 0; r < n; ++r) {
            const auto& [u, v] = nodes[static_cast<std::size_t>(r)];
            Index col = 0;
            for (Index alpha = 0; alpha <= d; ++alpha)
                for (Index beta = 0; beta <= d - alpha; ++beta) {
                    S mono(1);
                    for (Index k = 0; k < alpha; ++k) mono *= u;
                    for (Index k = 0; k < beta; ++k) mono *= v;
                    system(r, col++) = mono;
                }
            Mat<S> pencil = a * u + b * v + c;
            rhs(r, 0) = determinant(std::move(pencil));
        }
        try {
            Mat<S> sol = solve_columns(system, rhs);
            NetDeterminant<S> out;
            out.d = d;
            out.coeffs.reserve(static_cast<std::size_t>(n));
            for (Index i = 0; i < n; ++i) out.coeffs.push_back(sol(i, 0));
            return out;
        } catch (const SingularTransform&) {
            continue;  // degenerate node set (possible over small F_p); redraw
        }
    }
    throw InterpolationSingular("no usable interpolation node set found");
}

// Exact purely-singular test for a net of quadrics: the net contains a
// nonsingular quadric iff some coefficient of det(uA+vB+wC) is nonzero.
template <class S>
bool purely_singular_exact(const Mat<S>& a, const Mat<S>& b, const Mat<S>& c, std::uint64_t seed,
                           const FieldOf<S>& field) {
    return net_determinant(a, b, c, seed, field).all_zero();
}

struct ProbeResult {
    bool certain_nonsingular = false;  // a nonsingular quadric was exhibited
    long trials_used = 0;
    Rational failure_bound;  // (d/N)^trials when nothing was found
};

// Randomized search for a nonsingular quadric in the space: evaluates the
// determinant at random combinations.  Any nonzero value is a certificate;
// an all-zero run only bounds the failure probability (Schwartz-Zippel).
template <class S>
ProbeResult nonsingular_quadric_probe(const QuadricSpace<S>& v, long trials, std::uint64_t seed,
                                      const FieldOf<S>& field) {
    long sample_size;
    if constexpr (std::is_same_v<S, Fp>) {
        sample_size = static_cast<long>(field.p);
    } else {
        sample_size = 1000003;
    }
    if (static_cast<long>(v.d) >= sample_size)
        throw Error("sample space too small for a meaningful determinant probe");
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        Mat<S> combo = Mat<S>::Zero(v.d, v.d);
        for (Index i = 0; i < v.e(); ++i) {
            S coeff;
            if constexpr (std::is_same_v<S, Fp>) {
                coeff = random_scalar(field, rng);
            } else {
                coeff = field.from_int(static_cast<long>(rng.below(static_cast<std::uint64_t>(sample_size))));
            }
            combo += v.basis[static_cast<std::size_t>(i)] * coeff;
        }
        if (!determinant(std::move(combo)).is_zero()) return {true, t + 1, Rational(0)};
    }
    Rational per_trial(static_cast<long>(v.d), sample_size);
    Rational bound(1);
    for (long t = 0; t < trials; ++t) bound *= per_trial;
    return {false, trials, bound};
}

// Frequency table of kappa vectors over `trials` spaces with i.i.d. uniform
// symmetric Gram matrices over F_p.  Deterministic in (seed, trials); each
// trial derives its own stream so the loop could be split across workers.
inline std::map<std::vector<long>, long> sample_generic_kappa(Index d, Index e, std::uint32_t p,
                                                              long trials, std::uint64_t seed) {
    FieldOf<Fp> field(p);
    std::map<std::vector<long>, long> freq;
    for (long t = 0; t < trials; ++t) {
        for (int retry = 0;; ++retry) {
            Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t) * 8 + static_cast<std::uint64_t>(retry)));
            std::vector<Mat<Fp>> forms;
            forms.reserve(static_cast<std::size_t>(e));
            for (Index i = 0; i < e; ++i) forms.push_back(random_symmetric(field, d, rng));
            try {
                ++freq[kappa_vector(make_space(std::move(forms))).entries];
                break;
            } catch (const DependentBasis&) {
                if (retry >= 4) throw GenericityFailure("repeatedly drew dependent forms");
            }
        }
    }
    return freq;
}

}  // namespace kappa
