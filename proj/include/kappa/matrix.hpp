#pragma once

#include <Eigen/Core>

#include "kappa/dual.hpp"
#include "kappa/fp.hpp"
#include "kappa/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<kappa::Rational> : GenericNumTraits<kappa::Rational> {
    typedef kappa::Rational Real;
    typedef kappa::Rational NonInteger;
    typedef kappa::Rational Nested;
    typedef kappa::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<kappa::Fp> : GenericNumTraits<kappa::Fp> {
    typedef kappa::Fp Real;
    typedef kappa::Fp NonInteger;
    typedef kappa::Fp Nested;
    typedef kappa::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <class F>
struct NumTraits<kappa::Dual<F>> : GenericNumTraits<kappa::Dual<F>> {
    typedef kappa::Dual<F> Real;
    typedef kappa::Dual<F> NonInteger;
    typedef kappa::Dual<F> Nested;
    typedef kappa::Dual<F> Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2 * NumTraits<F>::ReadCost,
        AddCost = 2 * NumTraits<F>::AddCost,
        MulCost = 3 * NumTraits<F>::MulCost,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace kappa {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& expr) {
    auto m = expr.eval();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

template <class S>
bool is_symmetric(const Mat<S>& m) {
    if (m.rows() != m.cols()) return false;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

// Coordinates of a symmetric d x d matrix in the basis of S_2^*:
// pairs (i,j) with i <= j in lexicographic order, value = entry (i,j).
template <class S>
Vec<S> sym_flatten(const Mat<S>& m) {
    Index d = m.rows();
    Vec<S> v(d * (d + 1) / 2);
    Index k = 0;
    for (Index i = 0; i < d; ++i)
        for (Index j = i; j < d; ++j) v(k++) = m(i, j);
    return v;
}

template <class S>
Mat<S> sym_unflatten(const Vec<S>& v, Index d) {
    Mat<S> m(d, d);
    Index k = 0;
    for (Index i = 0; i < d; ++i)
        for (Index j = i; j < d; ++j) {
            m(i, j) = v(k);
            m(j, i) = v(k);
            ++k;
        }
    return m;
}

// Conversion from the rational data every document/parser produces into the
// working field.  The Fp specialization carries its modulus.
template <class S>
struct FieldOf;

template <>
struct FieldOf<Rational> {
    Rational from_rational(const Rational& q) const { return q; }
    Rational from_int(long n) const { return Rational(n); }
    std::string name() const { return "Q"; }
};

template <>
struct FieldOf<Fp> {
    std::uint32_t p;
    explicit FieldOf(std::uint32_t p) : p(p) { validate_modulus(p); }
    Fp from_rational(const Rational& q) const { return Fp::from_rational(q, p); }
    Fp from_int(long n) const { return Fp(n, p); }
    std::string name() const { return "fp:" + std::to_string(p); }
};

template <class S>
Mat<S> mat_from_rational(const Mat<Rational>& m, const FieldOf<S>& field) {
    Mat<S> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = field.from_rational(m(i, j));
    return out;
}

}  // namespace kappa
