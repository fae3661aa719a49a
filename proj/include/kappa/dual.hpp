#pragma once

#include <ostream>
#include <type_traits>
#include <utility>

#include "kappa/errors.hpp"

namespace kappa {

// a + b*eps with eps^2 = 0, over a base field F.  Division requires the
// value part of the divisor to be nonzero.
template <class F>
struct Dual {
    F a{};  // value part
    F b{};  // infinitesimal part

    Dual() = default;
    Dual(int n) : a(n), b(0) {}  // NOLINT: implicit for Eigen's Scalar(int) casts
    Dual(F value) : a(std::move(value)), b(0) {}  // NOLINT
    Dual(F value, F deriv) : a(std::move(value)), b(std::move(deriv)) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_unit() const { return !a.is_zero(); }

    friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
    friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
    friend Dual operator/(const Dual& x, const Dual& y) {
        if (y.a.is_zero()) throw PivotNotUnit("division by a non-unit dual number");
        F inv_a = F(1) / y.a;
        // (a + b eps)/(c + d eps) = a/c + (b c - a d)/c^2 eps
        return {x.a * inv_a, (x.b * y.a - x.a * y.b) * inv_a * inv_a};
    }
    Dual operator-() const { return {-a, -b}; }

    Dual& operator+=(const Dual& o) { a += o.a; b += o.b; return *this; }
    Dual& operator-=(const Dual& o) { a -= o.a; b -= o.b; return *this; }
    Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
    Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

    friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const Dual& x) {
        return os << x.a << "+" << x.b << "e";
    }
};

template <class S>
struct is_dual : std::false_type {};
template <class F>
struct is_dual<Dual<F>> : std::true_type {};
template <class S>
inline constexpr bool is_dual_v = is_dual<S>::value;

// Pivot admissibility: for fields every nonzero entry is a unit; for dual
// numbers only entries with nonzero value part are.
template <class S>
bool is_unit_scalar(const S& s) {
    if constexpr (is_dual_v<S>) {
        return s.is_unit();
    } else {
        return !s.is_zero();
    }
}

}  // namespace kappa
