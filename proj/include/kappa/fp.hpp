#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "kappa/errors.hpp"
#include "kappa/rational.hpp"

namespace kappa {

// Largest modulus we accept; keeps every product of two reduced residues
// inside a signed 64-bit intermediate.
inline constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void validate_modulus(std::uint32_t p) {
    if (p == 2 || p == 3) throw BadField("characteristic 2 and 3 are excluded");
    if (p < 5) throw BadField("modulus must be a prime >= 5");
    if (p > kMaxModulus) throw BadField("modulus too large (must fit in 31 bits)");
    if (!is_prime_u32(p)) throw BadField("modulus " + std::to_string(p) + " is not prime");
}

// Element of F_p with the modulus carried at runtime.
//
// A default-constructed element (or one built from a bare integer) is an
// "unattached constant": p_ == 0 and v_ holds the integer.  Arithmetic with
// an attached element adopts its modulus.  Eigen manufactures Scalar(0) and
// Scalar(1) temporaries all over the place, which is exactly what this mode
// absorbs.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(int n) : v_(n), p_(0) {}   // NOLINT: implicit for Eigen's Scalar(int) casts
    Fp(long n) : v_(n), p_(0) {}  // NOLINT
    Fp(std::int64_t n, std::uint32_t p) : p_(p) { v_ = reduce(n, p); }

    static Fp zero(std::uint32_t p) { return Fp(0, p); }
    static Fp one(std::uint32_t p) { return Fp(1, p); }

    static Fp from_rational(const Rational& q, std::uint32_t p) {
        mpz_class num = q.numerator() % p;
        mpz_class den = q.denominator() % p;
        std::int64_t n = num.get_si();
        std::int64_t d = den.get_si();
        if (reduce(d, p) == 0)
            throw FormatError("denominator of " + q.to_string() + " vanishes mod " + std::to_string(p));
        return Fp(n, p) / Fp(d, p);
    }

    std::int64_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool attached() const { return p_ != 0; }
    bool is_zero() const { return v_ == 0; }

    Rational lift() const { return Rational(static_cast<long>(v_)); }

    friend Fp operator+(Fp a, Fp b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Fp(x + y);
        std::int64_t s = x + y;
        if (s >= p) s -= p;
        return make(s, p);
    }
    friend Fp operator-(Fp a, Fp b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Fp(x - y);
        std::int64_t s = x - y;
        if (s < 0) s += p;
        return make(s, p);
    }
    friend Fp operator*(Fp a, Fp b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Fp(x * y);
        return make((x * y) % p, p);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const {
        if (p_ == 0) return Fp(-v_);
        return make(v_ == 0 ? 0 : p_ - v_, p_);
    }

    Fp& operator+=(Fp o) { *this = *this + o; return *this; }
    Fp& operator-=(Fp o) { *this = *this - o; return *this; }
    Fp& operator*=(Fp o) { *this = *this * o; return *this; }
    Fp& operator/=(Fp o) { *this = *this / o; return *this; }

    Fp inverse() const {
        if (p_ == 0) {
            if (v_ == 1) return Fp(1);
            if (v_ == -1) return Fp(-1);
            throw Error("inverse of unattached F_p constant");
        }
        if (v_ == 0) throw Error("division by zero in F_p");
        // extended Euclid on (v_, p_)
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t quot = r / new_r;
            t = std::exchange(new_t, t - quot * new_t);
            r = std::exchange(new_r, r - quot * new_r);
        }
        if (t < 0) t += p_;
        return make(t, p_);
    }

    friend bool operator==(Fp a, Fp b) {
        auto [x, y, p] = align(a, b);
        return x == y;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

  private:
    static Fp make(std::int64_t v, std::uint32_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    static std::int64_t reduce(std::int64_t n, std::uint32_t p) {
        std::int64_t r = n % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return r;
    }
    struct Aligned {
        std::int64_t x, y;
        std::uint32_t p;
    };
    static Aligned align(Fp a, Fp b) {
        if (a.p_ == b.p_) return {a.v_, b.v_, a.p_};
        if (a.p_ == 0) return {reduce(a.v_, b.p_), b.v_, b.p_};
        if (b.p_ == 0) return {a.v_, reduce(b.v_, a.p_), a.p_};
        throw Error("mixed moduli in F_p arithmetic");
    }

    std::int64_t v_;
    std::uint32_t p_;
};

}  // namespace kappa
