#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "kappa/errors.hpp"

namespace kappa {

// Arbitrary-precision rational with plain value-returning operators.
// GMP's own C++ expression templates clash with Eigen's, so the mpq_class
// lives behind this wrapper and every operation resolves to a value here.
// Invariant: lowest terms, positive denominator (maintained by mpq).
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}        // NOLINT: implicit, Eigen casts Scalar(0)/Scalar(1)
    Rational(long n) : q_(static_cast<signed long>(n)) {}       // NOLINT
    Rational(long long n) : q_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(long num, long den) : q_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    // Accepts "n" or "n/d" with optional sign, arbitrary precision.
    static Rational from_string(std::string_view s);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string to_string() const { return q_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error("rational division by zero");
        return wrap(a.q_ / b.q_);
    }
    Rational operator-() const { return wrap(-q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_.get_str(); }

  private:
    template <class Expr>
    static Rational wrap(const Expr& e) {
        Rational r;
        r.q_ = e;  // forces evaluation of the gmpxx expression
        return r;
    }

    mpq_class q_;
};

inline Rational Rational::from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> mpz_class {
        if (t.empty()) throw FormatError("empty integer literal");
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw FormatError("sign without digits in rational literal");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw FormatError("bad rational literal: '" + std::string(t) + "'");
        return mpz_class(std::string(t), 10);
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_int(s)));
    mpz_class num = parse_int(s.substr(0, slash));
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) throw FormatError("rational literal with zero denominator: '" + std::string(s) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

}  // namespace kappa
