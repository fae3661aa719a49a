#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kappa/psi.hpp"
#include "kappa/rational.hpp"

namespace kappa {

// Two-row graded Betti table of the module attached to a quadric space; a
// pure function of the kappa vector:
//   b_{i,i}   = d*C(e,i) - kappa_{i-1}
//   b_{i,i+1} = d*C(e,i) - kappa_i        (kappa_{-1} = kappa_e = 0)
struct BettiTable {
    Index d = 0;
    Index e = 0;
    std::vector<long> top;     // b_{i,i},   i = 0..e
    std::vector<long> bottom;  // b_{i,i+1}, i = 0..e
    int m = 0;                 // min { i >= 0 : kappa_i < d*C(e,i) }
};

inline long kappa_at(const KappaVector& k, long i) {
    if (i < 0 || i >= static_cast<long>(k.entries.size())) return 0;
    return k.entries[static_cast<std::size_t>(i)];
}

inline BettiTable betti_table(const KappaVector& k) {
    const Index d = k.d, e = k.e;
    BettiTable t{d, e, {}, {}, 0};
    for (long i = 0; i <= e; ++i) {
        long ceiling = static_cast<long>(d * binom(e, i));
        long top = ceiling - kappa_at(k, i - 1);
        long bottom = ceiling - kappa_at(k, i);
        if (top < 0 || bottom < 0)
            throw InvalidKappa("kappa exceeds its ceiling at index " + std::to_string(i));
        t.top.push_back(top);
        t.bottom.push_back(bottom);
    }
    int m = 0;
    while (m < e && kappa_at(k, m) == static_cast<long>(d * binom(e, m))) ++m;
    t.m = m;
    return t;
}

// Inverse of betti_table: kappa_j = d*C(e,j) - b_{j,j+1}.
inline KappaVector kappa_from_betti(const BettiTable& t) {
    KappaVector k{t.d, t.e, {}};
    for (long j = 0; j < t.e; ++j)
        k.entries.push_back(static_cast<long>(t.d * binom(t.e, j)) - t.bottom[static_cast<std::size_t>(j)]);
    return k;
}

// Renders the table in the standard two-row layout with "-" for zeros.
inline std::string render_betti(const BettiTable& t) {
    auto cell = [](long v) { return v == 0 ? std::string("-") : std::to_string(v); };
    std::ostringstream os;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(t.e); ++i) os << (i ? " " : "") << cell(t.top[i]);
    os << "\n";
    for (std::size_t i = 0; i <= static_cast<std::size_t>(t.e); ++i) os << (i ? " " : "") << cell(t.bottom[i]);
    return os.str();
}

// Exact upper bound for kappa_i implied by the pure-diagram inequality at
// index m with the given kappa_m:
//   kappa_i <= d*C(e,i) - (d*C(e,m) - kappa_m)(i+1-m) (m+1)!(e-m)!/((i+1)!(e-i)!)
struct KappaBound {
    int i;
    Rational exact;
    long floored;
};

inline std::vector<KappaBound> boij_soderberg_bounds(Index d, Index e, int m, long kappa_m) {
    if (m < 0 || m > (e - 1) / 2) throw WrongShape("bound index m out of range");
    long ceiling_m = static_cast<long>(d * binom(e, m));
    if (kappa_m > ceiling_m) throw InvalidKappa("kappa_m exceeds d*C(e,m)");
    Rational deficit(ceiling_m - kappa_m);
    std::vector<KappaBound> out;
    for (int i = m; i <= static_cast<int>((e - 1) / 2); ++i) {
        Rational factor(1);
        // (m+1)!(e-m)! / ((i+1)!(e-i)!) built as a product of small ratios
        for (long x = i + 2; x <= e + 1; ++x) factor *= Rational(x);        // (e+1)!/(i+1)!
        for (long x = m + 2; x <= e + 1; ++x) factor /= Rational(x);        // / ((e+1)!/(m+1)!)
        for (long x = e - i + 1; x <= e - m; ++x) factor *= Rational(x);    // (e-m)!/(e-i)!
        Rational bound = Rational(static_cast<long>(d * binom(e, i))) - deficit * Rational(i + 1 - m) * factor;
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), bound.numerator().get_mpz_t(), bound.denominator().get_mpz_t());
        out.push_back({i, bound, static_cast<long>(fl.get_si())});
    }
    return out;
}

struct AdmissibilityReport {
    bool ok = true;
    std::string first_violation;
};

// Necessary conditions for a sequence to arise as a kappa vector: symmetry,
// the min(d*C(e,j), d*C(e,j+1)) ceilings, and the pure-diagram inequalities.
inline AdmissibilityReport check_kappa_admissible(const KappaVector& k) {
    const Index e = k.e;
    if (static_cast<Index>(k.entries.size()) != e) return {false, "length does not equal e"};
    for (Index j = 0; j < e; ++j) {
        long v = k.entries[static_cast<std::size_t>(j)];
        if (v < 0) return {false, "kappa_" + std::to_string(j) + " negative"};
        if (v != k.entries[static_cast<std::size_t>(e - 1 - j)])
            return {false, "kappa_" + std::to_string(j) + " != kappa_" + std::to_string(e - 1 - j)};
        if (v > k.ceiling(j))
            return {false, "kappa_" + std::to_string(j) + " = " + std::to_string(v) + " exceeds ceiling " +
                               std::to_string(k.ceiling(j))};
    }
    int m = 0;
    while (m < e && kappa_at(k, m) == static_cast<long>(k.d * binom(e, m))) ++m;
    if (m > (e - 1) / 2) return {true, ""};
    for (const auto& b : boij_soderberg_bounds(k.d, e, m, kappa_at(k, m))) {
        if (Rational(kappa_at(k, b.i)) > b.exact)
            return {false, "kappa_" + std::to_string(b.i) + " = " + std::to_string(kappa_at(k, b.i)) +
                               " exceeds the index-" + std::to_string(m) + " bound " + b.exact.to_string()};
    }
    return {true, ""};
}

}  // namespace kappa
