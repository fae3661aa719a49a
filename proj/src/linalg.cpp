#include "kappa/linalg.hpp"

#include "kappa/rng.hpp"

namespace kappa {

Index rank_mod_primes(const Mat<Rational>& m, std::uint64_t seed, int prime_count) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Rng rng(seed);
    Index best = 0;
    int used = 0;
    std::array<bool, detail::kRankPrimePool.size()> tried{};
    while (used < prime_count) {
        std::size_t k = static_cast<std::size_t>(rng.below(detail::kRankPrimePool.size()));
        if (tried[k]) {
            bool all = true;
            for (bool t : tried) all = all && t;
            if (all) break;
            continue;
        }
        tried[k] = true;
        std::uint32_t p = detail::kRankPrimePool[k];
        Mat<Fp> red(m.rows(), m.cols());
        bool good = true;
        for (Index i = 0; i < m.rows() && good; ++i)
            for (Index j = 0; j < m.cols(); ++j) {
                try {
                    red(i, j) = Fp::from_rational(m(i, j), p);
                } catch (const FormatError&) {
                    good = false;  // p divides a denominator; skip this prime
                    break;
                }
            }
        if (!good) continue;
        ++used;
        best = std::max(best, detail::rank_gauss(std::move(red)));
    }
    return best;
}

Index rank_certified(const Mat<Rational>& m, std::uint64_t seed) {
    Index bound = std::min(m.rows(), m.cols());
    Index lower = rank_mod_primes(m, seed, 2);
    if (lower == bound) return lower;
    return rank(m);
}

}  // namespace kappa
