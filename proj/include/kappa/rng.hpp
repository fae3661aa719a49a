#pragma once

#include <cstdint>
#include <random>

#include "kappa/linalg.hpp"
#include "kappa/matrix.hpp"

namespace kappa {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Deterministic seeded generator.  mt19937_64 output is fully specified by
// the standard; we derive bounded values ourselves so results are identical
// across platforms and library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish value in [0, n); the modulo bias is irrelevant here, the
    // contract is determinism.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Independent stream for trial `stream` of a run seeded with `seed`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        return splitmix64(seed ^ splitmix64(stream));
    }

  private:
    std::mt19937_64 eng_;
};

template <class S>
S random_scalar(const FieldOf<S>& field, Rng& rng, long spread = 20) {
    if constexpr (std::is_same_v<S, Fp>) {
        return Fp(static_cast<std::int64_t>(rng.below(field.p)), field.p);
    } else {
        return field.from_int(rng.int_in(-spread, spread));
    }
}

template <class S>
Mat<S> random_matrix(const FieldOf<S>& field, Index rows, Index cols, Rng& rng, long spread = 20) {
    Mat<S> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = random_scalar(field, rng, spread);
    return m;
}

template <class S>
Mat<S> random_symmetric(const FieldOf<S>& field, Index d, Rng& rng, long spread = 20) {
    Mat<S> m(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = i; j < d; ++j) {
            m(i, j) = random_scalar(field, rng, spread);
            m(j, i) = m(i, j);
        }
    return m;
}

template <class S>
Mat<S> random_invertible(const FieldOf<S>& field, Index d, Rng& rng, long spread = 20) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat<S> m = random_matrix(field, d, d, rng, spread);
        if (rank(m) == d) return m;
    }
    throw GenericityFailure("failed to draw an invertible matrix");
}

}  // namespace kappa
