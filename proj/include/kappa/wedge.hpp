#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kappa/errors.hpp"

namespace kappa {

inline long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All j-element subsets of {0..e-1} as bitmasks, in lexicographic order of
// the sorted tuples, with index maps both ways.
class WedgeBasis {
  public:
    WedgeBasis(int e, int j) : e_(e), j_(j) {
        if (e < 0 || j < 0 || j > e) throw WrongShape("wedge grade out of range");
        if (e > 31) throw WrongShape("subset masks hold at most 31 generators");
        std::vector<int> pick(static_cast<std::size_t>(j));
        gen(pick, 0, 0);
        for (std::size_t i = 0; i < masks_.size(); ++i) index_[masks_[i]] = static_cast<int>(i);
    }

    int e() const { return e_; }
    int grade() const { return j_; }
    int size() const { return static_cast<int>(masks_.size()); }
    std::uint32_t mask(int idx) const { return masks_[static_cast<std::size_t>(idx)]; }
    int index_of(std::uint32_t m) const { return index_.at(m); }

    // Sign of e_S ^ e_i = sign * e_{S u {i}}; zero when i already lies in S.
    static int wedge_sign(std::uint32_t s, int i) {
        if (s & (1u << i)) return 0;
        int above = __builtin_popcount(s >> (i + 1));
        return (above % 2 == 0) ? 1 : -1;
    }

    // Sign defined by e_{S^c} ^ e_S = sign * e_{0..e-1}.
    static int hodge_sign(std::uint32_t s, int e) {
        int inversions = 0;
        for (int x = 0; x < e; ++x) {
            if (s & (1u << x)) continue;  // x in complement
            inversions += __builtin_popcount(s & ((1u << x) - 1));  // elements of S below x
        }
        return (inversions % 2 == 0) ? 1 : -1;
    }

  private:
    void gen(std::vector<int>& pick, std::size_t depth, int start) {
        if (depth == pick.size()) {
            std::uint32_t m = 0;
            for (int v : pick) m |= 1u << v;
            masks_.push_back(m);
            return;
        }
        for (int v = start; v < e_; ++v) {
            pick[depth] = v;
            gen(pick, depth + 1, v + 1);
        }
    }

    int e_, j_;
    std::vector<std::uint32_t> masks_;
    std::unordered_map<std::uint32_t, int> index_;
};

}  // namespace kappa
