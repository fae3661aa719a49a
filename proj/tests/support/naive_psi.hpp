#pragma once

// Test-only reference assembly of the wedge maps: enumerates the basis
// vectors u (x) e_S one by one and computes e_S ^ e_i by list insertion,
// independent of the bitmask machinery in the library.

#include <vector>

#include "kappa/forms.hpp"

namespace kappa::testsupport {

inline void subsets_of_size(int e, int j, int start, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == j) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < e; ++v) {
        cur.push_back(v);
        subsets_of_size(e, j, v + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> all_subsets(int e, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_of_size(e, j, 0, cur, out);
    return out;
}

// sign of e_S ^ e_i as computed by inserting i into the sorted list S;
// returns 0 when i already occurs.
inline int insertion_sign(const std::vector<int>& s, int i, std::vector<int>& merged) {
    merged = s;
    int swaps = 0;
    for (int x : s) {
        if (x == i) return 0;
        if (x > i) ++swaps;
    }
    merged.push_back(i);
    for (std::size_t k = merged.size() - 1; k > 0 && merged[k] < merged[k - 1]; --k)
        std::swap(merged[k], merged[k - 1]);
    return swaps % 2 == 0 ? 1 : -1;
}

template <class S>
kappa::Mat<S> naive_psi(const kappa::QuadricSpace<S>& v, int j) {
    using kappa::Index;
    const Index d = v.d;
    const int e = static_cast<int>(v.e());
    auto dom = all_subsets(e, j);
    auto cod = all_subsets(e, j + 1);
    auto index_in = [](const std::vector<std::vector<int>>& list, const std::vector<int>& key) {
        for (std::size_t k = 0; k < list.size(); ++k)
            if (list[k] == key) return static_cast<Index>(k);
        throw std::logic_error("subset not found");
    };
    kappa::Mat<S> m = kappa::Mat<S>::Zero(d * static_cast<Index>(cod.size()), d * static_cast<Index>(dom.size()));
    std::vector<int> merged;
    for (std::size_t s = 0; s < dom.size(); ++s) {
        for (Index k = 0; k < d; ++k) {
            // image of x_k (x) e_S is sum_i A_i(x_k) (x) (e_S ^ e_i)
            for (int i = 0; i < e; ++i) {
                int sign = insertion_sign(dom[s], i, merged);
                if (sign == 0) continue;
                Index t = index_in(cod, merged);
                for (Index r = 0; r < d; ++r) {
                    S val = v.basis[static_cast<std::size_t>(i)](r, k);
                    if (sign < 0) val = -val;
                    m(t * d + r, static_cast<Index>(s) * d + k) += val;
                }
            }
        }
    }
    return m;
}

}  // namespace kappa::testsupport
