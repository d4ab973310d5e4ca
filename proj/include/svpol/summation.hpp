#pragma once
// Deterministic pairwise (cascade) summation. Every reduction over grid
// nodes in the library goes through this, in node order, so results are
// reproducible bit-for-bit regardless of how callers parallelize the
// per-node maps.

#include <cstddef>
#include <vector>

namespace svpol {

template <typename T>
T pairwise_sum(const T* data, std::size_t n) {
    if (n == 0) return T{};
    if (n <= 16) {
        T s = data[0];
        for (std::size_t i = 1; i < n; ++i) s = s + data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(v.data(), v.size());
}

}  // namespace svpol
