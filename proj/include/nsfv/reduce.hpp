#pragma once

#include <cstddef>
#include <span>

namespace nsfv {

/// Pairwise (tree) summation. The summation order depends only on the length
/// of the input, so reductions are reproducible run to run.
inline double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kBlock = 16;
    const std::size_t n = values.size();
    if (n <= kBlock) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace nsfv
