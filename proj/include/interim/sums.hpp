#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace interim {

// Neumaier-compensated sum over values already in ascending order.
inline double neumaier_sum_ordered(std::span<const double> xs) {
    double s = 0.0;
    double c = 0.0;
    for (double x : xs) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }
    return s + c;
}

// Compensated sum in a canonical (sorted) order: the result is a function of
// the multiset of values only, so it is bit-identical under any permutation
// of the input.
inline double stable_sum(std::span<const double> xs) {
    if (xs.size() <= 1) return xs.empty() ? 0.0 : xs[0] + 0.0;
    std::vector<double> buf(xs.begin(), xs.end());
    std::sort(buf.begin(), buf.end());
    return neumaier_sum_ordered(buf);
}

// In-place variant for hot loops that reuse a scratch buffer.
inline double stable_sum_inplace(std::span<double> buf) {
    if (buf.size() <= 1) return buf.empty() ? 0.0 : buf[0] + 0.0;
    std::sort(buf.begin(), buf.end());
    return neumaier_sum_ordered(buf);
}

}  // namespace interim
