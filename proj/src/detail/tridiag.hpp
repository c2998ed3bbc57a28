#ifndef ZSQM_DETAIL_TRIDIAG_HPP
#define ZSQM_DETAIL_TRIDIAG_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace zsqm::detail {

// Sturm-sequence bisection for symmetric tridiagonal eigenvalues.
// diag has n entries, off has n-1 (off[i] couples i and i+1).

inline int sturm_count(const std::vector<double>& diag,
                       const std::vector<double>& off2, double lambda) {
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double d = diag[0] - lambda;
    if (d < 0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (std::abs(d) < tiny) d = (d < 0 ? -tiny : tiny);
        d = diag[i] - lambda - off2[i - 1] / d;
        if (d < 0) ++count;
    }
    return count;
}

// Lowest k eigenvalues, ascending.
inline std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                              const std::vector<double>& off, int k) {
    const int n = static_cast<int>(diag.size());
    std::vector<double> off2(off.size());
    for (std::size_t i = 0; i < off.size(); ++i) off2[i] = off[i] * off[i];

    double radius = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = std::abs(diag[i]);
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < n) r += std::abs(off[i]);
        radius = std::max(radius, r);
    }
    double lo0 = -radius, hi0 = radius;

    std::vector<double> out;
    out.reserve(k);
    for (int idx = 0; idx < k && idx < n; ++idx) {
        double lo = lo0, hi = hi0;
        // eigenvalue #idx (0-based): smallest lambda with count(lambda) > idx
        for (int it = 0; it < 120 && (hi - lo) > 1e-14 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
            double mid = 0.5 * (lo + hi);
            if (sturm_count(diag, off2, mid) > idx)
                hi = mid;
            else
                lo = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

} // namespace zsqm::detail

#endif
