#pragma once
// Parameter arithmetic for path ideals of cycles.

#include <numeric>
#include <string>

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

// The arithmetic record attached to a triple (n, m, l). The step l is
// stored normalized: gcd(l_raw, n), which generates the same ideal.
//
//   s = m mod l, t = (m - s) / l, k = n / l,
//   k = p(t+1) + d with p >= 0 and 0 <= d <= t (Euclidean, hence unique).
struct CycleParams {
    int n = 0;  // vertices of the cycle
    int m = 0;  // vertices per path
    int l = 0;  // normalized step
    int s = 0;
    int t = 0;
    int k = 0;
    int p = 0;
    int d = 0;

    std::string to_string() const {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " l=" + std::to_string(l) +
               " s=" + std::to_string(s) + " t=" + std::to_string(t) + " k=" + std::to_string(k) +
               " p=" + std::to_string(p) + " d=" + std::to_string(d);
    }

    friend bool operator==(const CycleParams&, const CycleParams&) = default;
};

// Replace a raw step by gcd(l_raw, n); the two steps generate identical
// ideals. Requires 1 <= l_raw and l_raw < m <= n. The normalized value
// automatically satisfies l <= min(m-1, n/2); both are re-checked.
inline int normalize_step(int l_raw, int n, int m) {
    if (m < 2 || m > n)
        throw invalid_parameter_error("require 2 <= m <= n, got m=" + std::to_string(m) +
                                      ", n=" + std::to_string(n));
    if (l_raw < 1)
        throw invalid_parameter_error("step l must be positive, got " + std::to_string(l_raw));
    if (l_raw >= m)
        throw invalid_parameter_error("step l must satisfy l <= min(m-1, n/2); got l=" +
                                      std::to_string(l_raw) + " with m=" + std::to_string(m) +
                                      ", n=" + std::to_string(n));
    const int l = std::gcd(l_raw, n);
    if (l == n)
        throw invalid_parameter_error("step normalizes to n (l a multiple of n): invalid");
    if (l >= m || 2 * l > n)
        throw invalid_parameter_error("normalized step l=" + std::to_string(l) +
                                      " violates l <= min(m-1, n/2) for m=" + std::to_string(m) +
                                      ", n=" + std::to_string(n));
    return l;
}

inline CycleParams make_params(int n, int m, int l_raw) {
    CycleParams cp;
    cp.n = n;
    cp.m = m;
    cp.l = normalize_step(l_raw, n, m);
    cp.s = m % cp.l;
    cp.t = (m - cp.s) / cp.l;
    cp.k = n / cp.l;
    cp.p = cp.k / (cp.t + 1);
    cp.d = cp.k % (cp.t + 1);
    return cp;
}

// True when (n, m, l) is accepted by make_params; no exceptions involved.
inline bool params_valid(int n, int m, int l) {
    return m >= 2 && m <= n && l >= 1 && l < m && n % l == 0 && 2 * l <= n;
}

}  // namespace cyclebetti
