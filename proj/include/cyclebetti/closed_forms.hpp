#pragma once
// Closed-form homology of run-union complements, top-degree Betti numbers,
// the graded Betti counting rule, pd/reg/depth of cycle path ideals, and
// the pd/reg of line path ideals. Pure arithmetic throughout.

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclebetti/betti_table.hpp"
#include "cyclebetti/cycle_params.hpp"
#include "cyclebetti/errors.hpp"
#include "cyclebetti/homology.hpp"
#include "cyclebetti/path_complex.hpp"

namespace cyclebetti {

// The closed forms all concentrate reduced homology in at most one degree.
struct HomologyAnswer {
    std::optional<int> degree;
    std::uint64_t dimension = 0;  // 0 exactly when degree is absent

    static HomologyAnswer zero() { return {}; }
    static HomologyAnswer one_at(int degree, std::uint64_t dimension = 1) {
        return {degree, dimension};
    }

    HomologyDims as_dims() const {
        HomologyDims out;
        if (degree) out.set(*degree, dimension);
        return out;
    }

    friend bool operator==(const HomologyAnswer&, const HomologyAnswer&) = default;

    std::string to_string() const {
        if (!degree) return "0";
        return "dim " + std::to_string(dimension) + " at degree " + std::to_string(*degree);
    }
};

// t = 1 regime: the complement of any disjoint union of runs has a single
// one-dimensional homology in degree (sum of run lengths) - 2.
inline HomologyAnswer e_complex_homology_t1(std::span<const int> run_lengths) {
    int total = 0;
    for (int s : run_lengths) {
        if (s < 1) throw invalid_parameter_error("run lengths must be positive");
        total += s;
    }
    if (run_lengths.empty()) throw invalid_parameter_error("empty run sequence");
    return HomologyAnswer::one_at(total - 2);
}

// Multiset of run lengths split by residue mod (t+1): lengths p_u(t+1)+1
// and q_v(t+1)+2. Only these residues admit nonzero homology when t >= 2.
struct RunProfile {
    std::vector<int> alpha_ps;  // runs of length p_u(t+1)+1
    std::vector<int> beta_qs;   // runs of length q_v(t+1)+2

    int alpha() const { return static_cast<int>(alpha_ps.size()); }
    int beta() const { return static_cast<int>(beta_qs.size()); }
    int P() const { return std::accumulate(alpha_ps.begin(), alpha_ps.end(), 0); }
    int Q() const { return std::accumulate(beta_qs.begin(), beta_qs.end(), 0); }

    // nullopt when some run length has residue outside {1, 2}
    static std::optional<RunProfile> classify(std::span<const int> run_lengths, int t) {
        if (t < 2) throw invalid_parameter_error("run profiles require t >= 2");
        RunProfile profile;
        for (int s : run_lengths) {
            if (s < 1) throw invalid_parameter_error("run lengths must be positive");
            const int d = s % (t + 1);
            const int p = s / (t + 1);
            if (d == 1)
                profile.alpha_ps.push_back(p);
            else if (d == 2)
                profile.beta_qs.push_back(p);
            else
                return std::nullopt;
        }
        return profile;
    }
};

// t >= 2, eligible profile: one-dimensional homology in degree
// 2(P+Q) + 2*beta + alpha - 2.
inline HomologyAnswer e_complex_homology_profile(const RunProfile& profile, int t) {
    if (t < 2) throw invalid_parameter_error("profile homology requires t >= 2");
    if (profile.alpha() == 0 && profile.beta() == 0)
        throw invalid_parameter_error("profile homology requires at least one run");
    return HomologyAnswer::one_at(2 * (profile.P() + profile.Q()) + 2 * profile.beta() +
                                  profile.alpha() - 2);
}

// Single run of length p(t+1)+d, t >= 2: dimension 1 at 2p-1 when d = 1,
// at 2p when d = 2, zero otherwise.
inline HomologyAnswer single_run_homology(int p, int d, int t) {
    if (t < 2) throw invalid_parameter_error("single_run_homology requires t >= 2");
    if (p < 0 || d < 0 || d > t || p * (t + 1) + d < 1)
        throw invalid_parameter_error("single_run_homology: need p >= 0, 0 <= d <= t, length >= 1");
    if (d == 1) return HomologyAnswer::one_at(2 * p - 1);
    if (d == 2) return HomologyAnswer::one_at(2 * p);
    return HomologyAnswer::zero();
}

// Dispatcher used for arbitrary run sequences: picks the t = 1 rule or the
// t >= 2 profile rule (ineligible profiles give the all-zero answer).
inline HomologyAnswer e_complex_homology(std::span<const int> run_lengths, int m, int l) {
    if (l < 1 || l >= m) throw invalid_parameter_error("e_complex_homology requires 1 <= l < m");
    const int t = m / l;
    if (t == 1) return e_complex_homology_t1(run_lengths);
    auto profile = RunProfile::classify(run_lengths, t);
    if (!profile) return HomologyAnswer::zero();
    return e_complex_homology_profile(*profile, t);
}

// Homology of the complement of the whole cycle path complex inside its
// vertex set: dimension t at degree 2p-2 when d = 0, dimension 1 at 2p-1
// when d != 0. (For t = 1 this coincides with the single dimension at
// degree k-2.)
inline HomologyAnswer cycle_complement_homology(const CycleParams& cp) {
    if (cp.t == 1) return HomologyAnswer::one_at(cp.k - 2);
    if (cp.d == 0) {
        if (cp.p == 0) throw internal_error("cycle params with d=0 require p>=1 (k>=2)");
        return HomologyAnswer::one_at(2 * cp.p - 2, static_cast<std::uint64_t>(cp.t));
    }
    return HomologyAnswer::one_at(2 * cp.p - 1);
}

// The top-degree column j = n of the Betti table of R/I_{m,l}(C_n):
// beta_{2p,n} = t when d = 0, beta_{2p+1,n} = 1 when d != 0.
inline BettiTable top_degree_column(const CycleParams& cp) {
    BettiTable out;
    if (cp.d == 0)
        out.add(2 * cp.p, cp.n, static_cast<std::uint64_t>(cp.t));
    else
        out.add(2 * cp.p + 1, cp.n, 1);
    return out;
}

// Result of the graded counting rule below top degree. For t = 1 the rule
// does not apply and the computation is explicitly deferred to the oracle.
struct GradedBetti {
    bool deferred_t1 = false;
    BettiTable table;  // entries with 0 < j < n only
};

// Count, for every (i, j) with j < n, the induced subcollections of the
// cycle path complex whose runs all have length with residue 1 or 2 mod
// (t+1) and whose profile lands on (i, j):
//   j = [(P+Q)(t+1) + beta] l + m (alpha + beta),
//   i = 2(P+Q) + 2 beta + alpha.
inline GradedBetti graded_betti_cycle(const CycleComplex& cycle) {
    const CycleParams& cp = cycle.params;
    GradedBetti out;
    if (cp.t == 1) {
        out.deferred_t1 = true;
        return out;
    }
    const int k = static_cast<int>(cycle.complex.facets().size());
    if (k > 63) throw resource_limit_error("graded_betti_cycle: too many facets");
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        if (!is_induced_facet_subset(cycle.complex, mask)) continue;
        RunDecomposition runs = run_decomposition(cycle, mask);
        auto profile = RunProfile::classify(runs.lengths(), cp.t);
        if (!profile) continue;
        const int pq = profile->P() + profile->Q();
        const int j = (pq * (cp.t + 1) + profile->beta()) * cp.l +
                      cp.m * (profile->alpha() + profile->beta());
        const int i = 2 * pq + 2 * profile->beta() + profile->alpha();
        out.table.add(i, j, 1);
    }
    return out;
}

// Single-entry view of the counting rule. i = j = 0 answers 1 by the
// beta_{0,0} convention; j >= n is outside this rule's range.
inline GradedBetti graded_betti_cycle_entry(const CycleComplex& cycle, int i, int j) {
    if (i < 0 || j < 0 || i > j || j >= cycle.params.n)
        throw invalid_parameter_error("graded_betti_cycle_entry: need 0 <= i <= j < n");
    GradedBetti all = graded_betti_cycle(cycle);
    GradedBetti out;
    out.deferred_t1 = all.deferred_t1;
    if (out.deferred_t1) return out;
    if (i == 0 && j == 0)
        out.table.add(0, 0, 1);
    else
        out.table.add(i, j, all.table.at(i, j));
    return out;
}

// pd(R/I) = 2p (d = 0) or 2p+1; reg(R/I) = n-2p (d = 0) or n-2p-1.
inline std::pair<int, int> pd_reg_cycle(const CycleParams& cp) {
    if (cp.d == 0) return {2 * cp.p, cp.n - 2 * cp.p};
    return {2 * cp.p + 1, cp.n - 2 * cp.p - 1};
}

// depth(R/I) = n - pd(R/I); always equal to reg(R/I) here.
inline int depth_cycle(const CycleParams& cp) {
    auto [pd, reg] = pd_reg_cycle(cp);
    const int depth = cp.n - pd;
    if (depth != reg) throw internal_error("depth != reg for " + cp.to_string());
    return depth;
}

// pd and reg of the line path ideal J_m(L_n) itself (not of R/J), where
// n = p(m+1) + d with 0 <= d <= m:
//   pd  = 2p-1 (d != m) or 2p;  reg = p(m-1)+1 (d != m) or p(m-1)+m.
inline std::pair<int, int> pd_reg_line_ideal(int n, int m) {
    if (m < 2 || m > n)
        throw invalid_parameter_error("pd_reg_line_ideal: require 2 <= m <= n (no paths otherwise)");
    const int p = n / (m + 1);
    const int d = n % (m + 1);
    if (d == m) return {2 * p, p * (m - 1) + m};
    return {2 * p - 1, p * (m - 1) + 1};
}

// Verification of the vanishing bounds against a computed table, below top
// degree. Applies only in the t >= 2 regime; t = 1 reports a skip.
struct BoundsReport {
    enum class Status { ok, skipped_t1, violation };
    Status status = Status::ok;
    int bad_i = -1, bad_j = -1;
    std::string clause;

    bool ok() const { return status != Status::violation; }

    std::string to_string() const {
        switch (status) {
            case Status::ok:
                return "all bounds hold";
            case Status::skipped_t1:
                return "skipped (t = 1 regime)";
            default:
                return "violated " + clause + " at (i,j)=(" + std::to_string(bad_i) + "," +
                       std::to_string(bad_j) + ")";
        }
    }
};

inline BoundsReport check_betti_bounds(const CycleParams& cp, const BettiTable& table) {
    BoundsReport report;
    if (cp.t == 1) {
        report.status = BoundsReport::Status::skipped_t1;
        return report;
    }
    const BettiTable top = top_degree_column(cp);
    for (const auto& [key, mult] : table.entries()) {
        const auto [i, j] = key;
        if (j == 0) continue;
        auto fail = [&](const std::string& clause) {
            report.status = BoundsReport::Status::violation;
            report.bad_i = i;
            report.bad_j = j;
            report.clause = clause;
        };
        if (j == cp.n) {
            // top degree is governed by the closed-form column
            if (top.at(i, j) != mult) {
                fail("top-degree column mismatch");
                return report;
            }
            continue;
        }
        if (j > static_cast<long long>(cp.m) * i) {
            fail("j <= m*i");
            return report;
        }
        if (cp.d == 0 && i >= 2 * cp.p) {
            fail("i < 2p (d = 0)");
            return report;
        }
        if (cp.d != 0 && i > 2 * cp.p + 1) {
            fail("i <= 2p+1 (d != 0)");
            return report;
        }
        const int ji_bound = (cp.d == 0) ? cp.n - 2 * cp.p : cp.n - 2 * cp.p - 2;
        if (j - i > ji_bound) {
            fail("j-i bound below top degree");
            return report;
        }
    }
    return report;
}

}  // namespace cyclebetti
