#pragma once
// Path complexes of cycles and lines, their facet ideals, and the
// complement complexes of disjoint unions of runs.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclebetti/cycle_params.hpp"
#include "cyclebetti/errors.hpp"
#include "cyclebetti/simplicial.hpp"
#include "cyclebetti/vertex_set.hpp"

namespace cyclebetti {

// A squarefree monomial ideal by the supports of its minimal generators.
struct MonomialIdeal {
    int n = 0;  // ambient variable count
    std::vector<VertexSet> generators;
};

// The path complex of the cycle under the standard labeling,
// F_i = {x_{(i-1)l+1}, ..., x_{(i-1)l+m}} with indices reduced mod n.
// When m = n all k facets coincide and the complex is the single simplex.
struct CycleComplex {
    CycleParams params;
    SimplicialComplex complex;
};

inline CycleComplex build_cycle_complex(const CycleParams& cp) {
    std::vector<VertexSet> facets;
    facets.reserve(static_cast<std::size_t>(cp.k));
    for (int i = 1; i <= cp.k; ++i) {
        VertexSet f;
        for (int j = 1; j <= cp.m; ++j) {
            int label = ((i - 1) * cp.l + j - 1) % cp.n + 1;
            f.add(label);
        }
        facets.push_back(f);
    }
    return CycleComplex{cp, SimplicialComplex(cp.n, std::move(facets))};
}

// Path complex of a line: `length` facets stepping by l, no wraparound,
// on (length-1)l + m vertices.
inline SimplicialComplex build_run_complex(int length, int m, int l) {
    if (length < 1) throw invalid_parameter_error("run length must be positive");
    if (l < 1 || l >= m)
        throw invalid_parameter_error("run complex requires 1 <= l < m, got l=" +
                                      std::to_string(l) + ", m=" + std::to_string(m));
    const int vertices = (length - 1) * l + m;
    std::vector<VertexSet> facets;
    facets.reserve(static_cast<std::size_t>(length));
    for (int i = 1; i <= length; ++i) {
        VertexSet f;
        for (int j = 1; j <= m; ++j) f.add((i - 1) * l + j);
        facets.push_back(f);
    }
    return SimplicialComplex(vertices, std::move(facets));
}

// One generator per facet; minimality is inherited from facet incomparability.
inline MonomialIdeal facet_ideal(const SimplicialComplex& cx) {
    MonomialIdeal ideal;
    ideal.n = cx.universe().count();
    ideal.generators = cx.facets();
    return ideal;
}

// The complement, within its own vertex set, of a disjoint union of runs
// of the given lengths. Blocks are laid out consecutively: block b starts
// right after the (s_{b-1}-1)l + m vertices of the previous one.
inline SimplicialComplex build_E_complex(std::span<const int> run_lengths, int m, int l) {
    if (run_lengths.empty())
        throw invalid_parameter_error("run sequence must contain at least one run");
    if (l < 1 || l >= m)
        throw invalid_parameter_error("E complex requires 1 <= l < m");
    int total_vertices = 0;
    for (int s : run_lengths) {
        if (s < 1) throw invalid_parameter_error("run lengths must be positive");
        total_vertices += (s - 1) * l + m;
    }
    if (total_vertices > VertexSet::max_vertices)
        throw resource_limit_error("E complex on " + std::to_string(total_vertices) +
                                   " vertices exceeds the supported maximum " +
                                   std::to_string(VertexSet::max_vertices));
    std::vector<VertexSet> run_facets;
    int offset = 0;
    for (int s : run_lengths) {
        for (int i = 1; i <= s; ++i) {
            VertexSet f;
            for (int j = 1; j <= m; ++j) f.add(offset + (i - 1) * l + j);
            run_facets.push_back(f);
        }
        offset += (s - 1) * l + m;
    }
    const VertexSet y = VertexSet::full(total_vertices);
    SimplicialComplex gamma(y, std::move(run_facets));
    return complement_complex(gamma, y);
}

// Decomposition of an induced facet subset of a cycle path complex into
// runs (maximal blocks of cyclically consecutive facets).
struct RunDecomposition {
    struct Run {
        std::vector<int> facet_indices;  // standard-labeling positions, 0-based
        int length() const { return static_cast<int>(facet_indices.size()); }
    };
    std::vector<Run> runs;
    bool full_cycle = false;  // the subset was all k facets (not a run)

    std::vector<int> lengths() const {
        std::vector<int> out;
        out.reserve(runs.size());
        for (const Run& r : runs) out.push_back(r.length());
        return out;
    }
};

// Split an induced facet subset (mask over standard positions 0..k-1) into
// cyclic blocks, and cross-check the blocks against shared-vertex
// connectivity: for induced subsets of a cycle path complex the two must
// agree, and the block vertex sets must be pairwise disjoint.
inline RunDecomposition run_decomposition(const CycleComplex& cycle, std::uint64_t subset_mask) {
    const auto& facets = cycle.complex.facets();
    const int k = static_cast<int>(facets.size());
    RunDecomposition out;
    if (k > 64) throw resource_limit_error("run_decomposition: more than 64 facets");
    if (subset_mask == 0) return out;
    if (k > 0 && subset_mask == (k >= 64 ? ~0ULL : (1ULL << k) - 1)) {
        out.full_cycle = true;
        RunDecomposition::Run all;
        for (int i = 0; i < k; ++i) all.facet_indices.push_back(i);
        out.runs.push_back(std::move(all));
        return out;
    }

    auto in = [&](int i) { return (subset_mask >> (((i % k) + k) % k)) & 1ULL; };
    // blocks start where the cyclic predecessor is absent
    for (int i = 0; i < k; ++i) {
        if (!in(i) || in(i - 1)) continue;
        RunDecomposition::Run run;
        for (int j = i; in(j); ++j) run.facet_indices.push_back(j % k);
        out.runs.push_back(std::move(run));
    }

    // consistency with shared-vertex components (proper induced subsets of
    // a cycle path complex decompose into vertex-disjoint runs)
    std::vector<VertexSet> chosen;
    std::vector<int> chosen_pos;
    for (int i = 0; i < k; ++i)
        if (in(i)) {
            chosen.push_back(facets[i]);
            chosen_pos.push_back(i);
        }
    auto components = connected_components(std::span<const VertexSet>(chosen));
    if (components.size() != out.runs.size())
        throw internal_error("run_decomposition: component count " +
                             std::to_string(components.size()) + " != cyclic block count " +
                             std::to_string(out.runs.size()) + " for " + cycle.params.to_string());
    for (const auto& comp : components) {
        std::vector<int> positions;
        for (int idx : comp) positions.push_back(chosen_pos[static_cast<std::size_t>(idx)]);
        std::sort(positions.begin(), positions.end());
        bool matched = false;
        for (const auto& run : out.runs) {
            std::vector<int> rp = run.facet_indices;
            std::sort(rp.begin(), rp.end());
            if (rp == positions) {
                matched = true;
                break;
            }
        }
        if (!matched)
            throw internal_error(
                "run_decomposition: a connected component is not a set of cyclically "
                "consecutive facets for " +
                cycle.params.to_string());
    }
    return out;
}

}  // namespace cyclebetti
