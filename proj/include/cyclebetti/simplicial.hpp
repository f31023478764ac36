#pragma once
// Simplicial complexes represented by their facets, plus the combinatorial
// operations (complements, induced subcollections, components, nerve) the
// rest of the library is built on.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclebetti/errors.hpp"
#include "cyclebetti/vertex_set.hpp"

namespace cyclebetti {

// A finite simplicial complex given by its facets.
//
// Invariants enforced at construction: every facet lies in the universe,
// facets are pairwise incomparable under inclusion, and no facet repeats.
// Input order of the surviving facets is preserved.
//
// Two degenerate complexes are distinguished: the void complex (no facets
// at all) and the complex {∅} whose only facet is the empty set.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // void complex on an empty universe

    SimplicialComplex(VertexSet universe, std::vector<VertexSet> facets)
        : universe_(universe) {
        for (const VertexSet& f : facets) {
            if (!f.subset_of(universe_))
                throw invalid_parameter_error("facet " + f.to_string() +
                                              " not contained in the universe " +
                                              universe_.to_string());
        }
        facets_ = reduce_to_maximal(std::move(facets));
    }

    SimplicialComplex(int n_vertices, std::vector<VertexSet> facets)
        : SimplicialComplex(VertexSet::full(n_vertices), std::move(facets)) {}

    const std::vector<VertexSet>& facets() const { return facets_; }
    const VertexSet& universe() const { return universe_; }

    bool is_void() const { return facets_.empty(); }

    // True for the complex {∅} (a single empty facet).
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }

    // Union of all facets; may be a proper subset of the universe.
    VertexSet vertex_support() const {
        VertexSet u;
        for (const VertexSet& f : facets_) u = u | f;
        return u;
    }

    int max_facet_card() const {
        int m = 0;
        for (const VertexSet& f : facets_) m = std::max(m, f.count());
        return m;
    }

    // All facets have equal cardinality.
    bool is_pure() const {
        for (const VertexSet& f : facets_)
            if (f.count() != facets_.front().count()) return false;
        return true;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        if (!(a.universe_ == b.universe_)) return false;
        auto fa = a.facets_, fb = b.facets_;
        std::sort(fa.begin(), fa.end(), VertexSet::card_lex_less);
        std::sort(fb.begin(), fb.end(), VertexSet::card_lex_less);
        return fa == fb;
    }

private:
    static std::vector<VertexSet> reduce_to_maximal(std::vector<VertexSet> in) {
        std::vector<VertexSet> out;
        for (std::size_t i = 0; i < in.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < in.size() && !dominated; ++j) {
                if (i == j) continue;
                if (in[i].subset_of(in[j]) && !(in[i] == in[j])) dominated = true;
                if (in[i] == in[j] && j < i) dominated = true;  // keep first duplicate
            }
            if (!dominated) out.push_back(in[i]);
        }
        return out;
    }

    VertexSet universe_;
    std::vector<VertexSet> facets_;
};

// ⟨V\F_1, ..., V\F_q⟩. Every facet must be contained in V. When every
// complement is empty the result is the complex {∅}, not the void complex.
inline SimplicialComplex complement_complex(const SimplicialComplex& cx, const VertexSet& v) {
    for (const VertexSet& f : cx.facets()) {
        if (!f.subset_of(v))
            throw invalid_parameter_error("complement_complex: facet " + f.to_string() +
                                          " not contained in " + v.to_string());
    }
    std::vector<VertexSet> comp;
    comp.reserve(cx.facets().size());
    for (const VertexSet& f : cx.facets()) comp.push_back(v - f);
    return SimplicialComplex(v, std::move(comp));
}

// The induced subcollection on a vertex window: the facets of the parent
// that lie entirely inside the window.
struct InducedSubcollection {
    VertexSet window;
    std::vector<int> facet_indices;   // positions in the parent facet list
    std::vector<VertexSet> facets;
    VertexSet vertex_set;             // union of the kept facets

    // The subcollection as a complex on its own vertex set.
    SimplicialComplex as_complex() const { return SimplicialComplex(vertex_set, facets); }
};

inline InducedSubcollection induced_on(const SimplicialComplex& cx, const VertexSet& window) {
    if (!window.subset_of(cx.universe()))
        throw invalid_parameter_error("induced_on: window " + window.to_string() +
                                      " not contained in the universe");
    InducedSubcollection out;
    out.window = window;
    for (std::size_t i = 0; i < cx.facets().size(); ++i) {
        if (cx.facets()[i].subset_of(window)) {
            out.facet_indices.push_back(static_cast<int>(i));
            out.facets.push_back(cx.facets()[i]);
            out.vertex_set = out.vertex_set | cx.facets()[i];
        }
    }
    return out;
}

// True iff the facet subset S (given as a bitmask over facet positions)
// equals the set of all facets contained in the union of S. Exactly the
// subsets arising as induced subcollections.
inline bool is_induced_facet_subset(const SimplicialComplex& cx, std::uint64_t subset_mask) {
    const auto& fs = cx.facets();
    if (fs.size() > 64)
        throw resource_limit_error("is_induced_facet_subset: more than 64 facets");
    VertexSet u;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if ((subset_mask >> i) & 1ULL) u = u | fs[i];
    for (std::size_t i = 0; i < fs.size(); ++i) {
        bool in = (subset_mask >> i) & 1ULL;
        if (!in && fs[i].subset_of(u)) return false;
    }
    return true;
}

inline bool is_induced_facet_subset(const SimplicialComplex& cx,
                                    const std::vector<VertexSet>& subset) {
    std::uint64_t mask = 0;
    for (const VertexSet& s : subset) {
        bool found = false;
        for (std::size_t i = 0; i < cx.facets().size(); ++i) {
            if (cx.facets()[i] == s) {
                mask |= 1ULL << i;
                found = true;
                break;
            }
        }
        if (!found)
            throw invalid_parameter_error("is_induced_facet_subset: " + s.to_string() +
                                          " is not a facet of the complex");
    }
    return is_induced_facet_subset(cx, mask);
}

// Connected components of a facet family under "facets share a vertex".
// Returns facet-index groups, each ordered, groups ordered by smallest index.
inline std::vector<std::vector<int>> connected_components(std::span<const VertexSet> facets) {
    const int q = static_cast<int>(facets.size());
    std::vector<int> comp(q, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < q; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> group{i};
        comp[i] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < group.size(); ++head) {
            int a = group[head];
            for (int b = 0; b < q; ++b) {
                if (comp[b] != -1) continue;
                if (facets[a].intersects(facets[b])) {
                    comp[b] = comp[i];
                    group.push_back(b);
                }
            }
        }
        std::sort(group.begin(), group.end());
        out.push_back(std::move(group));
    }
    return out;
}

inline std::vector<std::vector<int>> connected_components(const SimplicialComplex& cx) {
    return connected_components(std::span<const VertexSet>(cx.facets()));
}

// True iff some vertex lies in every facet. Such complexes have vanishing
// reduced homology in every degree.
inline bool is_cone(const SimplicialComplex& cx) {
    if (cx.is_void()) return false;
    VertexSet common = cx.facets().front();
    for (const VertexSet& f : cx.facets()) common = common & f;
    return !common.empty();
}

// Nerve of the cover of the complex by its facet simplices: a complex on
// one vertex per facet, with a face for every subfamily whose facets have
// a common vertex. All nonempty intersections of the cover are simplices,
// so the nerve is homotopy equivalent to the complex itself; its reduced
// homology agrees with the input's in every degree.
inline SimplicialComplex nerve_complex(const SimplicialComplex& cx) {
    const auto& fs = cx.facets();
    const int q = static_cast<int>(fs.size());
    if (q == 0) return SimplicialComplex();
    if (q > 24)
        throw resource_limit_error("nerve_complex: 2^" + std::to_string(q) +
                                   " subfamilies exceed the enumeration limit 2^24");
    const std::uint32_t total = 1u << q;
    std::vector<char> is_face(total, 0);
    is_face[0] = 1;
    // intersection over the subfamily; empty subfamily excluded below
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        std::uint32_t low = mask & (mask - 1);
        int bit = std::countr_zero(mask);
        if (low == 0) {
            is_face[mask] = !fs[bit].empty();
            continue;
        }
        if (!is_face[low]) continue;
        VertexSet inter = fs[bit];
        for (std::uint32_t rest = low; rest; rest &= rest - 1)
            inter = inter & fs[std::countr_zero(rest)];
        is_face[mask] = !inter.empty();
    }
    std::vector<VertexSet> nerve_facets;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (!is_face[mask]) continue;
        bool maximal = true;
        for (int j = 0; j < q && maximal; ++j)
            if (!((mask >> j) & 1u) && is_face[mask | (1u << j)]) maximal = false;
        if (!maximal) continue;
        VertexSet s;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            s.add(std::countr_zero(rest) + 1);
        nerve_facets.push_back(s);
    }
    if (nerve_facets.empty()) {
        // every cover element is the empty space: the input is {∅}
        nerve_facets.push_back(VertexSet{});
    }
    return SimplicialComplex(VertexSet::full(q), std::move(nerve_facets));
}

}  // namespace cyclebetti
