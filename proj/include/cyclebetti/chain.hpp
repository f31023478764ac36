#pragma once
// Reduced chain complexes of simplicial complexes: graded face lists
// (including the empty face in dimension -1), alternating-sign boundary
// matrices, and a homotopy-preserving collapse preprocessing pass.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cyclebetti/errors.hpp"
#include "cyclebetti/rank.hpp"
#include "cyclebetti/simplicial.hpp"
#include "cyclebetti/vertex_set.hpp"

namespace cyclebetti {

inline constexpr std::size_t kDefaultFaceBudget = std::size_t{1} << 22;

// Graded face lists of a complex. Slot d+1 holds the dimension-d faces,
// so slot 0 is the single empty face of every nonvoid complex. Faces are
// sorted lexicographically on their vertex indices within each dimension.
class ChainComplex {
public:
    ChainComplex() = default;  // void complex: no faces at all

    static ChainComplex from_complex(const SimplicialComplex& cx,
                                     std::size_t face_budget = kDefaultFaceBudget) {
        ChainComplex out;
        if (cx.is_void()) return out;
        for (const VertexSet& f : cx.facets()) {
            const int sz = f.count();
            if (sz >= 63 || (std::uint64_t{1} << sz) > face_budget)
                throw resource_limit_error(
                    "face enumeration: facet with " + std::to_string(sz) +
                    " vertices alone yields 2^" + std::to_string(sz) +
                    " faces, exceeding the face budget " + std::to_string(face_budget));
        }

        std::unordered_set<VertexSet, VertexSetHash> seen;
        std::vector<VertexSet> all;
        for (const VertexSet& f : cx.facets()) {
            const std::vector<int> verts = f.labels();
            const std::uint64_t total = std::uint64_t{1} << verts.size();
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                VertexSet face;
                for (std::uint64_t rest = mask; rest; rest &= rest - 1)
                    face.add(verts[std::countr_zero(rest)]);
                if (seen.insert(face).second) {
                    all.push_back(face);
                    if (all.size() > face_budget)
                        throw resource_limit_error(
                            "face enumeration: more than " + std::to_string(face_budget) +
                            " distinct faces (budget exceeded)");
                }
            }
        }

        const int top = cx.max_facet_card() - 1;
        out.faces_.assign(static_cast<std::size_t>(top) + 2, {});
        for (const VertexSet& face : all) out.faces_[face.count()].push_back(face);
        for (auto& level : out.faces_)
            std::sort(level.begin(), level.end(), VertexSet::lex_less_same_card);
        return out;
    }

    bool is_void() const { return faces_.empty(); }

    // Largest dimension with a face; -1 for {∅}, -2 for the void complex.
    int top_dim() const { return static_cast<int>(faces_.size()) - 2; }

    const std::vector<VertexSet>& faces(int d) const {
        static const std::vector<VertexSet> none;
        const int slot = d + 1;
        if (slot < 0 || slot >= static_cast<int>(faces_.size())) return none;
        return faces_[static_cast<std::size_t>(slot)];
    }

    std::size_t face_count(int d) const { return faces(d).size(); }

    std::size_t total_faces() const {
        std::size_t n = 0;
        for (const auto& level : faces_) n += level.size();
        return n;
    }

    // Signed Euler characteristic of the reduced complex: sum over all
    // dimensions, the empty face included with sign -1.
    long long reduced_euler_characteristic() const {
        long long chi = 0;
        for (int d = -1; d <= top_dim(); ++d)
            chi += (d % 2 == 0 ? 1LL : -1LL) * static_cast<long long>(face_count(d));
        return chi;
    }

    // ∂_d maps dimension-d chains to dimension-(d-1) chains. Entry
    // (σ minus its j-th vertex, σ) is (-1)^j; ∂_0 sends every vertex to
    // the empty face with coefficient +1.
    SparseMatrix boundary_matrix(int d) const {
        SparseMatrix m;
        if (d < 0) return m;  // ∂ into degree -2 is the zero map on nothing
        const auto& rows_faces = faces(d - 1);
        const auto& cols_faces = faces(d);
        m.rows = static_cast<std::uint32_t>(rows_faces.size());
        m.cols = static_cast<std::uint32_t>(cols_faces.size());
        m.col_entries.resize(m.cols);
        std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> row_index;
        row_index.reserve(rows_faces.size() * 2);
        for (std::uint32_t i = 0; i < m.rows; ++i) row_index.emplace(rows_faces[i], i);
        for (std::uint32_t c = 0; c < m.cols; ++c) {
            const std::vector<int> verts = cols_faces[c].labels();
            for (std::size_t j = 0; j < verts.size(); ++j) {
                VertexSet sub = cols_faces[c];
                sub.remove(verts[j]);
                auto it = row_index.find(sub);
                if (it == row_index.end())
                    throw internal_error("boundary_matrix: face list not downward closed");
                m.col_entries[c].emplace_back(it->second, (j % 2 == 0) ? 1 : -1);
            }
        }
        return m;
    }

    // Remove free pairs (σ, τ) with τ the unique face properly containing σ
    // until none remain. Each removal is an elementary collapse, so the
    // result is a homotopy-equivalent simplicial complex on the same
    // reduced-homology dimensions. The empty face is never paired.
    ChainComplex collapsed() const {
        if (is_void() || top_dim() < 0) return *this;
        std::unordered_map<VertexSet, int, VertexSetHash> coface_count;
        std::unordered_set<VertexSet, VertexSetHash> alive;
        VertexSet support;
        for (int d = 0; d <= top_dim(); ++d)
            for (const VertexSet& f : faces(d)) {
                alive.insert(f);
                support = support | f;
                coface_count.emplace(f, 0);
            }
        for (int d = 1; d <= top_dim(); ++d)
            for (const VertexSet& f : faces(d))
                for (int v : f.labels()) {
                    VertexSet sub = f;
                    sub.remove(v);
                    ++coface_count[sub];
                }

        std::vector<VertexSet> queue;
        for (int d = 0; d <= top_dim(); ++d)
            for (const VertexSet& f : faces(d))
                if (coface_count[f] == 1) queue.push_back(f);

        auto unique_live_coface = [&](const VertexSet& s) {
            VertexSet found;
            for (int v = support.first_label(); v != 0; v = support.next_label(v)) {
                if (s.contains(v)) continue;
                VertexSet up = s;
                up.add(v);
                if (alive.count(up)) {
                    found = up;
                    break;
                }
            }
            return found;
        };

        while (!queue.empty()) {
            VertexSet sigma = queue.back();
            queue.pop_back();
            if (!alive.count(sigma) || coface_count[sigma] != 1) continue;
            VertexSet tau = unique_live_coface(sigma);
            if (tau.empty() && sigma.empty()) continue;
            alive.erase(sigma);
            alive.erase(tau);
            auto drop_from = [&](const VertexSet& removed, const VertexSet& skip) {
                for (int v : removed.labels()) {
                    VertexSet sub = removed;
                    sub.remove(v);
                    if (sub.empty() || sub == skip || !alive.count(sub)) continue;
                    if (--coface_count[sub] == 1) queue.push_back(sub);
                }
            };
            drop_from(tau, sigma);
            drop_from(sigma, VertexSet{});
        }

        ChainComplex out;
        int new_top = -1;
        for (int d = 0; d <= top_dim(); ++d)
            if (!faces(d).empty())
                for (const VertexSet& f : faces(d))
                    if (alive.count(f)) new_top = std::max(new_top, d);
        out.faces_.assign(static_cast<std::size_t>(new_top) + 2, {});
        out.faces_[0] = faces_[0];  // the empty face always survives
        for (int d = 0; d <= new_top; ++d)
            for (const VertexSet& f : faces(d))
                if (alive.count(f)) out.faces_[static_cast<std::size_t>(d) + 1].push_back(f);
        return out;
    }

private:
    std::vector<std::vector<VertexSet>> faces_;
};

}  // namespace cyclebetti
