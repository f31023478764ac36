#pragma once
// Exact reduced simplicial homology dimensions over a chosen field.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclebetti/chain.hpp"
#include "cyclebetti/field.hpp"
#include "cyclebetti/rank.hpp"
#include "cyclebetti/simplicial.hpp"

namespace cyclebetti {

// Reduced homology dimensions indexed from degree -1 upward. Degrees not
// stored are zero. For the complex {∅} the dimension in degree -1 is 1;
// for the void complex every dimension is 0.
class HomologyDims {
public:
    std::uint64_t dim(int degree) const {
        auto it = nz_.find(degree);
        return it == nz_.end() ? 0 : it->second;
    }

    void set(int degree, std::uint64_t value) {
        if (value == 0)
            nz_.erase(degree);
        else
            nz_[degree] = value;
    }

    const std::map<int, std::uint64_t>& nonzero() const { return nz_; }

    bool all_zero() const { return nz_.empty(); }

    friend bool operator==(const HomologyDims&, const HomologyDims&) = default;

    std::string to_string() const {
        if (nz_.empty()) return "0";
        std::string out;
        for (auto [deg, d] : nz_) {
            if (!out.empty()) out += ", ";
            out += "H~_" + std::to_string(deg) + " = " + std::to_string(d);
        }
        return out;
    }

private:
    std::map<int, std::uint64_t> nz_;
};

struct HomologyOptions {
    std::size_t face_budget = kDefaultFaceBudget;
    // Collapse free pairs before building matrices. Homotopy-preserving,
    // so the reported dimensions are unchanged; switchable for testing.
    bool use_collapse = true;
};

// dim H~_d = nullity(∂_d) - rank(∂_{d+1}), all ranks by exact elimination.
inline HomologyDims reduced_homology_dims(const SimplicialComplex& cx, const FieldSpec& field,
                                          const HomologyOptions& opts = {}) {
    HomologyDims out;
    if (cx.is_void()) return out;
    ChainComplex chain = ChainComplex::from_complex(cx, opts.face_budget);
    if (opts.use_collapse) chain = chain.collapsed();

    const int top = chain.top_dim();
    // rank[d+1] = rank of ∂_d
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 3, 0);
    for (int d = 0; d <= top; ++d)
        rank[static_cast<std::size_t>(d) + 1] = rank_over(chain.boundary_matrix(d), field);

    for (int d = -1; d <= top; ++d) {
        const std::size_t fd = chain.face_count(d);
        const std::size_t rd = rank[static_cast<std::size_t>(d) + 1];
        const std::size_t rd1 = rank[static_cast<std::size_t>(d) + 2];
        out.set(d, static_cast<std::uint64_t>(fd - rd - rd1));
    }
    return out;
}

}  // namespace cyclebetti
