#pragma once
// Sparse graded Betti tables of R/I and the invariants read off them.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

// Association (i, j) -> multiplicity >= 1 for the table of R/I, with the
// convention that beta_{0,0} = 1 is stored explicitly. Zero entries are
// never stored.
class BettiTable {
public:
    using Key = std::pair<int, int>;

    void add(int i, int j, std::uint64_t mult) {
        if (mult == 0) return;
        if (i > j) throw internal_error("Betti table entry with i > j: (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
        entries_[{i, j}] += mult;
    }

    std::uint64_t at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<Key, std::uint64_t>& entries() const { return entries_; }

    bool empty() const { return entries_.empty(); }

    // All nonzero entries in a fixed internal degree j.
    std::map<int, std::uint64_t> column(int j) const {
        std::map<int, std::uint64_t> out;
        for (const auto& [key, v] : entries_)
            if (key.second == j) out[key.first] = v;
        return out;
    }

    int max_i() const {
        int m = 0;
        for (const auto& [key, v] : entries_) m = std::max(m, key.first);
        return m;
    }

    int max_j() const {
        int m = 0;
        for (const auto& [key, v] : entries_) m = std::max(m, key.second);
        return m;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<Key, std::uint64_t> entries_;
};

// pd(R/I) = max{ i : beta_{i,j} != 0 }.
inline int pd_from_table(const BettiTable& t) {
    if (t.empty()) throw invalid_parameter_error("pd_from_table: empty table");
    return t.max_i();
}

// reg(R/I) = max{ j - i : beta_{i,j} != 0 }.
inline int reg_from_table(const BettiTable& t) {
    if (t.empty()) throw invalid_parameter_error("reg_from_table: empty table");
    int m = 0;
    for (const auto& [key, v] : t.entries()) m = std::max(m, key.second - key.first);
    return m;
}

}  // namespace cyclebetti
