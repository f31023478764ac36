#pragma once
// Fixed-width bitset over vertex labels 1..128.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

// A set of vertices. Labels are 1-based; bit (label-1) marks membership.
struct VertexSet {
    static constexpr int max_vertices = 128;

    std::array<std::uint64_t, 2> w{0, 0};

    constexpr VertexSet() = default;

    static VertexSet of(std::initializer_list<int> labels) {
        VertexSet s;
        for (int v : labels) s.add(v);
        return s;
    }

    static VertexSet full(int n) {
        check_label_range(n);
        VertexSet s;
        if (n >= 64) {
            s.w[0] = ~0ULL;
            s.w[1] = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
        } else if (n > 0) {
            s.w[0] = (1ULL << n) - 1;
        }
        return s;
    }

    void add(int label) {
        check_label_range(label);
        w[(label - 1) >> 6] |= 1ULL << ((label - 1) & 63);
    }

    void remove(int label) {
        check_label_range(label);
        w[(label - 1) >> 6] &= ~(1ULL << ((label - 1) & 63));
    }

    bool contains(int label) const {
        if (label < 1 || label > max_vertices) return false;
        return (w[(label - 1) >> 6] >> ((label - 1) & 63)) & 1ULL;
    }

    int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]);
    }

    bool empty() const { return w[0] == 0 && w[1] == 0; }

    bool subset_of(const VertexSet& o) const {
        return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
    }

    bool intersects(const VertexSet& o) const {
        return (w[0] & o.w[0]) != 0 || (w[1] & o.w[1]) != 0;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) {
        a.w[0] &= b.w[0];
        a.w[1] &= b.w[1];
        return a;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) {
        a.w[0] |= b.w[0];
        a.w[1] |= b.w[1];
        return a;
    }

    // Set difference a \ b.
    friend VertexSet operator-(VertexSet a, const VertexSet& b) {
        a.w[0] &= ~b.w[0];
        a.w[1] &= ~b.w[1];
        return a;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    // Smallest label in the set, or 0 when empty.
    int first_label() const {
        if (w[0]) return std::countr_zero(w[0]) + 1;
        if (w[1]) return std::countr_zero(w[1]) + 65;
        return 0;
    }

    // Smallest label strictly greater than `label`, or 0 when none.
    int next_label(int label) const {
        for (int b = label; b < max_vertices; ++b) {
            int word = b >> 6, bit = b & 63;
            std::uint64_t rest = w[word] >> bit;
            if (rest) return b + std::countr_zero(rest) + 1;
            b = (word << 6) + 63;  // skip to next word
        }
        return 0;
    }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first_label(); v != 0; v = next_label(v)) out.push_back(v);
        return out;
    }

    // Lexicographic order on the ascending label sequences, restricted to
    // sets of equal cardinality: the set owning the smallest differing
    // label comes first.
    static bool lex_less_same_card(const VertexSet& a, const VertexSet& b) {
        std::uint64_t x0 = a.w[0] ^ b.w[0];
        if (x0) return (a.w[0] >> std::countr_zero(x0)) & 1ULL;
        std::uint64_t x1 = a.w[1] ^ b.w[1];
        if (x1) return (a.w[1] >> std::countr_zero(x1)) & 1ULL;
        return false;
    }

    // Total order: by cardinality, then lexicographic.
    static bool card_lex_less(const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return lex_less_same_card(a, b);
    }

    std::string to_string() const {
        if (empty()) return "{}";
        std::string out = "{";
        bool first = true;
        for (int v : labels()) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

private:
    static void check_label_range(int label) {
        if (label < 1 || label > max_vertices)
            throw invalid_parameter_error("vertex label " + std::to_string(label) +
                                          " outside supported range 1.." +
                                          std::to_string(max_vertices));
    }
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::uint64_t h = s.w[0] * 0x9e3779b97f4a7c15ULL;
        h ^= s.w[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace cyclebetti
