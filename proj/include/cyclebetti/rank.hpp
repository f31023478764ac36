#pragma once
// Exact matrix rank over GF(p) and over the rationals. No floating point
// anywhere; the rational path uses fraction-free elimination on GMP
// integers so every intermediate value is an exact minor.

#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclebetti/errors.hpp"
#include "cyclebetti/field.hpp"

namespace cyclebetti {

// Column-major sparse matrix with entries in {-1, 0, +1} (boundary maps).
struct SparseMatrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> col_entries;

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : col_entries) n += c.size();
        return n;
    }
};

namespace detail {

inline void check_dense_size(std::uint64_t rows, std::uint64_t cols, std::uint64_t bytes_per) {
    // 1 GiB cap on any dense elimination workspace
    if (rows * cols * bytes_per > (1ULL << 30))
        throw resource_limit_error("rank: dense workspace " + std::to_string(rows) + "x" +
                                   std::to_string(cols) + " exceeds the 1 GiB limit");
}

}  // namespace detail

// Rank over GF(2) by bit-packed Gaussian elimination.
inline std::size_t rank_gf2(const SparseMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    detail::check_dense_size(m.rows, m.cols, 1);
    const std::size_t words = (m.cols + 63) / 64;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(m.rows) * words, 0);
    for (std::uint32_t c = 0; c < m.cols; ++c)
        for (auto [r, s] : m.col_entries[c]) a[r * words + (c >> 6)] ^= 1ULL << (c & 63);

    std::size_t rank = 0;
    for (std::uint32_t c = 0; c < m.cols && rank < m.rows; ++c) {
        const std::size_t wc = c >> 6;
        const std::uint64_t bc = 1ULL << (c & 63);
        std::uint32_t piv = m.rows;
        for (std::uint32_t r = static_cast<std::uint32_t>(rank); r < m.rows; ++r)
            if (a[r * words + wc] & bc) {
                piv = r;
                break;
            }
        if (piv == m.rows) continue;
        for (std::size_t t = 0; t < words; ++t)
            std::swap(a[rank * words + t], a[piv * words + t]);
        for (std::uint32_t r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            if (a[r * words + wc] & bc)
                for (std::size_t t = wc; t < words; ++t) a[r * words + t] ^= a[rank * words + t];
        }
        ++rank;
    }
    return rank;
}

// Rank over GF(p), dense row elimination with 64-bit modular arithmetic.
inline std::size_t rank_gfp(const SparseMatrix& m, std::uint32_t p) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (p == 2) return rank_gf2(m);
    detail::check_dense_size(m.rows, m.cols, 4);
    const std::uint64_t P = p;
    std::vector<std::uint32_t> a(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (std::uint32_t c = 0; c < m.cols; ++c)
        for (auto [r, s] : m.col_entries[c])
            a[static_cast<std::size_t>(r) * m.cols + c] = (s > 0) ? 1u : static_cast<std::uint32_t>(P - 1);

    auto inv_mod = [P](std::uint64_t x) {
        // extended Euclid; P is prime and x != 0 mod P
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(P), nr = static_cast<std::int64_t>(x % P);
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(P);
        return static_cast<std::uint64_t>(t);
    };

    std::size_t rank = 0;
    for (std::uint32_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::uint32_t piv = m.rows;
        for (std::uint32_t r = static_cast<std::uint32_t>(rank); r < m.rows; ++r)
            if (a[static_cast<std::size_t>(r) * m.cols + c] != 0) {
                piv = r;
                break;
            }
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::uint32_t t = c; t < m.cols; ++t)
                std::swap(a[static_cast<std::size_t>(rank) * m.cols + t],
                          a[static_cast<std::size_t>(piv) * m.cols + t]);
        std::uint32_t* prow = &a[static_cast<std::size_t>(rank) * m.cols];
        const std::uint64_t pinv = inv_mod(prow[c]);
        for (std::uint32_t r = static_cast<std::uint32_t>(rank) + 1; r < m.rows; ++r) {
            std::uint32_t* row = &a[static_cast<std::size_t>(r) * m.cols];
            if (row[c] == 0) continue;
            const std::uint64_t f = (P - (row[c] * pinv) % P) % P;
            row[c] = 0;
            for (std::uint32_t t = c + 1; t < m.cols; ++t)
                row[t] = static_cast<std::uint32_t>((row[t] + f * prow[t]) % P);
        }
        ++rank;
    }
    return rank;
}

// Rank over the rationals by fraction-free (Bareiss) elimination on exact
// integers. Pivots prefer the smallest absolute value to limit growth.
inline std::size_t rank_rational(const SparseMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    detail::check_dense_size(m.rows, m.cols, 16);
    std::vector<mpz_class> a(static_cast<std::size_t>(m.rows) * m.cols);
    for (std::uint32_t c = 0; c < m.cols; ++c)
        for (auto [r, s] : m.col_entries[c])
            a[static_cast<std::size_t>(r) * m.cols + c] = static_cast<int>(s);

    auto at = [&](std::uint32_t r, std::uint32_t c) -> mpz_class& {
        return a[static_cast<std::size_t>(r) * m.cols + c];
    };

    std::size_t rank = 0;
    mpz_class prev_piv = 1;
    std::vector<std::uint32_t> colperm(m.cols);
    for (std::uint32_t c = 0; c < m.cols; ++c) colperm[c] = c;

    for (std::uint32_t step = 0; step < m.cols && rank < m.rows; ++step) {
        // pick the remaining entry of smallest nonzero |value|
        std::uint32_t pr = m.rows, pc = m.cols;
        bool have = false;
        mpz_class best;
        for (std::uint32_t cc = step; cc < m.cols && !(have && best == 1); ++cc) {
            for (std::uint32_t r = static_cast<std::uint32_t>(rank); r < m.rows; ++r) {
                const mpz_class& v = at(r, colperm[cc]);
                if (v == 0) continue;
                mpz_class av = abs(v);
                if (!have || av < best) {
                    have = true;
                    best = av;
                    pr = r;
                    pc = cc;
                    if (best == 1) break;
                }
            }
        }
        if (!have) break;
        std::swap(colperm[step], colperm[pc]);
        if (pr != rank)
            for (std::uint32_t cc = step; cc < m.cols; ++cc)
                std::swap(at(static_cast<std::uint32_t>(rank), colperm[cc]), at(pr, colperm[cc]));

        const std::uint32_t pcol = colperm[step];
        mpz_class piv = at(static_cast<std::uint32_t>(rank), pcol);
        for (std::uint32_t r = static_cast<std::uint32_t>(rank) + 1; r < m.rows; ++r) {
            mpz_class head = at(r, pcol);
            at(r, pcol) = 0;
            // every entry below the pivot row is rescaled, zero head included;
            // Sylvester's identity keeps each division exact
            for (std::uint32_t cc = step + 1; cc < m.cols; ++cc) {
                mpz_class& x = at(r, colperm[cc]);
                x = x * piv - head * at(static_cast<std::uint32_t>(rank), colperm[cc]);
                if (prev_piv != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev_piv.get_mpz_t());
            }
        }
        prev_piv = piv;
        ++rank;
    }
    return rank;
}

inline std::size_t rank_over(const SparseMatrix& m, const FieldSpec& field) {
    if (field.is_rationals()) return rank_rational(m);
    return rank_gfp(m, field.characteristic());
}

}  // namespace cyclebetti
