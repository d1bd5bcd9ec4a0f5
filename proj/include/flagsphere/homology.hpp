#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "flagsphere/complex.hpp"
#include "flagsphere/vectors.hpp"

namespace flagsphere {

enum class FieldTag { GF2, Rational };

// Boundary map C_k -> C_{k-1}. Rows are (k-1)-faces, columns k-faces,
// both sorted by bitmask; entries are -1/0/+1, with the sign of a subface
// given by the position of the removed vertex in sorted order. GF(2) use
// reads the same entries mod 2.
struct BoundaryMatrix {
    int k = 0;
    std::vector<Face> rows;
    std::vector<Face> cols;
    std::vector<std::vector<int>> m;  // m[r][c]

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return cols.size(); }
};

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    BoundaryMatrix bm;
    bm.k = k;
    if (k < 0 || k > c.dim() + 1) return bm;  // empty matrix out of range
    if (k <= c.dim()) bm.cols = faces_of_dim(c, k);
    if (k - 1 <= c.dim() && k >= 1) bm.rows = faces_of_dim(c, k - 1);
    std::map<Face, std::size_t> row_index;
    for (std::size_t r = 0; r < bm.rows.size(); ++r) row_index[bm.rows[r]] = r;
    bm.m.assign(bm.rows.size(), std::vector<int>(bm.cols.size(), 0));
    for (std::size_t cidx = 0; cidx < bm.cols.size(); ++cidx) {
        auto mem = bm.cols[cidx].members();  // ascending
        for (std::size_t p = 0; p < mem.size(); ++p) {
            Face sub = bm.cols[cidx].without(mem[p]);
            if (k == 0) continue;  // vertices map to 0 (unreduced chain complex)
            std::size_t r = row_index.at(sub);
            bm.m[r][cidx] = (p % 2 == 0) ? 1 : -1;
        }
    }
    return bm;
}

namespace detail {

inline std::size_t rank_gf2(const BoundaryMatrix& bm) {
    const std::size_t nr = bm.n_rows(), nc = bm.n_cols();
    if (nr == 0 || nc == 0) return 0;
    const std::size_t words = (nc + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(nr, std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (bm.m[r][c] & 1) rows[r][c / 64] ^= (std::uint64_t{1} << (c % 64));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t pivot = rank;
        while (pivot < nr && !((rows[pivot][c / 64] >> (c % 64)) & 1)) ++pivot;
        if (pivot == nr) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == rank) continue;
            if ((rows[r][c / 64] >> (c % 64)) & 1)
                for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return rank;
}

// Fraction-free Bareiss elimination over exact integers.
inline std::size_t rank_rational(const BoundaryMatrix& bm) {
    const std::size_t nr = bm.n_rows(), nc = bm.n_cols();
    if (nr == 0 || nc == 0) return 0;
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) a[r][c] = bm.m[r][c];
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t pivot = rank;
        while (pivot < nr && a[pivot][c] == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < nr; ++r) {
            for (std::size_t j = c + 1; j < nc; ++j)
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

inline std::size_t rank(const BoundaryMatrix& bm, FieldTag field) {
    return field == FieldTag::GF2 ? rank_gf2(bm) : rank_rational(bm);
}

}  // namespace detail

// beta_k = dim C_k - rank d_k - rank d_{k+1}; reduced subtracts 1 from beta_0.
inline std::vector<long long> betti_numbers(const SimplicialComplex& c, FieldTag field,
                                            bool reduced = false) {
    const int d = c.dim();
    if (d < 0) throw std::invalid_argument("betti_numbers requires a nonempty complex");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(d + 2), 0);
    for (int k = 1; k <= d; ++k)
        ranks[static_cast<std::size_t>(k)] = detail::rank(boundary_matrix(c, k), field);
    std::vector<long long> betti(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d; ++k) {
        long long dim_ck = static_cast<long long>(faces_of_dim(c, k).size());
        betti[static_cast<std::size_t>(k)] =
            dim_ck - static_cast<long long>(ranks[static_cast<std::size_t>(k)]) -
            static_cast<long long>(ranks[static_cast<std::size_t>(k + 1)]);
    }
    if (reduced) betti[0] -= 1;
    return betti;
}

inline long long euler_characteristic(const SimplicialComplex& c) {
    auto f = f_vector(c);
    long long chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 == 1) ? f[i] : -f[i];
    return chi;
}

// Lower bound check e >= 4n for a 3-complex; when it fails the first
// homology of a closed 3-manifold must vanish over every field.
struct LbtReport {
    long long n = 0;
    long long e = 0;
    bool holds = false;            // e >= 4n
    bool h1_must_vanish = false;   // contrapositive when e < 4n
};

inline LbtReport lbt_check(const SimplicialComplex& c) {
    if (c.dim() != 3) throw std::invalid_argument("lbt_check requires a 3-dimensional complex");
    LbtReport r;
    r.n = static_cast<long long>(faces_of_dim(c, 0).size());
    r.e = static_cast<long long>(faces_of_dim(c, 1).size());
    r.holds = r.e >= 4 * r.n;
    r.h1_must_vanish = !r.holds;
    return r;
}

}  // namespace flagsphere
