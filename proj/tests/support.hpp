#pragma once

// Test-only oracles and utilities. Nothing here calls the code paths it is
// used to check.

#include "msym/bigint.hpp"
#include "msym/bitmatrix.hpp"
#include "msym/complex.hpp"
#include "msym/models.hpp"

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace msym::testing {

/// Pascal's triangle row n.
inline std::vector<BigInt> pascal_row(unsigned n) {
    std::vector<BigInt> row{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<BigInt> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k] += row[k];
            next[k + 1] += row[k];
        }
        row = std::move(next);
    }
    return row;
}

/// Coefficient of t^n in (1+xt)^{2g} * sum_a t^a * sum_b x^{2b} t^b by
/// enumerating every (k, a, b) with k + a + b = n.
inline std::vector<BigInt> poincare_bruteforce(unsigned g, unsigned n) {
    const auto c = pascal_row(2 * g);
    std::vector<BigInt> coeffs(2 * n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
        if (k >= c.size()) break;
        for (unsigned b = 0; k + b <= n; ++b) coeffs[k + 2 * b] += c[k];  // a = n - k - b
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

/// Coefficient of t^n in (1-t)^{2g} / (1-t)^2 by truncated convolution.
inline BigInt euler_char_series(unsigned g, unsigned n) {
    std::vector<BigInt> s(n + 1, 0);
    s[0] = 1;
    for (unsigned i = 0; i < 2 * g; ++i)  // times (1 - t)
        for (unsigned k = n; k >= 1; --k) s[k] -= s[k - 1];
    for (int r = 0; r < 2; ++r)  // times 1/(1 - t): prefix sums
        for (unsigned k = 1; k <= n; ++k) s[k] += s[k - 1];
    return s[n];
}

/// Rank over GF(2) with one bool per entry, reducing column by column.
inline std::size_t naive_rank(std::vector<std::vector<bool>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = rank;
        while (p < rows && !m[p][c]) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && m[r][c])
                for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] != m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline BitMatrixF2 random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
    BitMatrixF2 m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

/// Splits every 1-cell at a new midpoint vertex. Higher cells that had the
/// edge as a face now have both halves. A loop (empty face set) is split into
/// two arcs between the midpoint and the first vertex of the complex. Labels
/// are dropped.
inline ChainComplexF2 subdivide_edges(const ChainComplexF2& c) {
    ComplexBuilder b;
    for (const auto& v : c.cells(0)) b.add_cell(0, v);
    for (const auto& e : c.cells(1)) {
        const auto mid = e + "#m";
        b.add_cell(0, mid);
        auto ends = c.faces(e);
        if (ends.empty()) ends = {c.cells(0).front(), c.cells(0).front()};
        b.add_cell(1, e + "#0", reduce_mod2({ends[0], mid}));
        b.add_cell(1, e + "#1", reduce_mod2({mid, ends[1]}));
    }
    for (const auto& f : c.cells(2)) {
        std::vector<std::string> faces;
        for (const auto& e : c.faces(f)) {
            faces.push_back(e + "#0");
            faces.push_back(e + "#1");
        }
        b.add_cell(2, f, faces);
    }
    for (int k = 3; k <= c.dimension(); ++k)
        for (const auto& id : c.cells(k)) b.add_cell(k, id, c.faces(id));
    return b.build();
}

/// d_{k-1} d_k = 0 recomputed from the boundary matrices.
inline bool boundary_squares_to_zero(const ChainComplexF2& c) {
    for (int k = 2; k <= c.dimension(); ++k) {
        const auto dk = c.boundary_matrix(k);
        const auto dk1 = c.boundary_matrix(k - 1);
        for (std::size_t r = 0; r < dk.rows(); ++r) {
            std::vector<int> acc(dk1.cols(), 0);
            for (std::size_t f = 0; f < dk.cols(); ++f)
                if (dk.get(r, f))
                    for (std::size_t ff = 0; ff < dk1.cols(); ++ff) acc[ff] ^= dk1.get(f, ff) ? 1 : 0;
            for (int a : acc)
                if (a) return false;
        }
    }
    return true;
}

struct NamedModel {
    std::string name;
    std::function<ChainComplexF2()> make;
};

/// Curated closed and bounded models with known mod-2 Betti numbers.
inline std::vector<NamedModel> curated_models() {
    return {
        {"point", [] { return point(); }},
        {"circle", [] { return circle(); }},
        {"disc", [] { return disc(); }},
        {"mobius", [] { return build_sym2_circle(); }},
        {"torus", [] { return torus(); }},
        {"klein", [] { return klein_bottle(); }},
        {"rp2", [] { return real_projective_plane(); }},
        {"sphere", [] { return sphere(); }},
        {"solid_torus", [] { return solid_torus(); }},
        {"half2", [] { return build_half_surface(Genus{2}).complex; }},
        {"Y1", [] { return build_Y(Genus{1}); }},
        {"B1", [] { return build_B(Genus{1}); }},
    };
}

}  // namespace msym::testing
