#pragma once

// CW models of the pieces of the real loci of Sym^2 and Sym^3 of an M-curve,
// and assemblers for the full decompositions.
//
// Conventions shared by the gluing code:
//   circle()            : vertex "v", loop "e"
//   half_surface(g)     : boundary circle C<j> = {vertex "c<j>", loop "b<j>"}
//   build_sym2_circle() : boundary "diagonal" = {vertex "p", loop "d"}
//   build_sym3_circle() : boundary torus "boundary" = {"w", "m", "l", "T"},
//                         meridian "fiber_boundary" = {"w", "m"},
//                         longitude "section" = {"w", "l"}

#include "msym/bigint.hpp"
#include "msym/complex.hpp"
#include "msym/genfun.hpp"

#include <string>
#include <vector>

namespace msym {

inline ChainComplexF2 point() { return ComplexBuilder{}.add_cell(0, "p").build(); }

/// One vertex, one loop.
inline ChainComplexF2 circle() { return ComplexBuilder{}.add_cell(0, "v").add_cell(1, "e").build(); }

/// Disc bounded by a one-vertex circle labeled "boundary".
inline ChainComplexF2 disc() {
    return ComplexBuilder{}
        .add_cell(0, "v")
        .add_cell(1, "e")
        .add_cell(2, "D", {"e"})
        .add_label("boundary", {"v", "e"})
        .build();
}

inline std::string boundary_circle_label(unsigned j) { return "C" + std::to_string(j); }

struct HalfSurface {
    Genus g;
    ChainComplexF2 complex;

    /// Label of the j-th boundary circle, 1 <= j <= g+1.
    std::string boundary_label(unsigned j) const { return boundary_circle_label(j); }
    unsigned boundary_count() const { return g.value + 1; }
};

/// Sphere minus g+1 discs. Vertices c1..c<g+1>, boundary loops b1..b<g+1>,
/// arcs a1..a<g> from c1 to c<j+1>, and one 2-cell attached along
/// b1 a1 b2 a1^-1 a2 b3 a2^-1 ... so every arc appears twice.
inline HalfSurface build_half_surface(Genus g) {
    ComplexBuilder b;
    const unsigned circles = g.value + 1;
    for (unsigned j = 1; j <= circles; ++j) b.add_cell(0, "c" + std::to_string(j));
    for (unsigned j = 1; j <= circles; ++j) b.add_cell(1, "b" + std::to_string(j));
    for (unsigned j = 1; j < circles; ++j) b.add_cell(1, "a" + std::to_string(j), {"c1", "c" + std::to_string(j + 1)});
    std::vector<std::string> word{"b1"};
    for (unsigned j = 1; j < circles; ++j) {
        const auto arc = "a" + std::to_string(j);
        word.insert(word.end(), {arc, "b" + std::to_string(j + 1), arc});
    }
    b.add_cell_word(2, "F", word);
    for (unsigned j = 1; j <= circles; ++j)
        b.add_label(boundary_circle_label(j), {"c" + std::to_string(j), "b" + std::to_string(j)});
    return {g, b.build()};
}

/// Sym^2 of a circle: a Mobius band, built as the mapping cylinder of the
/// double cover of the core circle. The boundary loop "d" (the diagonal) is
/// attached as d r c c r^-1, so it is twice the core class.
inline ChainComplexF2 build_sym2_circle() {
    return ComplexBuilder{}
        .add_cell(0, "p")
        .add_cell(0, "q")
        .add_cell(1, "d")
        .add_cell(1, "c")
        .add_cell(1, "r", {"p", "q"})
        .add_cell_word(2, "M", {"d", "r", "c", "c", "r"})
        .add_label("diagonal", {"p", "d"})
        .build();
}

/// Sym^3 of a circle: a solid torus. Boundary torus w, m, l, T (T attached
/// along m l m^-1 l^-1), meridian disc D on m, and one 3-cell whose boundary
/// is T + D + D.
inline ChainComplexF2 build_sym3_circle() {
    return ComplexBuilder{}
        .add_cell(0, "w")
        .add_cell(1, "m")
        .add_cell(1, "l")
        .add_cell_word(2, "T", {"m", "l", "m", "l"})
        .add_cell(2, "D", {"m"})
        .add_cell_word(3, "E", {"T", "D", "D"})
        .add_label("boundary", {"w", "m", "l", "T"})
        .add_label("fiber_boundary", {"w", "m"})
        .add_label("section", {"w", "l"})
        .build();
}

inline ChainComplexF2 torus() { return product(circle(), circle()); }

inline ChainComplexF2 three_torus() { return product(torus(), circle()); }

inline ChainComplexF2 solid_torus() { return build_sym3_circle(); }

inline ChainComplexF2 sphere() { return glue(disc(), "boundary", disc(), "boundary", {{"v", "v"}, {"e", "e"}}, "s/"); }

inline ChainComplexF2 klein_bottle() {
    return glue(build_sym2_circle(), "diagonal", build_sym2_circle(), "diagonal", {{"p", "p"}, {"d", "d"}}, "k/");
}

inline ChainComplexF2 real_projective_plane() {
    return glue(build_sym2_circle(), "diagonal", disc(), "boundary", {{"v", "p"}, {"e", "d"}}, "cap/");
}

namespace detail {

inline CellMatch mobius_onto_circle(unsigned j) {
    return {{"p", "c" + std::to_string(j)}, {"d", "b" + std::to_string(j)}};
}

inline const CellMatch& circle_identity() {
    static const CellMatch m{{"v", "v"}, {"e", "e"}};
    return m;
}

}  // namespace detail

/// Closed surface: the half surface with a Mobius band glued onto each boundary circle.
inline ChainComplexF2 build_Y(Genus g) {
    auto y = build_half_surface(g).complex;
    const auto band = build_sym2_circle();
    for (unsigned j = 1; j <= g.value + 1; ++j) {
        y = glue(y, boundary_circle_label(j), band, "diagonal", detail::mobius_onto_circle(j),
                 "M" + std::to_string(j) + "/");
    }
    return y;
}

/// S^1 x X_1 with S^1 x Mobius glued onto every boundary torus except the
/// `solid_index`-th one, which is left labeled "*C<solid_index>".
inline ChainComplexF2 build_B_without_sym3(Genus g, unsigned solid_index = 1) {
    if (solid_index < 1 || solid_index > g.value + 1)
        throw RangeError("build_B: boundary index " + std::to_string(solid_index) + " out of range");
    auto b = product(circle(), build_half_surface(g).complex);
    const auto band = product(circle(), build_sym2_circle());
    for (unsigned j = 1; j <= g.value + 1; ++j) {
        if (j == solid_index) continue;
        b = glue(b, "*" + boundary_circle_label(j), band, "*diagonal",
                 product_match(detail::circle_identity(), detail::mobius_onto_circle(j)),
                 "SM" + std::to_string(j) + "/");
    }
    return b;
}

/// Closed 3-manifold component of the real locus of Sym^3. The solid torus
/// goes on boundary torus `solid_index`: the curve along the X_1 boundary
/// (v*b_i, repeated point moving) meets the meridian, the curve along the
/// circle factor (e*c_i, single point moving) meets the longitude.
inline ChainComplexF2 build_B(Genus g, unsigned solid_index = 1) {
    const auto partial = build_B_without_sym3(g, solid_index);
    const auto i = std::to_string(solid_index);
    const CellMatch onto_torus{
        {"w", product_id("v", "c" + i)},
        {"m", product_id("v", "b" + i)},
        {"l", product_id("e", "c" + i)},
        {"T", product_id("e", "b" + i)},
    };
    return glue(partial, "*" + boundary_circle_label(solid_index), build_sym3_circle(), "boundary", onto_torus,
                "S/");
}

struct DecompositionPiece {
    std::string name;
    ChainComplexF2 complex;
    BigInt multiplicity;
};

struct RealLocusDecomposition {
    Genus g;
    unsigned n = 0;
    std::vector<DecompositionPiece> pieces;
};

/// Y plus C(g+1, 2) tori.
inline RealLocusDecomposition real_sym2_decomposition(Genus g) {
    RealLocusDecomposition d{g, 2, {}};
    d.pieces.push_back({"Y", build_Y(g), 1});
    if (auto tori = binomial(g.value + 1, 2); tori > 0) d.pieces.push_back({"torus", torus(), tori});
    return d;
}

/// C(g+1, 3) three-tori plus g+1 copies of B.
inline RealLocusDecomposition real_sym3_decomposition(Genus g) {
    RealLocusDecomposition d{g, 3, {}};
    if (auto t3 = binomial(g.value + 1, 3); t3 > 0) d.pieces.push_back({"3-torus", three_torus(), t3});
    d.pieces.push_back({"B", build_B(g), BigInt(g.value + 1)});
    return d;
}

inline RealLocusDecomposition real_decomposition(Genus g, unsigned n) {
    if (n == 2) return real_sym2_decomposition(g);
    if (n == 3) return real_sym3_decomposition(g);
    throw RangeError("real_decomposition: CW models exist only for n = 2, 3");
}

/// Total Betti sum, with every piece's Betti vector computed by matrix rank.
inline BigInt decomposition_betti_sum(const RealLocusDecomposition& d) {
    BigInt total = 0;
    for (const auto& p : d.pieces) {
        if (p.multiplicity < 1) throw InvalidComplex("piece '" + p.name + "' has multiplicity < 1");
        total += p.multiplicity * betti_total(betti(p.complex));
    }
    return total;
}

/// 2g(g+1) + 3 + g: four per torus plus 3 + g for Y.
inline BigInt sym2_piece_formula(Genus g) {
    const BigInt x = g.value;
    return 4 * binomial(g.value + 1, 2) + 3 + x;
}

/// 8 C(g+1, 3) + 2(g+1)(g+2).
inline BigInt sym3_piece_formula(Genus g) {
    const BigInt x = g.value;
    return 8 * binomial(g.value + 1, 3) + 2 * (x + 1) * (x + 2);
}

}  // namespace msym
