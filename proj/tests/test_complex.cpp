#include "msym/complex.hpp"
#include "msym/models.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace msym;

namespace {

ChainComplexF2 annulus() { return build_half_surface(Genus{1}).complex; }

}  // namespace

TEST_CASE("betti of basic models", "[homology]") {
    CHECK(betti(circle()) == BettiVector{1, 1});
    CHECK(betti(torus()) == BettiVector{1, 2, 1});
    // Mod 2 the Klein bottle looks like the torus.
    CHECK(betti(klein_bottle()) == BettiVector{1, 2, 1});
    CHECK(betti(point()) == BettiVector{1});
    CHECK(betti(ChainComplexF2{}).empty());
}

TEST_CASE("reduce_mod2 keeps odd-count faces in first-seen order", "[homology]") {
    CHECK(reduce_mod2({"a", "b", "a", "c", "c", "c"}) == std::vector<std::string>{"b", "c"});
    CHECK(reduce_mod2({"x", "x"}).empty());
}

TEST_CASE("builder rejects invalid complexes", "[homology][errors]") {
    CHECK_THROWS_AS(ComplexBuilder{}.add_cell(0, "v").add_cell(0, "v").build(), InvalidComplex);
    CHECK_THROWS_AS(ComplexBuilder{}.add_cell(1, "e", {"nowhere"}).build(), InvalidComplex);
    CHECK_THROWS_AS(ComplexBuilder{}.add_cell(0, "v").add_cell(2, "f", {"v"}).build(), InvalidComplex);
    CHECK_THROWS_AS(ComplexBuilder{}.add_cell(0, "v").add_cell(1, "e", {"v", "v"}).build(), InvalidComplex);
    CHECK_THROWS_AS(ComplexBuilder{}.add_cell(0, "v").add_cell(0, "w", {"v"}).build(), InvalidComplex);
    CHECK_THROWS_AS(ComplexBuilder{}.add_cell(-1, "x").build(), InvalidComplex);

    // A 2-cell on a single non-loop edge: its boundary has boundary {v, w}.
    auto not_a_cycle = ComplexBuilder{}.add_cell(0, "v").add_cell(0, "w").add_cell(1, "e", {"v", "w"}).add_cell(2, "f", {"e"});
    CHECK_THROWS_WITH(not_a_cycle.build(), Catch::Matchers::ContainsSubstring("boundary of boundary of cell 'f'"));

    auto open_label = ComplexBuilder{}.add_cell(0, "v").add_cell(0, "w").add_cell(1, "e", {"v", "w"}).add_label("L", {"e"});
    CHECK_THROWS_WITH(open_label.build(), Catch::Matchers::ContainsSubstring("not closed"));
    CHECK_THROWS_AS(ComplexBuilder{}.add_cell(0, "v").add_label("L", {"u"}).build(), InvalidComplex);
    CHECK_THROWS_AS(ComplexBuilder{}.add_label("L", {}).add_label("L", {}), InvalidComplex);
}

TEST_CASE("euler characteristic", "[homology]") {
    CHECK(euler_char(torus()) == 0);
    CHECK(euler_char(build_half_surface(Genus{2}).complex) == -1);
    CHECK(euler_char(build_sym3_circle()) == 0);
    for (const auto& m : msym::testing::curated_models()) {
        INFO(m.name);
        const auto c = m.make();
        CHECK(euler_char(c) == euler_char(betti(c)));
    }
}

TEST_CASE("disjoint union adds Betti vectors", "[homology]") {
    CHECK(betti(disjoint_union(circle(), circle())) == BettiVector{2, 2});
    CHECK(betti(disjoint_union(torus(), point())) == BettiVector{2, 2, 1});

    const auto y1 = build_Y(Genus{1});
    const auto expected = betti_add(betti(y1), betti(torus()));
    REQUIRE(expected == BettiVector{2, 4, 2});
    CHECK(betti(disjoint_union(y1, torus())) == expected);

    const auto u = disjoint_union(disc(), disc());
    CHECK(u.has_label("a.boundary"));
    CHECK(u.has_label("b.boundary"));
    CHECK_THROWS_AS(disjoint_union(circle(), circle(), "x", "x"), InvalidComplex);
}

TEST_CASE("product follows Kunneth", "[homology]") {
    CHECK(betti(product(circle(), circle())) == BettiVector{1, 2, 1});

    const auto cm = product(circle(), build_sym2_circle());
    REQUIRE(betti_convolve({1, 1}, {1, 1, 0}) == BettiVector{1, 2, 1, 0});
    CHECK(betti(cm) == BettiVector{1, 2, 1, 0});

    CHECK(betti(product(product(circle(), circle()), circle())) == BettiVector{1, 3, 3, 1});
    CHECK(betti_total(betti(three_torus())) == 8);
}

TEST_CASE("product labels", "[homology]") {
    const auto p = product(circle(), build_half_surface(Genus{2}).complex);
    for (unsigned j = 1; j <= 3; ++j) {
        const auto& lab = p.label("*C" + std::to_string(j));
        CHECK(lab.size() == 4);  // vertex*vertex, two edges, one square
    }
    const auto q = product(disc(), disc());
    CHECK(q.has_label("boundary*"));
    CHECK(q.has_label("*boundary"));
    CHECK(q.has_label("boundary*boundary"));
    CHECK(betti(q) == BettiVector{1, 0, 0, 0, 0});
}

TEST_CASE("Kunneth on random pairs of curated models", "[homology][property]") {
    const auto models = msym::testing::curated_models();
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& a = models[rng() % models.size()];
        const auto& b = models[rng() % models.size()];
        INFO(a.name << " x " << b.name);
        const auto ca = a.make();
        const auto cb = b.make();
        const auto p = product(ca, cb);
        CHECK(msym::testing::boundary_squares_to_zero(p));
        CHECK(betti(p) == betti_convolve(betti(ca), betti(cb)));
    }
}

TEST_CASE("glue examples", "[homology]") {
    CHECK(betti(sphere()) == BettiVector{1, 0, 1});
    CHECK(betti(klein_bottle()) == BettiVector{1, 2, 1});

    // Annulus with a Mobius band on each boundary circle.
    const auto band = build_sym2_circle();
    auto y = glue(annulus(), "C1", band, "diagonal", {{"p", "c1"}, {"d", "b1"}}, "m1/");
    y = glue(y, "C2", band, "diagonal", {{"p", "c2"}, {"d", "b2"}}, "m2/");
    CHECK(betti(y) == BettiVector{1, 2, 1});
    CHECK(y.labels().empty());
}

TEST_CASE("glue Euler characteristic is additive minus the interface", "[homology][property]") {
    const auto a = annulus();
    const auto band = build_sym2_circle();
    const auto glued = glue(a, "C1", band, "diagonal", {{"p", "c1"}, {"d", "b1"}}, "m/");
    const long interface_chi = 1 - 1;  // one vertex, one edge
    CHECK(euler_char(glued) == euler_char(a) + euler_char(band) - interface_chi);

    const auto solid = build_sym3_circle();
    const auto b = build_B_without_sym3(Genus{2});
    const auto closed = build_B(Genus{2});
    CHECK(euler_char(closed) == euler_char(b) + euler_char(solid) - 0);
}

TEST_CASE("glue rejects bad matches", "[homology][errors]") {
    const auto a = annulus();
    const auto band = build_sym2_circle();
    // Missing an entry.
    CHECK_THROWS_AS(glue(a, "C1", band, "diagonal", {{"p", "c1"}}), InterfaceMismatch);
    // Dimension swapped.
    CHECK_THROWS_AS(glue(a, "C1", band, "diagonal", {{"p", "b1"}, {"d", "c1"}}), InterfaceMismatch);
    // Target outside the label.
    CHECK_THROWS_AS(glue(a, "C1", band, "diagonal", {{"p", "c2"}, {"d", "b2"}}), InterfaceMismatch);
    // Source outside the label.
    CHECK_THROWS_AS(glue(a, "C1", band, "diagonal", {{"q", "c1"}, {"d", "b1"}}), InterfaceMismatch);
    // Unknown label.
    CHECK_THROWS_AS(glue(a, "C9", band, "diagonal", {{"p", "c1"}, {"d", "b1"}}), InvalidComplex);

    // The longitude is not part of the meridian label.
    const auto t = build_sym3_circle();
    CHECK_THROWS_AS(glue(t, "fiber_boundary", disc(), "boundary", {{"v", "w"}, {"e", "l"}}), InterfaceMismatch);

    // Two edges forced onto one.
    const auto pants = build_half_surface(Genus{2}).complex;
    const auto two_circles = ComplexBuilder{}
                                 .add_cell(0, "x")
                                 .add_cell(1, "y")
                                 .add_cell(1, "z")
                                 .add_label("L", {"x", "y", "z"})
                                 .build();
    CHECK_THROWS_AS(glue(pants, "C1", two_circles, "L", {{"x", "c1"}, {"y", "b1"}, {"z", "b1"}}), InterfaceMismatch);
}

TEST_CASE("glue never resolves id collisions silently", "[homology][errors]") {
    // Two copies of the band share every non-interface id unless prefixed.
    const auto band = build_sym2_circle();
    CHECK_THROWS_AS(glue(band, "diagonal", band, "diagonal", {{"p", "p"}, {"d", "d"}}), InvalidComplex);
    CHECK_NOTHROW(glue(band, "diagonal", band, "diagonal", {{"p", "p"}, {"d", "d"}}, "other/"));
}

TEST_CASE("glue keeps unrelated labels and renames the other side's", "[homology]") {
    const auto b = build_B(Genus{2});
    CHECK(b.has_label("S/fiber_boundary"));
    CHECK(b.has_label("S/section"));
    CHECK_FALSE(b.has_label("*C1"));
    CHECK_FALSE(b.has_label("*C2"));
    CHECK(b.label("S/section") == std::vector<std::string>{"v*c1", "e*c1"});
}

TEST_CASE("homology classes of cycles", "[homology]") {
    const auto band = build_sym2_circle();
    CHECK(band.homology_class_is_zero(1, {"d"}));
    CHECK_FALSE(band.homology_class_is_zero(1, {"c"}));
    CHECK_THROWS_AS(band.homology_class_is_zero(1, {"r"}), InvalidComplex);
    CHECK_THROWS_AS(band.homology_class_is_zero(1, {"p"}), InvalidComplex);
    CHECK(band.homology_class_is_zero(1, {}));
}

TEST_CASE("betti is invariant under renaming and edge subdivision", "[homology][property]") {
    for (const auto& m : msym::testing::curated_models()) {
        INFO(m.name);
        const auto c = m.make();
        const auto b = betti(c);
        CHECK(betti(renamed(c, "zz_")) == b);
        const auto once = msym::testing::subdivide_edges(c);
        CHECK(betti(once) == b);
        CHECK(betti(msym::testing::subdivide_edges(once)) == b);
        CHECK(euler_char(once) == euler_char(c));
    }
}

TEST_CASE("closed surfaces satisfy b0 = b2 = 1 and b1 = 2 - chi", "[homology][property]") {
    std::vector<ChainComplexF2> surfaces{torus(), klein_bottle(), real_projective_plane(), sphere()};
    for (unsigned g = 0; g <= 6; ++g) surfaces.push_back(build_Y(Genus{g}));
    for (const auto& s : surfaces) {
        const auto b = betti(s);
        REQUIRE(b.size() == 3);
        CHECK(b[0] == 1);
        CHECK(b[2] == 1);
        CHECK(static_cast<long>(b[1]) == 2 - euler_char(s));
    }
}

TEST_CASE("every constructed complex has d o d = 0", "[homology][property]") {
    for (const auto& m : msym::testing::curated_models()) {
        INFO(m.name);
        CHECK(msym::testing::boundary_squares_to_zero(m.make()));
    }
    for (unsigned g = 0; g <= 4; ++g) {
        CHECK(msym::testing::boundary_squares_to_zero(build_Y(Genus{g})));
        CHECK(msym::testing::boundary_squares_to_zero(build_B(Genus{g})));
        CHECK(msym::testing::boundary_squares_to_zero(build_B_without_sym3(Genus{g})));
    }
}
