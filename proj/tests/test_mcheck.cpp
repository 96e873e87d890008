#include "msym/mcheck.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace msym;

TEST_CASE("check examples", "[mcheck]") {
    const auto a = check(Genus{1}, 2);
    CHECK(a.complex_sum == 8);
    CHECK(a.real_sum == BigInt(8));
    CHECK(a.verdict == Verdict::MVariety);
    CHECK(a.method == Method::CwModels);
    REQUIRE(a.per_piece.size() == 2);
    CHECK(a.per_piece[0].name == "Y");
    CHECK(a.per_piece[0].betti == BettiVector{1, 2, 1});

    const auto b = check(Genus{2}, 3);
    CHECK(b.complex_sum == 32);
    CHECK(b.real_sum == BigInt(32));
    CHECK(b.verdict == Verdict::MVariety);

    const auto c = check(Genus{3}, 5);
    CHECK(c.complex_sum == betti_sum_sym(Genus{3}, 5).value);
    CHECK(c.complex_sum == 192);
    CHECK(c.real_sum == BigInt(192));
    CHECK(c.method == Method::BundleFormula);
    CHECK(c.per_piece.empty());
}

TEST_CASE("range edges", "[mcheck]") {
    // n = 4 >= 2g-1 at g = 2, so the bundle count applies.
    const auto r = check(Genus{2}, 4);
    CHECK(r.verdict == Verdict::MVariety);
    CHECK(r.method == Method::BundleFormula);

    const auto open = check(Genus{3}, 4);
    CHECK(open.verdict == Verdict::UnsupportedRange);
    CHECK(open.method == Method::None);
    CHECK_FALSE(open.real_sum.has_value());
    CHECK(open.complex_sum == betti_sum_sym(Genus{3}, 4).value);

    // Both routes apply for small g and must agree.
    const auto both = check(Genus{1}, 3);
    CHECK(both.method == Method::CwModels);
    CHECK(*both.real_sum == real_bundle_betti_sum(Genus{1}, 3));
    CHECK(check(Genus{0}, 0).verdict == Verdict::MVariety);
    CHECK(check(Genus{2}, 1).verdict == Verdict::UnsupportedRange);
}

TEST_CASE("Smith inequality is enforced", "[mcheck][errors]") {
    auto d = real_sym2_decomposition(Genus{1});
    d.pieces.push_back({"extra torus", torus(), 1});
    CHECK_THROWS_AS(check_decomposition(d), SmithViolation);

    auto smaller = real_sym2_decomposition(Genus{2});
    smaller.pieces.pop_back();
    const auto r = check_decomposition(smaller);
    CHECK(r.verdict == Verdict::StrictInequality);
    CHECK(*r.real_sum < r.complex_sum);

    CHECK(check_decomposition(real_sym3_decomposition(Genus{2})).verdict == Verdict::MVariety);

    auto zero = real_sym2_decomposition(Genus{1});
    zero.pieces[0].multiplicity = 0;
    CHECK_THROWS_AS(check_decomposition(zero), InvalidComplex);
}

TEST_CASE("verdict and method strings", "[mcheck]") {
    for (auto v : {Verdict::MVariety, Verdict::StrictInequality, Verdict::UnsupportedRange})
        CHECK(verdict_from_string(to_string(v)) == v);
    for (auto m : {Method::CwModels, Method::BundleFormula, Method::None}) CHECK(method_from_string(to_string(m)) == m);
    CHECK(to_string(Verdict::MVariety) == "M_VARIETY");
    CHECK(to_string(Method::CwModels) == "CW_MODELS");
    CHECK_THROWS_AS(verdict_from_string("maybe"), ParseError);
    CHECK_THROWS_AS(method_from_string(""), ParseError);
}

TEST_CASE("JSON and CSV", "[mcheck]") {
    CHECK(report_csv_header() == "g,n,complex_sum,real_sum,verdict,method");
    CHECK(to_csv_row(check(Genus{1}, 2)) == "1,2,8,8,M_VARIETY,CW_MODELS");
    CHECK(to_csv_row(check(Genus{3}, 4)) == "3,4,129,,UNSUPPORTED_RANGE,NONE");

    for (auto [g, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 3}, {3, 4}, {3, 5}, {40, 200}}) {
        const auto r = check(Genus{g}, n);
        const auto text = to_json(r).dump();
        CHECK(report_from_json(nlohmann::json::parse(text)) == r);
    }
    // Large values go out as strings.
    const auto big = check(Genus{40}, 200);
    CHECK(to_json(big).at("complex_sum").is_string());
    CHECK(big_from_json(nlohmann::json("123456789012345678901234567890")) == BigInt("123456789012345678901234567890"));
    CHECK_THROWS_AS(big_from_json(nlohmann::json("12x")), ParseError);
    CHECK_THROWS_AS(report_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("betti_sum_sym(3, 4) oracle", "[mcheck]") {
    // C(6,0)*5 + C(6,1)*4 + C(6,2)*3 + C(6,3)*2 + C(6,4)*1
    CHECK(betti_sum_sym(Genus{3}, 4) == 5 + 24 + 45 + 40 + 15);
}

TEST_CASE("sweep ordering and determinism", "[mcheck]") {
    const auto one = sweep(3, 6, 1);
    const auto many = sweep(3, 6, 8);
    REQUIRE(one.size() == 4 * 7);
    CHECK(one == many);
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].g.value == i / 7);
        CHECK(one[i].n == i % 7);
    }
    CHECK(all_supported_are_m_varieties(one));
    for (const auto& r : one) {
        const bool supported = has_cw_models(r.n) || in_bundle_range(r.g, r.n);
        CHECK((r.verdict == Verdict::UnsupportedRange) == !supported);
        if (r.real_sum) CHECK(*r.real_sum <= r.complex_sum);
    }

    auto rows = one;
    rows.front().verdict = Verdict::StrictInequality;
    CHECK_FALSE(all_supported_are_m_varieties(rows));
}

TEST_CASE("MSYM_THREADS", "[mcheck]") {
    ::setenv("MSYM_THREADS", "3", 1);
    CHECK(sweep_threads() == 3);
    ::setenv("MSYM_THREADS", "zero", 1);
    CHECK(sweep_threads() >= 1);
    ::unsetenv("MSYM_THREADS");
    CHECK(sweep_threads() >= 1);
}
