#include "msym/cw_json.hpp"
#include "msym/models.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace msym;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("to_json / parse round trip", "[cw_json]") {
    auto models = msym::testing::curated_models();
    models.push_back({"B3", [] { return build_B(Genus{3}); }});
    for (const auto& m : models) {
        INFO(m.name);
        const auto c = m.make();
        const auto text = to_json(c).dump();
        const auto back = parse_complex(text);
        CHECK(betti(back) == betti(c));
        CHECK(back.total_cells() == c.total_cells());
        CHECK(back.labels() == c.labels());
        CHECK(to_json(back) == to_json(c));
    }
}

TEST_CASE("hand-written circle and omitted boundaries", "[cw_json]") {
    const auto c = parse_complex(R"({"cells": {"0": ["v"], "1": ["e"]}})");
    CHECK(betti(c) == BettiVector{1, 1});

    const auto rp2 = parse_complex(R"({
        "cells": {"0": ["v"], "1": ["a"], "2": ["F"]},
        "boundary": {"a": [], "F": []},
        "labels": {}
    })");
    CHECK(betti(rp2) == BettiVector{1, 1, 1});
}

TEST_CASE("parse errors name the offending cell", "[cw_json][errors]") {
    CHECK_THROWS_WITH(parse_complex(R"({"cells": {"0": ["v"], "1": ["e"]}, "boundary": {"e": ["w"]}})"),
                      ContainsSubstring("'e'"));
    CHECK_THROWS_WITH(parse_complex(R"({"cells": {"0": ["v","w"], "1": ["e"]}, "boundary": {"e": ["v","v"]}})"),
                      ContainsSubstring("'e' repeats face 'v'"));
    CHECK_THROWS_WITH(parse_complex(R"({"cells": {"0": ["v"]}, "boundary": {"zz": []}})"), ContainsSubstring("'zz'"));
    CHECK_THROWS_WITH(parse_complex(R"({"cells": {"0": ["v"], "0": ["w"], "2": ["F"]}, "boundary": {"F": ["v"]}})"),
                      ContainsSubstring("'F'"));
    // d o d != 0 is a parse error too.
    CHECK_THROWS_WITH(
        parse_complex(R"({"cells": {"0": ["v","w"], "1": ["e"], "2": ["F"]}, "boundary": {"e": ["v","w"], "F": ["e"]}})"),
        ContainsSubstring("'F'"));
}

TEST_CASE("structural parse errors", "[cw_json][errors]") {
    CHECK_THROWS_AS(parse_complex("{not json"), ParseError);
    CHECK_THROWS_AS(parse_complex("[]"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"boundary": {}})"), ParseError);
    CHECK_THROWS_WITH(parse_complex(R"({"cells": {"x": ["v"]}})"), ContainsSubstring("\"x\""));
    CHECK_THROWS_WITH(parse_complex(R"({"cells": {"-1": ["v"]}})"), ContainsSubstring("\"-1\""));
    CHECK_THROWS_AS(parse_complex(R"({"cells": {"0": "v"}})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"cells": {"0": [1]}})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"cells": {"0": ["v"]}, "labels": {"L": ["nope"]}})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"cells": {"0": ["v","v"]}})"), ParseError);
    CHECK_THROWS_AS(load_complex("/nonexistent/dir/file.json"), ParseError);
}
