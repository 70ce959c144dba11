#include <random>

#include "birsphere/parse.hpp"
#include "birsphere/report.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace bs;

static SphereMap round_trip(const SphereMap& g) { return sphere_map_from_json(Json::parse(to_json(g).dump())); }

TEST_CASE("sphere map json round trip") {
    for (const char* s : {"tau", "upsilon", "antipodal", "tilde_eta", "rot:1/3", "rot:1/4", "rot:1/6", "gb:1/2", "gb:2/3",
                          "g1p:1/2", "g2p:3/4"})
        CHECK(round_trip(builtin(s)) == builtin(s));
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        SphereMap g{gen::g_element(rng, 1 + i % 3), BaseMobius::identity()};
        CHECK(round_trip(g) == g);
        SphereMap h = builtin("g2p:1/3") * g;
        CHECK(round_trip(h) == h);
    }
    BaseMobius irr = BaseMobius::interval(TowerReal::sqrt_of(Q(1, 2)));
    SphereMap g{ProjMat(), irr};
    CHECK(round_trip(g) == g);
    CHECK(to_json(g)["base"].contains("interval_t"));
    BaseMobius inv(TowerReal(1), TowerReal(Q(-1, 3)), TowerReal(Q(1, 3)), TowerReal(-1));
    CHECK(round_trip({ProjMat(), inv}) == SphereMap{ProjMat(), inv});
}

TEST_CASE("element readers") {
    CHECK(read_element("builtin:tau") == builtin("tau"));
    CHECK(read_element("tau") == builtin("tau"));
    CHECK(read_element("diag(z+2i, z-2i)").fiber == ProjMat::parse("diag(z+2i, z-2i)"));
    CHECK(read_element(R"({"builtin": "gb:1/2"})") == builtin("gb:1/2"));
    CHECK(read_element(R"({"fiber": [["1","0"],["0","-1"]], "base": "neg"})") == builtin("antipodal"));
    CHECK_THROWS_AS(read_element(R"({"fiber": [["1","0"]]})"), ParseError);
    CHECK_THROWS_AS(read_element(R"({"fiber": [["1","0"],["0","1"]], "base": "up"})"), ParseError);
    CHECK_THROWS_AS(read_element("{not json"), ParseError);
    SpherePoint p = parse_sphere_point("1,0,1,0");
    CHECK(on_sphere(p));
    CHECK_THROWS_AS(parse_sphere_point("1,0,1"), ParseError);
}

TEST_CASE("model json round trip") {
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        HyperellipticModel m = fixed_curve(gen::g_involution(rng, 1 + i % 2));
        CHECK(model_from_json(Json::parse(to_json(m).dump())) == m);
    }
}

TEST_CASE("classification is stable under rescaling the lift") {
    std::mt19937 rng(9);
    for (const char* s : {"tau", "upsilon", "g1p:1/2", "rot:1/3"}) {
        SphereMap g = builtin(s);
        Mat2 l = g.fiber.lift().scaled(gen::rpoly(rng, 2) + PolyC(7));
        SphereMap h{ProjMat(l), g.base};
        CHECK(classify_report(h)["family"] == classify_report(g)["family"]);
    }
}

TEST_CASE("classify routing") {
    CHECK(classify_report("tau")["family"] == "4");
    CHECK(classify_report("antipodal")["family"] == "5");
    CHECK(classify_report("g2p:1/2")["moduli"]["h2"]["class"] == "(+1, {1/4})");
    CHECK(classify_report("gb:1/2")["reality_only"] == true);
    CHECK(classify_report("dp4:alpha1")["family"] == "2");
    CHECK(classify_report("dp4:alpha2")["family"] == "2");
    CHECK(classify_report("dp4:g2")["family"] == "out-of-scope");
    CHECK(classify_report("dp2:geiser")["family"] == "1");
    CHECK_THROWS_AS(classify_report("[[1,1],[0,1]]"), DomainError);
    CHECK_THROWS_AS(classify_report("diag(1, -1) * x"), ParseError);
    CHECK_THROWS_AS(classify_report("dp4:rank1_case3"), DomainError);
}

TEST_CASE("conjugacy reports") {
    CHECK(conj_report(builtin("tau"), builtin("upsilon"))["conjugate"] == true);
    CHECK(conj_report(builtin("g1p:1/2"), builtin("g1p:1/3"))["conjugate"] == false);
    CHECK(conj_report(builtin("g1p:1/2"), builtin("g1p:-1/2"))["conjugate"] == true);
    CHECK(conj_report(builtin("rot:1/3"), builtin("rot:2/3"))["conjugate"] == true);
    CHECK(conj_report(builtin("tau"), builtin("antipodal"))["conjugate"] == false);
    CHECK(conj_report(builtin("g2p:1/2"), builtin("g2p:1/3"))["conjugate"] == false);
    Json same = conj_report(builtin("tilde_eta"), builtin("tilde_eta"));
    CHECK(same["conjugate"] == true);
    CHECK(same["certificate"] == to_json(ProjMat()));
    SphereMap k{ProjMat::parse("diag(z+2i, z-2i)"), BaseMobius::identity()};
    CHECK_THROWS_AS(conj_report(builtin("tilde_eta"), conjugate(k, builtin("tilde_eta"))), Undecided);
    SphereMap c{ProjMat::parse("[[z+2i, 1-z^2], [1, z-2i]]"), BaseMobius::identity()};
    Json half = conj_report(builtin("rot:1/2"), conjugate(c, builtin("rot:1/2")));
    CHECK(half["conjugate"] == true);
    CHECK(half["fiberwise"] == true);
}
