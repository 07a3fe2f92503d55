#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lt/serialize.hpp"

using namespace lt;

namespace {

// emit -> parse -> emit must reproduce the text exactly
void check_stable(const Json& j) {
    std::string once = j.dump();
    CHECK(Json::parse(once).dump() == once);
}

Vec pt(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Cyc(x));
    return v;
}

}  // namespace

TEST_CASE("scalar round trips") {
    std::vector<Cyc> samples = {
        Cyc(0),
        Cyc(-7),
        Cyc(rat(3, 4)),
        Cyc::zeta(3, 1),
        Cyc::zeta(8, 3) + Cyc(rat(-1, 2)),
        Cyc::zeta(12, 5).pow(-1),
    };
    for (const Cyc& c : samples) {
        Json j = cyc_to_json(c);
        Cyc back = cyc_from_json(j);
        CHECK(back == c);
        CHECK(back.conductor() == c.conductor());
        CHECK(cyc_to_json(back).dump() == j.dump());
        check_stable(j);
    }
}

TEST_CASE("scalar shape errors") {
    CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"N": 0, "coeffs": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"N": 3})")), std::invalid_argument);
    // phi(3) = 2, so one pair is too few
    CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"N": 3, "coeffs": [["1","1"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"N": 1, "coeffs": [["1","0"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"N": 1, "coeffs": [["x","1"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"N": 1, "coeffs": [[1, 1]]})")),
                    std::invalid_argument);
}

TEST_CASE("forgiving scalar forms") {
    CHECK(scalar_from_json(Json(5)) == Cyc(5));
    CHECK(scalar_from_json(Json("-3")) == Cyc(-3));
    CHECK(scalar_from_json(Json("1/2")) == Cyc(rat(1, 2)));
    CHECK(scalar_from_json(Json("-6/4")) == Cyc(rat(-3, 2)));
    CHECK(scalar_from_json(cyc_to_json(Cyc::zeta(4, 1))) == Cyc::zeta(4, 1));
    CHECK_THROWS_AS(scalar_from_json(Json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(Json("pi")), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("algebra document shape") {
    SimpleLieAlgebra g = build_simple_lie_algebra('A', 1);
    Json j = algebra_to_json(g);
    CHECK(j["type"] == "A");
    CHECK(j["rank"] == 1);
    CHECK(j["dim"] == 3);
    // [h, e] = 2e and [e, f] = h appear; zero brackets like [e, e] do not
    CHECK(j["structure"].size() == 6);
    CHECK(j["form"].size() == 3);
    check_stable(j);
}

TEST_CASE("torus element round trip") {
    SimpleLieAlgebra g = build_simple_lie_algebra('A', 1);
    AutomorphismTuple tuple = make_automorphism_tuple(g, {Mat::identity(g.dim())});
    MultiloopTorus lt(g, tuple);

    TorusElement a = loop_element(lt, g.basis_vector(g.e_index(0)), {3});
    a = a + Cyc(rat(1, 2)) * central_element(lt, {0}, 0);
    a = a + Cyc(-2) * derivation_element(lt, 0);
    Json j = torus_element_to_json(a);
    TorusElement back = torus_element_from_json(lt, j);
    CHECK(back == a);
    CHECK(torus_element_to_json(back).dump() == j.dump());
    check_stable(j);

    // zero central coefficients are dropped at emission
    TorusElement z = Cyc(0) * central_element(lt, {0}, 0);
    CHECK(torus_element_to_json(z)["central"].empty());

    // ingestion validates support through the torus
    Json bad = j;
    bad["loop"][0]["deg"] = Json::array({1, 2});
    CHECK_THROWS_AS(torus_element_from_json(lt, bad), std::invalid_argument);
}

TEST_CASE("torus summary") {
    SimpleLieAlgebra g = build_simple_lie_algebra('A', 2);
    Mat swap = diagram_automorphism(g, {1, 0});
    AutomorphismTuple tuple = make_automorphism_tuple(g, {swap});
    MultiloopTorus lt(g, tuple);
    Json j = torus_to_json(lt);
    CHECK(j["n"] == 1);
    CHECK(j["orders"] == Json::array({2}));
    CHECK(j["piece_dims"] == Json::array({3, 5}));
    check_stable(j);
}

TEST_CASE("module document and weight table") {
    SimpleLieAlgebra g = build_simple_lie_algebra('A', 1);
    GeneratorRep rep = build_generator_rep(g.roots(), {2});
    Json j = generator_rep_to_json(rep);
    CHECK(j["dim"] == 3);
    CHECK(j["lambda"] == Json::array({2}));
    CHECK(j["weights"].size() == 3);
    CHECK(j["basis_labels"].size() == 3);
    CHECK(j["actions"]["e"].size() == 1);
    check_stable(j);

    std::string table = weight_table_text(rep);
    CHECK(table.find("(2) | 1") != std::string::npos);
    CHECK(table.find("(0) | 1") != std::string::npos);
    CHECK(table.find("(-2) | 1") != std::string::npos);
}

TEST_CASE("decomposition documents") {
    SimpleLieAlgebra g = build_simple_lie_algebra('A', 1);
    AutomorphismTuple tuple = make_automorphism_tuple(g, {Mat::identity(g.dim())});
    MultiloopTorus lt(g, tuple);
    EvalModule m = build_eval_module(lt, {{1}, {1}}, {pt({1}), pt({-1})});
    LoopModuleWindow w = build_loop_window(m, {Cyc(0)}, {{-4, 4}});
    ComponentReport rep = decompose(w);
    REQUIRE(rep.components.size() == 2);

    Json j = component_report_to_json(rep);
    CHECK(j["lattice"]["index"] == 2);
    CHECK(j["lattice"]["hnf"] == Json::array({Json::array({2})}));
    CHECK(j["components"].size() == 2);
    CHECK(j["components"][0]["dims"].contains("0"));
    CHECK(j["grade_shift_pairs"].size() == 1);
    CHECK(j["grade_shift_pairs"][0]["match"] == true);
    CHECK(j["verdicts"]["interior_irreducible"] == "pass");
    check_stable(j);

    std::string text = component_report_text(rep);
    CHECK(text.find("index 2") != std::string::npos);
    CHECK(text.find("components: 2") != std::string::npos);
    CHECK(text.find("isomorphic") != std::string::npos);

    PipelineInput in;
    in.g = &g;
    in.sigma = {Mat::identity(g.dim())};
    in.lambdas = {{1}, {1}};
    in.points = {pt({1}), pt({-1})};
    in.alpha = {Cyc(0)};
    in.box = {{-4, 4}};
    ClassificationReport full = verify_classification_instance(in);
    Json cj = classification_to_json(full);
    CHECK(cj["stages"].size() == 10);
    CHECK(cj["all_pass"] == true);
    check_stable(cj);
    std::string ct = classification_text(full);
    CHECK(ct.find("overall: pass") != std::string::npos);
}
