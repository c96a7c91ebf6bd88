#include <doctest.h>

#include "mqt/reports.hpp"

using namespace mqt;

TEST_CASE("vector and matrix JSON round-trips exactly") {
    auto gf9 = Field::create(3, 2);
    Vector v(gf9, {0, 1, 4, 7});
    Json jv = vector_to_json(v);
    CHECK(jv["field"] == "GF(9)");
    CHECK(jv["coeffs"][2] == "x+1");
    CHECK(vector_from_json(jv) == v);

    Matrix m(gf9, 2, 2, {1, 2, 3, 8});
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    // Inline integer coefficients are accepted on input for prime fields.
    Vector w = vector_from_json(Json::parse(R"x({"field":"GF(5)","coeffs":[1,4,0]})x"));
    CHECK(w == Vector(Field::create(5), {1, 4, 0}));
}

TEST_CASE("subspace JSON canonicalizes on the way in") {
    auto gf2 = Field::gf2();
    std::vector<Vector> rows = {Vector(gf2, {1, 1}), Vector(gf2, {0, 1})};
    Subspace s = Subspace::span(gf2, 2, rows);
    Json js = subspace_to_json(s);
    CHECK(js["ambient"] == 2);
    CHECK(subspace_from_json(js) == s);

    // Non-canonical spanning rows arrive at the same subspace.
    Json alt = Json::parse(R"x({"field":"GF(2)","ambient":2,"rows":[["1","1"],["1","0"]]})x");
    CHECK(subspace_from_json(alt) == Subspace::full(gf2, 2));
}

TEST_CASE("state and basis JSON round-trips") {
    State sigma = mobit_sigma();
    CHECK(state_from_json(state_to_json(sigma)) == sigma);
    CHECK_THROWS_AS((void)state_from_json(Json::parse(R"x({"field":"GF(2)","coeffs":["0","0"]})x")),
                    std::invalid_argument);

    Basis y = mobit_basis('Y');
    Basis back = basis_from_json(basis_to_json(y));
    CHECK(back.labels() == y.labels());
    CHECK(back.effects() == y.effects());

    Json dual = Json::parse(
        R"x({"field":"GF(2)","kind":"dual","labels":["a","b"],"rows":[["1","0"],["0","1"]]})x");
    CHECK(basis_from_json(dual).form() == Basis::Form::dual);
    CHECK_THROWS_AS((void)basis_from_json(Json::parse(
                        R"x({"field":"GF(2)","kind":"bogus","labels":["a","b"],"rows":[["1","0"],["0","1"]]})x")),
                    ParseError);
}

TEST_CASE("ket rendering") {
    auto gf2 = Field::gf2();
    CHECK(render_kets(Vector(gf2, {0, 1, 1, 0}), {2, 2}) == "|0,1> + |1,0>");
    CHECK(render_kets(Vector(gf2, {1, 1}), {2}) == "|0> + |1>");
    auto gf3 = Field::create(3);
    CHECK(render_kets(Vector(gf3, {0, 2}), {2}) == "2|1>");
    CHECK_THROWS_AS((void)render_kets(Vector(gf2, {1, 0}), {2, 2}), MismatchError);
}

TEST_CASE("registry references") {
    CHECK(parse_state_ref("mobit:sigma") == mobit_sigma());
    CHECK(parse_state_ref("bell:S").vec() == Vector(Field::gf2(), {0, 1, 1, 0}));
    CHECK(parse_basis_ref("mobit:Y").labels() == std::vector<std::string>{"+y", "-y"});
    CHECK(parse_basis_ref("bell:basis").labels() ==
          std::vector<std::string>{"R", "S", "U", "V"});
    CHECK(parse_operator_ref("mobit:G") == mobit_g());
    CHECK(parse_operator_ref("mobit:1") == Matrix::identity(Field::gf2(), 2));
    CHECK(parse_operator_ref("mobit:KG") == multiply(mobit_k(), mobit_g()));

    CHECK(parse_state_ref(R"x({"field":"GF(2)","coeffs":["1","1"]})x") == mobit_sigma());

    CHECK_THROWS_AS((void)parse_state_ref("mobit:tau"), ParseError);
    CHECK_THROWS_AS((void)parse_basis_ref("mobit:W"), ParseError);
    CHECK_THROWS_AS((void)parse_operator_ref("bell:R"), ParseError);
    CHECK_THROWS_AS((void)parse_state_ref("{not json"), ParseError);
}

TEST_CASE("reports carry the same facts in JSON and text") {
    Report census = run_census(Field::gf2(), 2, 2, false, 1000000);
    CHECK(census.json["total"] == 15);
    CHECK(census.json["product"] == 9);
    CHECK(census.json["entangled"] == 6);
    CHECK(census.text == "15 total, 9 product, 6 entangled\n");

    Report possible = run_possible(mobit_sigma(), mobit_basis('Z'));
    CHECK(possible.text == "+z -z\n");
    CHECK(possible.json["possible"] == Json::array({"+z", "-z"}));

    Report bell = run_bell();
    CHECK(bell.verdict);
    CHECK(bell.json["lhv"]["searched"] == 64);
    CHECK(bell.json["lhv"]["consistent"] == 0);
    CHECK(bell.text.find("searched 64, consistent 0") != std::string::npos);

    Report teleport_report = run_teleport(mobit_sigma());
    CHECK(teleport_report.verdict);
    CHECK(teleport_report.text.find("teleported: success (all outcomes)") != std::string::npos);

    Report noclone = run_noclone();
    CHECK(noclone.verdict);
    CHECK(noclone.json["pairs_failing"] == 6);
    CHECK(noclone.json["operator_search"]["searched"] == 20160);
    CHECK(noclone.json["operator_search"]["cloners_found"] == 0);

    Report superdense = run_superdense("10");
    CHECK(superdense.verdict);
    CHECK(superdense.json["result"]["decoded"] == "10");
    CHECK(superdense.text.find("decoded: 10") != std::string::npos);
}
