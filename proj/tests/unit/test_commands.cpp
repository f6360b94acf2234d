#include "doctest.h"

#include "defext/acceptance.hpp"
#include "defext/commands.hpp"
#include "defext/error.hpp"

using namespace defext;

TEST_CASE("resolve reports re-parse to the computed differentials")
{
    const Session s = fixture("ex1");
    const auto r = cmd_resolve(s, "4", Over::Deformed, 3, ResolveMethod::Theorem);
    CHECK(r.exit_code == 0);
    CHECK(r.json["agrees_with_generic"] == true);
    const auto D = DeformedAlgebra::build(s.cocycle);
    const std::string text = r.json.dump();
    const auto j = nlohmann::ordered_json::parse(text);
    // rebuild the explicit complex independently and compare entrywise
    auto R = std::make_shared<const Resolution>(
        minimal_resolution(std::make_shared<const Representation>(Representation::simple(s.algebra->algebra(), 3)), 3));
    auto star = std::make_shared<const StarData>(prepare_star(R, s.cocycle));
    const auto X = build_deformed_complex(D, star, 3);
    REQUIRE(j["differentials"].size() == 3);
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto& M = j["differentials"][m - 1];
        const AlgMatrix& B = X.res.differentials[m];
        REQUIRE(M.size() == B.rows);
        for (std::size_t row = 0; row < B.rows; ++row)
            for (std::size_t col = 0; col < B.cols; ++col)
                CHECK(parse_deformed(*s.algebra, D, M[row][col].get<std::string>()) == B.at(row, col));
    }
}

TEST_CASE("star reports re-parse over the base algebra")
{
    const Session s = fixture("ex2");
    const auto r = cmd_star_check(s, "1", 3);
    CHECK(r.exit_code == 0);
    CHECK(r.json["star"] == true);
    CHECK(r.json["alpha_in_radical"] == false);
    const auto& maps = r.json["maps"];
    REQUIRE(maps.size() == 3);
    // alpha_2 sends the generator of Q_2 to e_2 on Q_1
    CHECK(s.algebra->parse(maps[1]["alpha"][0][0].get<std::string>()) == s.algebra->parse("e_2"));
    CHECK(s.algebra->parse(maps[1]["B"][0][0].get<std::string>()) == s.algebra->parse("a2*a1"));
    const auto f = cmd_star_check(fixture("ex5"), "1", 2);
    CHECK(f.exit_code == 1);
    CHECK(f.json["star"] == false);
}

TEST_CASE("class syntax round-trips")
{
    const Session s = fixture("ex2");
    const DeformedExt E = deformed_ext(s, 3);
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& c : E.basis(n))
            CHECK(parse_class(E, s.algebra->field(), format_class(c)) == c);
    const auto c = parse_class(E, s.algebra->field(), "2:[1/2, -3|0 0| 1 1]");
    CHECK(c.comps[0][0] == Scalar(1) / Scalar(2));
    CHECK(format_class(c) == "2:[1/2 -3|0 0|1 1]");
    auto kind = [&](const std::string& t) {
        try {
            parse_class(E, s.algebra->field(), t);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::VerificationFailed;
    };
    CHECK(kind("2[1 0|0 0|0 0]") == ErrorKind::Parse);
    CHECK(kind("x:[1 0]") == ErrorKind::Parse);
    CHECK(kind("1:[1 0]") == ErrorKind::DimensionMismatch);
    CHECK(kind("1:[1 0|0]") == ErrorKind::DimensionMismatch);
    CHECK(kind("9:[]") == ErrorKind::DegreeMismatch);
}

TEST_CASE("command verdicts map to exit codes")
{
    CHECK(exit_code_for(Error(ErrorKind::Parse, "x")) == 2);
    CHECK(exit_code_for(Error(ErrorKind::Semantic, "x")) == 2);
    CHECK(exit_code_for(Error(ErrorKind::StarNotCertified, "x")) == 1);
    CHECK(exit_code_for(Error(ErrorKind::NotACocycle, "x")) == 1);
    CHECK(cmd_cocycle_check(fixture("ex5")).exit_code == 0);
    CHECK(cmd_corollary_check(fixture("ex2"), 3).exit_code == 1);
    const auto dims = cmd_ext_dims(fixture("ex3_r3"), Over::Deformed, 4);
    CHECK(dims.json["dims"] == nlohmann::ordered_json::array({1, 1, 1, 1, 1}));
    CHECK(dims.json["identity_holds"] == false);
    CHECK(cmd_ext_dims(fixture("ex1"), Over::Base, 3, "4").json["dims"] ==
          nlohmann::ordered_json::array({1, 2, 1, 0}));
}

TEST_CASE("a flipped sign in v_m is caught")
{
    const auto r = mutation_check();
    CHECK(r.pass);
}

TEST_CASE("DOT rendering of quivers")
{
    auto count = [](const std::string& s, const std::string& needle) {
        std::size_t n = 0;
        for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1))
            ++n;
        return n;
    };
    const std::string d1 = cmd_emit_dot(fixture("ex1")).text;
    CHECK(count(d1, "->") == 4);
    CHECK(count(d1, ";\n") == 8);
    for (const char* a : {"a1", "a2", "a3", "a4"})
        CHECK(d1.find(std::string("[label=\"") + a + "\"]") != std::string::npos);
    const std::string d3 = cmd_emit_dot(fixture("ex3_r4")).text;
    CHECK(d3.find("\"1\" -> \"1\"") != std::string::npos);
    CHECK(count(d3, "->") == 1);
    const std::string d0 = emit_dot(Quiver({}, {}));
    CHECK(count(d0, ";") == 0);
    CHECK(d0.rfind("digraph", 0) == 0);
}
