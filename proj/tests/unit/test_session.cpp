#include "doctest.h"

#include <string>

#include "defext/error.hpp"
#include "defext/session.hpp"
#include "fixtures_util.hpp"

using namespace defext;

namespace {

ErrorKind kind_of(const std::string& text)
{
    try {
        Session::parse(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
}

std::string message_of(const std::string& text)
{
    try {
        Session::parse(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

bool same_cocycle(const Cochain2& f, const Cochain2& g)
{
    const std::size_t n = f.algebra()->dim();
    if (n != g.algebra()->dim())
        return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f.value(i, j) != g.value(i, j))
                return false;
    return true;
}

const char* kLoop = R"(
[quiver]
vertices = ["1"]
[[quiver.arrow]]
name = "a"
source = "1"
target = "1"
[algebra]
relations = ["a*a*a"]
)";

} // namespace

TEST_CASE("embedded fixtures match the hand-built examples")
{
    REQUIRE(embedded_fixtures().size() == 7);
    auto s1 = fixture("ex1");
    auto a1 = testfix::ex1();
    CHECK(s1.algebra->dim() == a1->dim());
    CHECK(same_cocycle(s1.cocycle, testfix::ex1_cocycle(*a1)));
    CHECK(s1.degree == 6);
    auto s2 = fixture("ex2");
    auto a2 = testfix::ex2();
    CHECK(same_cocycle(s2.cocycle, testfix::ex2_cocycle(*a2)));
    for (int r = 3; r <= 5; ++r) {
        auto s3 = fixture("ex3_r" + std::to_string(r));
        auto a3 = testfix::ex3(r);
        CHECK(s3.algebra->dim() == static_cast<std::size_t>(r));
        CHECK(same_cocycle(s3.cocycle, testfix::ex3_cocycle(*a3, r)));
    }
    auto a4 = testfix::ex4();
    CHECK(same_cocycle(fixture("ex4").cocycle, testfix::ex4_cocycle(*a4)));
    auto a5 = testfix::ex5();
    CHECK(same_cocycle(fixture("ex5").cocycle, testfix::ex5_cocycle(*a5)));
    CHECK_THROWS_AS(fixture("ex9"), Error);
}

TEST_CASE("session defaults and options")
{
    auto s = Session::parse(kLoop);
    CHECK(s.algebra->dim() == 3);
    CHECK(s.cocycle.is_zero());
    CHECK(s.degree == 6);
    CHECK(s.format == "text");
    CHECK(s.vertex("1") == 0);
    CHECK_THROWS_AS(s.vertex("7"), Error);
    auto t = Session::parse(std::string(kLoop) + "[options]\ndegree = 3\nformat = \"json\"\n");
    CHECK(t.degree == 3);
    CHECK(t.format == "json");
    auto p = Session::parse(std::string("[field]\nkind = \"prime\"\np = 7\n") + kLoop);
    CHECK(p.algebra->field().prime == 7);
}

TEST_CASE("session errors carry positions and names")
{
    CHECK(kind_of("[quiver\nvertices = [1]") == ErrorKind::Parse);
    CHECK(message_of("name = \"x\"\n[quiver\n").find("line 2") != std::string::npos);

    const std::string bad_vertex = R"([quiver]
vertices = ["1"]
[[quiver.arrow]]
name = "a"
source = "1"
target = "9"
)";
    CHECK(kind_of(bad_vertex) == ErrorKind::Semantic);
    CHECK(message_of(bad_vertex).find("'9'") != std::string::npos);

    std::string bad_rel = kLoop;
    bad_rel.replace(bad_rel.find("a*a*a"), 5, "a*b*a");
    CHECK(kind_of(bad_rel) == ErrorKind::Semantic);
    CHECK(message_of(bad_rel).find("line 9") != std::string::npos);
    CHECK(message_of(bad_rel).find("'b'") != std::string::npos);

    CHECK(kind_of(std::string("[field]\nkind = \"prime\"\np = 9\n") + kLoop) == ErrorKind::Semantic);
    CHECK(kind_of(std::string("[field]\nkind = \"complex\"\n") + kLoop) == ErrorKind::Semantic);
    CHECK(kind_of(std::string(kLoop) + "[extra]\nx = 1\n") == ErrorKind::Semantic);
    CHECK(kind_of(std::string(kLoop) + "[options]\nformat = \"xml\"\n") == ErrorKind::Semantic);
    CHECK(kind_of(std::string(kLoop) + "[[cocycle.entry]]\nleft = \"a+e_1\"\nright = \"a\"\nvalue = \"e_1\"\n") ==
          ErrorKind::Semantic);
    // 1/3 is not a scalar of F_3
    CHECK_THROWS_AS(Session::parse(std::string("[field]\nkind = \"prime\"\np = 3\n") + kLoop +
                                   "[[cocycle.rule]]\npattern = \"a*a*a\"\nvalue = \"1/3*e_1\"\n"),
                    Error);
}

TEST_CASE("deformed elements parse from the printed form")
{
    auto s = fixture("ex1");
    auto D = DeformedAlgebra::build(s.cocycle);
    const QuotientAlgebra& A = *s.algebra;
    auto x = parse_deformed(A, D, "2*a1 - a3*a4*t + e_2*t");
    auto [x0, x1] = D.split(x);
    CHECK(x0 == A.parse("2*a1"));
    CHECK(x1 == A.parse("-a3*a4 + e_2"));
    CHECK(parse_deformed(A, D, D.algebra()->format(x)) == x);
    CHECK(parse_deformed(A, D, "0").is_zero());
    CHECK(parse_deformed(A, D, "-1/2*a1*t") == D.tagged(A.parse("-1/2*a1")));
}
