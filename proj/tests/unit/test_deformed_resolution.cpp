#include "doctest.h"

#include "defext/deformed_resolution.hpp"
#include "defext/error.hpp"
#include "fixtures_util.hpp"

using namespace defext;

namespace {

std::shared_ptr<const Resolution> simple_resolution(const QuotientAlgebra& A, std::size_t v, std::size_t N)
{
    auto S = std::make_shared<const Representation>(Representation::simple(A.algebra(), v));
    return std::make_shared<const Resolution>(minimal_resolution(S, N));
}

std::shared_ptr<const Resolution> all_simples(const QuotientAlgebra& A, std::size_t N)
{
    std::vector<Resolution> parts;
    for (std::size_t v = 0; v < A.algebra()->vertex_count(); ++v)
        parts.push_back(*simple_resolution(A, v, N));
    return std::make_shared<const Resolution>(direct_sum(parts));
}

std::vector<std::size_t> counts(std::initializer_list<std::size_t> l) { return l; }

} // namespace

TEST_CASE("correction terms and alpha on the commutative-square example")
{
    auto A = testfix::ex1();
    auto f = testfix::ex1_cocycle(*A);
    auto R = simple_resolution(*A, 3, 3);
    StarData d = prepare_star(R, f);
    CHECK(d.star);
    // C_2 = [0 a3] : P4 -> P2 (+) P3
    REQUIRE(d.C[2].rows == 1);
    REQUIRE(d.C[2].cols == 2);
    CHECK(d.C[2].at(0, 0).is_zero());
    CHECK(d.C[2].at(0, 1) == A->parse("a3"));
    // alpha_2 sends the generator of Q_2 to (0, a3)
    FreeLayout Q1 = R->layout(1);
    Vec gen = zero_vec(R->layout(2).dim());
    gen[R->layout(2).index(0, A->algebra()->frame(0))] = Scalar(1);
    auto comps = Q1.components(d.alpha[2].apply(gen));
    CHECK(comps[0].is_zero());
    CHECK(comps[1] == A->parse("a3"));
    CHECK(alpha_images_radical(d));
}

TEST_CASE("explicit complexes over A_f")
{
    SUBCASE("commutative square, S_4")
    {
        auto A = testfix::ex1();
        auto f = testfix::ex1_cocycle(*A);
        auto D = DeformedAlgebra::build(f);
        auto star = std::make_shared<const StarData>(prepare_star(simple_resolution(*A, 3, 5), f));
        auto C = build_deformed_complex(D, star, 5);
        CHECK(C.res.multiplicities(0) == counts({0, 0, 0, 1}));
        CHECK(C.res.multiplicities(1) == counts({0, 1, 1, 1}));
        CHECK(C.res.multiplicities(2) == counts({1, 1, 1, 1}));
        auto cmp = compare_with_generic(D, C);
        CHECK(cmp.match);
        CHECK_NOTHROW(require_match(cmp));
    }
    SUBCASE("two-cycle, S_1")
    {
        auto A = testfix::ex2();
        auto f = testfix::ex2_cocycle(*A);
        auto D = DeformedAlgebra::build(f);
        auto star = std::make_shared<const StarData>(prepare_star(simple_resolution(*A, 0, 5), f));
        CHECK_FALSE(alpha_images_radical(*star));
        auto C = build_deformed_complex(D, star, 5);
        CHECK(C.res.multiplicities(0) == counts({1, 0}));
        CHECK(C.res.multiplicities(1) == counts({1, 1}));
        CHECK(C.res.multiplicities(2) == counts({1, 2}));
        CHECK(C.res.multiplicities(3) == counts({2, 2}));
        CHECK(compare_with_generic(D, C).match);
    }
    SUBCASE("sum of all simples where (*) holds")
    {
        std::vector<std::pair<QuotientPtr, Cochain2>> cases;
        auto a1 = testfix::ex1();
        cases.emplace_back(a1, testfix::ex1_cocycle(*a1));
        auto a2 = testfix::ex2();
        cases.emplace_back(a2, testfix::ex2_cocycle(*a2));
        cases.emplace_back(a1, Cochain2::zero(a1->algebra()));
        for (const auto& [A, f] : cases) {
            auto D = DeformedAlgebra::build(f);
            auto R = all_simples(*A, 5);
            auto star = std::make_shared<const StarData>(prepare_star(R, f));
            auto C = build_deformed_complex(D, star, 5);
            CHECK(compare_with_generic(D, C).match);
            CHECK(ext_dims_deformed(*R, C.res).identity_holds);
        }
    }
}

TEST_CASE("condition (*) fails on the remaining examples")
{
    auto a3 = testfix::ex3(3);
    CHECK_FALSE(check_star(simple_resolution(*a3, 0, 2), testfix::ex3_cocycle(*a3, 3)).star);
    auto a4 = testfix::ex4();
    CHECK_FALSE(check_star(simple_resolution(*a4, 1, 2), testfix::ex4_cocycle(*a4)).star);
    auto a5 = testfix::ex5();
    CHECK_FALSE(check_star(simple_resolution(*a5, 0, 2), testfix::ex5_cocycle(*a5)).star);
    StarData d = check_star(simple_resolution(*a5, 0, 2), testfix::ex5_cocycle(*a5));
    CHECK_THROWS_AS(solve_C(d, testfix::ex5_cocycle(*a5)), Error);
}

TEST_CASE("condition (*) needs degree two")
{
    auto A = testfix::ex1();
    auto f = testfix::ex1_cocycle(*A);
    CHECK_THROWS_AS(check_star(simple_resolution(*A, 3, 1), f), Error);
}

TEST_CASE("tampered alpha is caught by the realized comparison")
{
    auto A = testfix::ex2();
    auto f = testfix::ex2_cocycle(*A);
    auto D = DeformedAlgebra::build(f);
    StarData d = prepare_star(simple_resolution(*A, 0, 3), f);
    d.alpha[2] = d.alpha[2].scaled(Scalar(-1));
    auto star = std::make_shared<const StarData>(d);
    CHECK_THROWS_AS(build_deformed_complex(D, star, 3), Error);
}

TEST_CASE("A_f of the four-arrow example agrees with its quiver presentation")
{
    // A_f presented by generators and relations: the loop g1 at 1 plays the role of e_1 t
    Quiver q({"1", "2"}, {{"a1", 0, 1}, {"a2", 0, 1}, {"b1", 1, 0}, {"b2", 1, 0}, {"g1", 0, 0}});
    auto P = testfix::build(q, {"g1*g1", "b2*a1*b2*a1", "b1*a1", "b2*a2", "a2*b1", "b2*a1*b2-b2*g1",
                                "b2*a1*b1-b1*g1", "g1*a1-a1*b2*a1", "g1*a2-a2*b2*a1"});
    auto A = testfix::ex4();
    auto D = DeformedAlgebra::build(testfix::ex4_cocycle(*A));
    CHECK(P->dim() == D.algebra()->dim());
    auto S = std::make_shared<const Representation>(Representation::simple(A->algebra(), 1));
    auto Sf = std::make_shared<const Representation>(realize_tuple(D, zero_extension(D, S)));
    auto R = minimal_resolution(Sf, 5);
    auto Rp = minimal_resolution(
        std::make_shared<const Representation>(Representation::simple(P->algebra(), 1)), 5);
    for (std::size_t m = 0; m <= 5; ++m)
        CHECK(R.multiplicities(m) == Rp.multiplicities(m));
    CHECK(R.multiplicities(3) == counts({3, 3}));
    CHECK(R.multiplicities(4) == counts({3, 4}));
}
