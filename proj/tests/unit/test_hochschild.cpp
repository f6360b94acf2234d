#include "doctest.h"

#include "defext/error.hpp"
#include "defext/hochschild.hpp"
#include "fixtures_util.hpp"

using namespace defext;

TEST_CASE("cochain evaluation")
{
    auto A = testfix::ex1();
    auto f = testfix::ex1_cocycle(*A);
    CHECK(A->format(f.eval(A->parse("a1"), A->parse("a2"))) == "a3*a4");
    CHECK(f.eval(A->parse("a3"), A->parse("a4")).is_zero());
    CHECK(f.eval(A->parse("0"), A->parse("a2")).is_zero());
    CHECK(A->format(f.eval(A->parse("2*a1"), A->parse("a2 + a4"))) == "2*a3*a4");

    auto B = testfix::ex3(3);
    auto g = testfix::ex3_cocycle(*B, 3);
    CHECK(B->format(g.eval(B->parse("a*a"), B->parse("a"))) == "e_1");
    CHECK(B->format(g.eval(B->parse("a*a"), B->parse("a*a"))) == "a");
    CHECK(g.eval(B->parse("a"), B->parse("a")).is_zero());
}

TEST_CASE("all example cochains are cocycles")
{
    auto A1 = testfix::ex1();
    CHECK(check_cocycle(testfix::ex1_cocycle(*A1)).pass);
    auto A2 = testfix::ex2();
    CHECK(check_cocycle(testfix::ex2_cocycle(*A2)).pass);
    for (int r = 3; r <= 5; ++r) {
        auto A3 = testfix::ex3(r);
        CHECK(check_cocycle(testfix::ex3_cocycle(*A3, r)).pass);
    }
    auto A4 = testfix::ex4();
    CHECK(check_cocycle(testfix::ex4_cocycle(*A4)).pass);
    auto A5 = testfix::ex5();
    CHECK(check_cocycle(testfix::ex5_cocycle(*A5)).pass);
    CHECK(check_cocycle(Cochain2::zero(A1->algebra())).pass);
}

TEST_CASE("perturbed cochain fails exactly where predicted")
{
    auto A = testfix::ex1();
    auto rep = check_cocycle(testfix::ex1_cocycle(*A, "e_4"));
    CHECK_FALSE(rep.pass);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.a == *A->basis_index(Path::stationary(0)) && A->structured().label(v.b) == "a1" &&
            A->structured().label(v.c) == "a2") {
            found = true;
            CHECK(A->format(v.residual) == "-e_4");
        }
    CHECK(found);
}

TEST_CASE("ambiguous patterns are rejected")
{
    auto A = testfix::ex3(3);
    CHECK_THROWS_AS(Cochain2::materialize(*A, {testfix::rule(*A, "a*a*a", "e_1"), testfix::rule(*A, "a*a", "a")}, {}),
                    Error);
    try {
        Cochain2::materialize(*A, {testfix::rule(*A, "a*a*a", "e_1"), testfix::rule(*A, "a*a", "a")}, {});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AmbiguousPattern);
    }
}

TEST_CASE("matrix extension of the cochain")
{
    auto A = testfix::ex1();
    auto f = testfix::ex1_cocycle(*A);
    const auto& S = A->structured();
    AlgMatrix B = AlgMatrix::zero(S, 1, 2);
    B.at(0, 0) = A->parse("a1");
    AlgMatrix Bp = AlgMatrix::zero(S, 2, 1);
    Bp.at(0, 0) = A->parse("a2");
    Bp.at(1, 0) = A->parse("a4");
    CHECK(A->format(tilde_f(f, B, Bp).at(0, 0)) == "a3*a4");
    CHECK(tilde_f(f, AlgMatrix::zero(S, 2, 2), AlgMatrix::zero(S, 2, 3)).is_zero());
    CHECK_THROWS_AS(tilde_f(f, B, B), Error);
}

TEST_CASE("matrix cocycle identity on sampled triples")
{
    auto A = testfix::ex2();
    auto f = testfix::ex2_cocycle(*A);
    const auto& S = A->structured();
    const std::vector<std::string> pool = {"a1", "a2", "a1*a2", "a2*a1", "e_1", "e_2", "a1*a2 + a2*a1", "0"};
    std::size_t seed = 7;
    auto pick = [&]() {
        seed = seed * 1103515245 + 12345;
        return A->parse(pool[(seed >> 8) % pool.size()]);
    };
    for (int trial = 0; trial < 20; ++trial) {
        AlgMatrix B0 = AlgMatrix::zero(S, 2, 2), B1 = AlgMatrix::zero(S, 2, 2), B2 = AlgMatrix::zero(S, 2, 2);
        for (auto* M : {&B0, &B1, &B2})
            for (auto& e : M->entries)
                e = pick();
        AlgMatrix lhs = multiply(S, B0, tilde_f(f, B1, B2));
        lhs = add(S, lhs, scale(S, Scalar(-1), tilde_f(f, multiply(S, B0, B1), B2)));
        lhs = add(S, lhs, tilde_f(f, B0, multiply(S, B1, B2)));
        lhs = add(S, lhs, scale(S, Scalar(-1), multiply(S, tilde_f(f, B0, B1), B2)));
        CHECK(lhs.is_zero());
    }
}
