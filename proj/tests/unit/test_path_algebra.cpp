#include "doctest.h"

#include "defext/error.hpp"
#include "defext/path_algebra.hpp"

using namespace defext;

namespace {

Quiver ex1_quiver()
{
    return Quiver({"1", "2", "3", "4"}, {{"a1", 0, 1}, {"a2", 1, 3}, {"a3", 0, 2}, {"a4", 2, 3}});
}

std::size_t count_paths_by_adjacency(const Quiver& q, std::size_t max_len)
{
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n, std::vector<std::size_t>(n, 0));
    for (const auto& a : q.arrows())
        ++adj[a.source][a.target];
    std::vector<std::vector<std::size_t>> power(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        power[i][i] = 1;
    std::size_t total = n;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j)
                    next[i][j] += power[i][k] * adj[k][j];
        power = next;
        for (const auto& row : power)
            for (auto x : row)
                total += x;
    }
    return total;
}

} // namespace

TEST_CASE("path enumeration matches adjacency powers")
{
    Quiver q = ex1_quiver();
    CHECK(enumerate_paths(q, 2).size() == 10);
    CHECK(enumerate_paths(q, 2).size() == count_paths_by_adjacency(q, 2));
    Quiver cyc({"1", "2"}, {{"a1", 0, 1}, {"a2", 1, 0}});
    CHECK(enumerate_paths(cyc, 5).size() == count_paths_by_adjacency(cyc, 5));
}

TEST_CASE("commutative square with one zero relation")
{
    Quiver q = ex1_quiver();
    Field f{};
    auto A = QuotientAlgebra::build(q, f, {parse_path_poly(q, f, "a1*a2")});
    CHECK(A->dim() == 9);
    CHECK(A->format(A->parse("a3*a4")) == "a3*a4");
    CHECK(A->parse("a1*a2").is_zero());
    CHECK(A->hom_basis(0, 3).size() == 1);
    CHECK_THROWS_AS(QuotientAlgebra::build(q, f, {parse_path_poly(q, f, "a1*a2")}, 1), Error);
}

TEST_CASE("truncated loop")
{
    Quiver q({"1"}, {{"a", 0, 0}});
    Field f{};
    for (int r = 3; r <= 5; ++r) {
        std::string rel = "a";
        for (int i = 1; i < r; ++i)
            rel += "*a";
        auto A = QuotientAlgebra::build(q, f, {parse_path_poly(q, f, rel)});
        CHECK(A->dim() == static_cast<std::size_t>(r));
    }
}

TEST_CASE("relations are reduced to a confluent system")
{
    // a*b - c*d and a*b*e: the completion must also kill c*d*e.
    Quiver q({"1", "2", "3", "4"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 3}, {"d", 3, 2}, {"e", 2, 2}});
    Field f{};
    auto A = QuotientAlgebra::build(q, f,
                                    {parse_path_poly(q, f, "a*b - c*d"), parse_path_poly(q, f, "a*b*e"),
                                     parse_path_poly(q, f, "e*e")});
    CHECK(A->parse("c*d*e").is_zero());
    CHECK(A->parse("a*b") == A->parse("c*d"));
}

TEST_CASE("parse errors and semantic errors")
{
    Quiver q = ex1_quiver();
    Field f{};
    CHECK_THROWS_AS(parse_path_poly(q, f, "a1 +"), Error);
    CHECK_THROWS_AS(parse_path_poly(q, f, "a2*a1"), Error);
    CHECK_THROWS_AS(parse_path_poly(q, f, "zz"), Error);
    CHECK(parse_path_poly(q, f, "0").empty());
    CHECK_THROWS_AS(QuotientAlgebra::build(q, f, {parse_path_poly(q, f, "a1*a2 - a3")}), Error);
}
