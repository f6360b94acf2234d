#pragma once

#include <string>
#include <vector>

#include "defext/hochschild.hpp"
#include "defext/path_algebra.hpp"

namespace testfix {

inline defext::QuotientPtr build(const defext::Quiver& q, const std::vector<std::string>& rels)
{
    defext::Field f{};
    std::vector<defext::PathPoly> polys;
    for (const auto& r : rels)
        polys.push_back(defext::parse_path_poly(q, f, r));
    return defext::QuotientAlgebra::build(q, f, polys);
}

inline defext::QuotientPtr ex1()
{
    defext::Quiver q({"1", "2", "3", "4"}, {{"a1", 0, 1}, {"a2", 1, 3}, {"a3", 0, 2}, {"a4", 2, 3}});
    return build(q, {"a1*a2"});
}

inline defext::QuotientPtr ex2()
{
    defext::Quiver q({"1", "2"}, {{"a1", 0, 1}, {"a2", 1, 0}});
    return build(q, {"a1*a2*a1", "a2*a1*a2"});
}

inline defext::Cochain2 ex1_cocycle(const defext::QuotientAlgebra& A, const std::string& value = "a3*a4")
{
    defext::EntryRule e{*A.basis_index(defext::Path::of_arrow(A.quiver(), 0)),
                        *A.basis_index(defext::Path::of_arrow(A.quiver(), 1)), A.parse(value)};
    return defext::Cochain2::materialize(A, {}, {e});
}

inline defext::PatternRule rule(const defext::QuotientAlgebra& A, const std::string& pattern, const std::string& value)
{
    auto p = defext::parse_path_poly(A.quiver(), A.field(), pattern);
    return {p.begin()->first, defext::parse_path_poly(A.quiver(), A.field(), value)};
}

inline defext::Cochain2 ex2_cocycle(const defext::QuotientAlgebra& A)
{
    return defext::Cochain2::materialize(A, {rule(A, "a1*a2*a1", "a1"), rule(A, "a2*a1*a2", "a2")}, {});
}

} // namespace testfix

namespace testfix {

inline defext::QuotientPtr ex3(int r)
{
    defext::Quiver q({"1"}, {{"a", 0, 0}});
    std::string rel = "a";
    for (int i = 1; i < r; ++i)
        rel += "*a";
    return build(q, {rel});
}

inline defext::Cochain2 ex3_cocycle(const defext::QuotientAlgebra& A, int r)
{
    std::string w = "a";
    for (int i = 1; i < r; ++i)
        w += "*a";
    return defext::Cochain2::materialize(A, {rule(A, w, "e_1")}, {});
}

inline defext::QuotientPtr ex4()
{
    defext::Quiver q({"1", "2"}, {{"a1", 0, 1}, {"a2", 0, 1}, {"b1", 1, 0}, {"b2", 1, 0}});
    return build(q, {"b1*a1", "b2*a1", "b2*a2", "a2*b1"});
}

inline defext::Cochain2 ex4_cocycle(const defext::QuotientAlgebra& A)
{
    return defext::Cochain2::materialize(A, {rule(A, "b2*a1", "e_2")}, {});
}

inline defext::QuotientPtr ex5()
{
    defext::Quiver q({"1", "2", "3"}, {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 0}});
    return build(q, {"a1*a2*a3", "a2*a3*a1*a2"});
}

inline defext::Cochain2 ex5_cocycle(const defext::QuotientAlgebra& A)
{
    return defext::Cochain2::materialize(A, {rule(A, "a1*a2*a3", "e_1"), rule(A, "a2*a3*a1*a2", "a2")}, {});
}

} // namespace testfix
