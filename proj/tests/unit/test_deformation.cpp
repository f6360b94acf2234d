#include "doctest.h"

#include "defext/deformation.hpp"
#include "defext/error.hpp"
#include "fixtures_util.hpp"

using namespace defext;

TEST_CASE("deformed algebra dimensions and truncated-loop powers")
{
    auto A1 = testfix::ex1();
    auto D1 = DeformedAlgebra::build(testfix::ex1_cocycle(*A1));
    CHECK(D1.algebra()->dim() == 18);
    for (int r = 3; r <= 5; ++r) {
        auto A = testfix::ex3(r);
        auto D = DeformedAlgebra::build(testfix::ex3_cocycle(*A, r));
        CHECK(D.algebra()->dim() == static_cast<std::size_t>(2 * r));
        Element x = D.plain(A->parse("a"));
        CHECK(minimal_polynomial_degree(*D.algebra(), x) == static_cast<std::size_t>(2 * r));
        Element p = D.algebra()->unit();
        for (int k = 0; k < r; ++k)
            p = D.algebra()->multiply(p, x);
        CHECK(p == D.tagged(A->parse("e_1")));
    }
}

TEST_CASE("zero cocycle gives the dual-number extension")
{
    auto A = testfix::ex1();
    auto D = DeformedAlgebra::build(Cochain2::zero(A->algebra()));
    const auto& F = *D.algebra();
    Element t = D.tagged(A->algebra()->unit());
    CHECK(F.multiply(t, t).is_zero());
    for (std::size_t b = 0; b < F.dim(); ++b) {
        Element x = F.basis_element(b);
        CHECK(F.multiply(t, x) == F.multiply(x, t));
    }
}

TEST_CASE("non-cocycles are refused")
{
    auto A = testfix::ex1();
    CHECK_THROWS_AS(DeformedAlgebra::build(testfix::ex1_cocycle(*A, "e_4")), Error);
}

TEST_CASE("tuple realizations")
{
    auto A = testfix::ex1();
    auto D = DeformedAlgebra::build(testfix::ex1_cocycle(*A));
    auto alg = D.algebra();
    // (A, A, Id, f) is the regular module
    Representation reg = realize_tuple(D, regular_tuple(D));
    Representation direct = Representation::regular(alg);
    for (std::size_t b = 0; b < alg->dim(); ++b)
        CHECK(reg.action(b) == direct.action(b));
    // hat projectives coincide with Λe_v in the engine's coordinates
    for (std::size_t v = 0; v < 4; ++v) {
        Representation hat = realize_tuple(D, hat_free(D, {v}));
        Representation proj = Representation::projective(alg, v);
        for (std::size_t b = 0; b < alg->dim(); ++b)
            CHECK(hat.action(b) == proj.action(b));
    }
    // (0, S_1, 0, 0) is one-dimensional with t acting as zero
    auto S = std::make_shared<const Representation>(Representation::simple(A->algebra(), 0));
    Representation s = realize_tuple(D, zero_extension(D, S));
    CHECK(s.dim() == 1);
    CHECK(s.act(D.tagged(A->algebra()->unit()), Vec{1}) == Vec{0});
    // radical
    Representation rad = realize_tuple(D, radical_tuple(D));
    CHECK(rad.dim() == A->algebra()->radical().size() + A->dim());
}

TEST_CASE("invalid tuples are rejected")
{
    auto A = testfix::ex1();
    auto D = DeformedAlgebra::build(testfix::ex1_cocycle(*A));
    // dropping f_M(a1 (x) -) breaks the action of a1 * a2 = 0 against f(a1, a2) = a3*a4
    TupleModule u = regular_tuple(D);
    u.fM[*A->basis_index(Path::of_arrow(A->quiver(), 0))] = Matrix(A->dim(), A->dim());
    CHECK_THROWS_AS(realize_tuple(D, u), Error);
}

TEST_CASE("morphisms between hat projectives")
{
    auto A = testfix::ex1();
    auto D = DeformedAlgebra::build(testfix::ex1_cocycle(*A));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            TupleModule Pi = hat_free(D, {i});
            TupleModule Pj = hat_free(D, {j});
            auto basis = hom_hat_basis(D, i, j);
            CHECK(basis.size() == 2 * A->hom_basis(i, j).size());
            std::vector<Vec> flat;
            for (const auto& u : basis) {
                Matrix U = realize_morphism(D, Pi, Pj, u);
                Vec v;
                for (std::size_t r = 0; r < U.rows(); ++r)
                    for (std::size_t c = 0; c < U.cols(); ++c)
                        v.push_back(U(r, c));
                flat.push_back(v);
            }
            if (!flat.empty())
                CHECK(echelon_basis(flat, flat[0].size()).size() == basis.size());
            CHECK(hom_dimension(realize_tuple(D, Pi), realize_tuple(D, Pj)) == basis.size());
        }
    auto id = hom_hat_basis(D, 3, 3).front();
    CHECK(id.u0 == Matrix::identity(id.u0.rows()));
    CHECK(id.u1.is_zero());
}

TEST_CASE("hom from hat projectives into zero extensions")
{
    auto A = testfix::ex2();
    auto D = DeformedAlgebra::build(testfix::ex2_cocycle(*A));
    for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t w = 0; w < 2; ++w) {
            auto M = std::make_shared<const Representation>(Representation::projective(A->algebra(), w));
            std::size_t lhs = hom_dimension(realize_tuple(D, hat_free(D, {v})), realize_tuple(D, zero_extension(D, M)));
            std::size_t rhs = hom_dimension(Representation::projective(A->algebra(), v), *M);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("quotient by the radical is semisimple with the same simples")
{
    auto A = testfix::ex2();
    auto D = DeformedAlgebra::build(testfix::ex2_cocycle(*A));
    CHECK(D.algebra()->radical().size() == A->algebra()->radical().size() + A->dim());
    CHECK(D.algebra()->dim() - D.algebra()->radical().size() == 2);
}
