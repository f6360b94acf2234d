#include "doctest.h"

#include "defext/error.hpp"
#include "defext/ext_deformed.hpp"
#include "fixtures_util.hpp"

using namespace defext;

namespace {

std::shared_ptr<const Resolution> all_simples(const QuotientAlgebra& A, std::size_t N)
{
    std::vector<Resolution> parts;
    for (std::size_t v = 0; v < A.algebra()->vertex_count(); ++v) {
        auto S = std::make_shared<const Representation>(Representation::simple(A.algebra(), v));
        parts.push_back(minimal_resolution(S, N));
    }
    return std::make_shared<const Resolution>(direct_sum(parts));
}

DeformedExt make_ext(const Cochain2& f, const QuotientAlgebra& A, std::size_t N)
{
    auto D = DeformedAlgebra::build(f);
    auto star = std::make_shared<const StarData>(prepare_star(all_simples(A, N), f));
    return DeformedExt(D, star, N);
}

} // namespace

TEST_CASE("coefficient recursion")
{
    for (long r = 0; r <= 5; ++r) {
        CHECK(a_coeff(0, r, 0) == 1);
        for (long i = 1; i <= r; ++i)
            CHECK(a_coeff(0, r, i) == 0);
    }
    CHECK(a_coeff(1, 1, 0) == 0);
    CHECK(a_coeff(1, 1, 1) == 1);
    CHECK(a_coeff(2, 1, 0) == 1);
    CHECK(a_coeff(2, 1, 1) == 0);
    CHECK(a_coeff(3, 2, 5) == 0);
    CHECK(a_coeff(-1, 0, 0) == 0);
    // independent unrolling of the recursion for k = 1, r = 2
    // a^1_{2,i} = a^0_{2,i} + a^1_{1,i} - a^1_{1,i-1}
    CHECK(a_coeff(1, 2, 0) == 1 + a_coeff(1, 1, 0));
    CHECK(a_coeff(1, 2, 1) == a_coeff(1, 1, 1) - a_coeff(1, 1, 0));
    CHECK(a_coeff(1, 2, 2) == -a_coeff(1, 1, 1));
}

TEST_CASE("closed representatives in low depth")
{
    auto A = testfix::ex2();
    auto E = make_ext(testfix::ex2_cocycle(*A), *A, 4);
    for (std::size_t n = 0; n <= 2; ++n)
        for (const auto& g : E.basis(n))
            for (std::size_t s = 0; s <= n; ++s) {
                // depth 0 gives g_s
                CHECK(E.closed_representative(g, s, 0) == g.comps[s]);
                // depth 1 gives (-1)^s (g_s - g_{s-1} α_s), reading g_{n+1} = 0
                Matrix want = E.cochain_matrix(s, g.comps[s]);
                if (s >= 1)
                    want = want - E.cochain_matrix(s - 1, g.comps[s - 1]) * E.star().alpha[s];
                CHECK(E.closed_cochain_matrix(g, s, 1) == want.scaled(sign(static_cast<long>(s))));
            }
    // boundary sign at n = m = 1: -g_1 α_2
    for (const auto& g : E.basis(1)) {
        Matrix want = (E.cochain_matrix(1, g.comps[1]) * E.star().alpha[2]).scaled(Scalar(-1));
        CHECK(E.closed_cochain_matrix(g, 2, 1) == want);
    }
}

TEST_CASE("three products agree on Ex1 and Ex2")
{
    auto a1 = testfix::ex1();
    auto E1 = make_ext(testfix::ex1_cocycle(*a1), *a1, 4);
    auto r1 = triple_agreement(E1, 4);
    CHECK(r1.agree);
    CHECK(r1.pairs == 729);
    auto a2 = testfix::ex2();
    auto E2 = make_ext(testfix::ex2_cocycle(*a2), *a2, 4);
    auto r2 = triple_agreement(E2, 4);
    CHECK(r2.agree);
    CHECK(r2.pairs == 280);
}

TEST_CASE("printed degree-one product on the two-cycle example")
{
    auto A = testfix::ex2();
    auto E = make_ext(testfix::ex2_cocycle(*A), *A, 3);
    const Resolution& R = E.base();
    REQUIRE(R.terms[1] == R.terms[2]);
    for (const auto& g : E.basis(1)) {
        // g_1 α_2 = g_1 under Q_2 = Q_1
        CHECK(E.read_cochain(2, E.cochain_matrix(1, g.comps[1]) * E.star().alpha[2]) == g.comps[1]);
        for (const auto& h : E.basis(1)) {
            auto p = E.product(h, g, ProductMethod::Generic);
            CHECK(p.comps[0] == E.star_product(0, h.comps[0], 0, g.comps[0]));
            CHECK(p.comps[1] ==
                  sub(E.star_product(1, h.comps[1], 0, g.comps[0]), E.star_product(0, h.comps[0], 1, g.comps[1])));
            CHECK(p.comps[2] ==
                  sub(E.star_product(1, h.comps[1], 1, g.comps[1]), E.star_product(0, h.comps[0], 2, g.comps[1])));
        }
    }
}

TEST_CASE("corollary verdicts")
{
    auto a1 = testfix::ex1();
    auto E1 = make_ext(testfix::ex1_cocycle(*a1), *a1, 4);
    auto c1 = corollary_check(E1, 4);
    CHECK(c1.hypothesis);
    CHECK(c1.products_match);
    CHECK(c1.pairs_checked == 729);
    auto a2 = testfix::ex2();
    auto E2 = make_ext(testfix::ex2_cocycle(*a2), *a2, 4);
    auto c2 = corollary_check(E2, 4);
    CHECK_FALSE(c2.hypothesis);
    CHECK(c2.failing_alpha == 2);
    auto E0 = make_ext(Cochain2::zero(a1->algebra()), *a1, 3);
    CHECK(corollary_check(E0, 3).hypothesis);
}

TEST_CASE("unit, x and associativity")
{
    auto A = testfix::ex2();
    auto E = make_ext(testfix::ex2_cocycle(*A), *A, 4);
    const auto one = E.unit();
    const auto x = E.x_class();
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& g : E.basis(n)) {
            CHECK(E.product_formula(one, g) == g);
            CHECK(E.product_formula(g, one) == g);
            DeformedExtClass shifted = g;
            shifted.degree = n + 1;
            shifted.comps.push_back(zero_vec(E.base().terms[n + 1].size()));
            CHECK(E.product_formula(g, x) == shifted);
        }
    auto T = ext_table(E, 4);
    CHECK(T.associative);
    CHECK(T.dims == std::vector<std::size_t>{2, 4, 6, 8, 10});
}

TEST_CASE("undeformed case is the graded tensor product")
{
    auto A = testfix::ex1();
    auto E = make_ext(Cochain2::zero(A->algebra()), *A, 3);
    for (std::size_t i = 1; i < E.star().alpha.size(); ++i)
        CHECK(E.star().alpha[i].is_zero());
    CHECK(triple_agreement(E, 3).agree);
    auto fam = E.structured_lifting(E.basis(1)[0], 2);
    for (const auto& b : fam.varphi)
        CHECK(b.is_zero());
}

TEST_CASE("corrupted alpha is detected")
{
    auto A = testfix::ex2();
    auto f = testfix::ex2_cocycle(*A);
    auto D = DeformedAlgebra::build(f);
    StarData d = prepare_star(all_simples(*A, 3), f);
    auto good = std::make_shared<const StarData>(d);
    DeformedExt E(D, good, 3);
    // a perturbed α_2 breaks the explicit complex
    StarData bad = d;
    Matrix& a2 = bad.alpha[2];
    for (std::size_t c = 0; c < a2.cols(); ++c)
        for (std::size_t r = 0; r < a2.rows(); ++r)
            if (!a2(r, c).is_zero()) {
                a2(r, c) = a2(r, c) + Scalar(1);
                r = a2.rows();
                c = a2.cols();
            }
    CHECK_THROWS_AS(DeformedExt(D, std::make_shared<const StarData>(bad), 3), Error);
    // a map sending a radical basis vector of Q_1 to S is not A-linear
    Matrix m(E.base().module->dim(), E.base().layout(1).dim());
    FreeLayout L = E.base().layout(1);
    for (std::size_t k = 0; k < L.dim(); ++k)
        if (A->algebra()->is_radical(L.basis_at(k).second)) {
            m(0, k) = Scalar(1);
            break;
        }
    try {
        E.read_cochain(1, m);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotALinearRepresentative);
    }
}
