#include "defext/deformation.hpp"

#include <algorithm>

#include "defext/error.hpp"

namespace defext {

DeformedAlgebra DeformedAlgebra::build(const Cochain2& f)
{
    const AlgebraPtr& A = f.algebra();
    auto report = check_cocycle(f);
    if (!report.pass) {
        const auto& v = report.violations.front();
        throw Error(ErrorKind::NotACocycle, "cocycle identity fails on (" + A->label(v.a) + ", " + A->label(v.b) +
                                                ", " + A->label(v.c) + ") with residual " + A->format(v.residual));
    }
    if (!f.is_normalized())
        throw Error(ErrorKind::Semantic, "the cochain must vanish whenever one argument is an idempotent e_v");
    const std::size_t n = A->dim();
    StructuredAlgebra::Data d;
    d.field = A->field();
    for (std::size_t i = 0; i < n; ++i)
        d.labels.push_back(A->label(i));
    for (std::size_t i = 0; i < n; ++i)
        d.labels.push_back(A->label(i) + "*t");
    d.vertex_labels = A->vertex_labels();
    d.products.assign(4 * n * n, {});
    auto shift = [n](const SparseVec& s) {
        SparseVec r;
        for (const auto& [i, c] : s)
            r.emplace_back(i + n, c);
        return r;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& p = A->product(i, j);
            SparseVec plain = p;
            for (const auto& t : shift(f.value(i, j)))
                plain.push_back(t);
            d.products[i * 2 * n + j] = plain;
            d.products[i * 2 * n + (j + n)] = shift(p);
            d.products[(i + n) * 2 * n + j] = shift(p);
        }
    for (std::size_t v = 0; v < A->vertex_count(); ++v)
        d.frame.push_back(A->frame(v));
    for (auto r : A->radical())
        d.radical.push_back(r);
    for (std::size_t i = 0; i < n; ++i)
        d.radical.push_back(i + n);
    auto alg = StructuredAlgebra::create(std::move(d), A->name() + "_f");
    return DeformedAlgebra(A, std::move(alg), f);
}

Element DeformedAlgebra::lift(const Element& a0, const Element& a1) const
{
    base_->check_owner(a0);
    base_->check_owner(a1);
    SparseVec s = a0.terms;
    for (const auto& [i, c] : a1.terms)
        s.emplace_back(i + base_dim(), c);
    return alg_->make(std::move(s));
}

std::pair<Element, Element> DeformedAlgebra::split(const Element& x) const
{
    alg_->check_owner(x);
    SparseVec s0, s1;
    for (const auto& [i, c] : x.terms) {
        if (i < base_dim())
            s0.emplace_back(i, c);
        else
            s1.emplace_back(i - base_dim(), c);
    }
    return {base_->make(std::move(s0)), base_->make(std::move(s1))};
}

Representation realize_tuple(const DeformedAlgebra& D, const TupleModule& M)
{
    const std::size_t d0 = M.M0->dim(), d1 = M.M1->dim();
    const std::size_t n = D.base_dim();
    if (M.T.rows() != d1 || M.T.cols() != d0 || M.fM.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "tuple data does not match its modules");
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix m(d0 + d1, d0 + d1);
        m.set_block(0, 0, M.M0->action(a));
        m.set_block(d0, 0, M.fM[a]);
        m.set_block(d0, d0, M.M1->action(a));
        acts.push_back(std::move(m));
    }
    for (std::size_t a = 0; a < n; ++a) {
        Matrix m(d0 + d1, d0 + d1);
        m.set_block(d0, 0, M.M1->action(a) * M.T);
        acts.push_back(std::move(m));
    }
    return Representation(D.algebra(), std::move(acts), true);
}

Matrix realize_morphism(const DeformedAlgebra& D, const TupleModule& M, const TupleModule& N,
                        const TupleMorphism& u)
{
    const std::size_t m0 = M.M0->dim(), m1 = M.M1->dim();
    const std::size_t n0 = N.M0->dim(), n1 = N.M1->dim();
    if (u.u0.rows() != n0 || u.u0.cols() != m0 || u.u1.rows() != n1 || u.u1.cols() != m0 || u.u2.rows() != n1 ||
        u.u2.cols() != m1)
        throw Error(ErrorKind::DimensionMismatch, "morphism triple does not match its tuples");
    Matrix U(n0 + n1, m0 + m1);
    U.set_block(0, 0, u.u0);
    U.set_block(n0, 0, u.u1);
    U.set_block(n0, m0, u.u2);
    Representation RM = realize_tuple(D, M);
    Representation RN = realize_tuple(D, N);
    for (std::size_t b = 0; b < D.algebra()->dim(); ++b)
        if (!(U * RM.action(b) == RN.action(b) * U))
            throw Error(ErrorKind::NotAMorphism, "not linear over A_f at basis element " + D.algebra()->label(b));
    return U;
}

TupleModule zero_extension(const DeformedAlgebra& D, std::shared_ptr<const Representation> M)
{
    TupleModule t;
    const std::size_t d = M->dim();
    t.M0 = std::make_shared<const Representation>(D.base(), std::vector<Matrix>(D.base_dim(), Matrix(0, 0)), false);
    t.M1 = std::move(M);
    t.T = Matrix(d, 0);
    t.fM.assign(D.base_dim(), Matrix(d, 0));
    return t;
}

Matrix free_cochain_action(const Cochain2& f, const std::vector<std::size_t>& slots, std::size_t a)
{
    const StructuredAlgebra& A = *f.algebra();
    FreeLayout L(A, slots);
    Matrix m(L.dim(), L.dim());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const auto& pb = A.projective_basis(slots[s]);
        for (std::size_t k = 0; k < pb.size(); ++k)
            for (const auto& [b, c] : A.multiply(f.value(a, pb[k]), SparseVec{{A.frame(slots[s]), Scalar(1)}}))
                m(L.index(s, b), L.offset(s) + k) += c;
    }
    return m;
}

TupleModule hat_free(const DeformedAlgebra& D, const std::vector<std::size_t>& slots)
{
    const StructuredAlgebra& A = *D.base();
    FreeLayout L(A, slots);
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < A.dim(); ++a)
        acts.push_back(L.action(a));
    auto P = std::make_shared<const Representation>(D.base(), std::move(acts), false);
    TupleModule t;
    t.M0 = P;
    t.M1 = P;
    t.T = Matrix::identity(L.dim());
    for (std::size_t a = 0; a < A.dim(); ++a)
        t.fM.push_back(free_cochain_action(D.cocycle(), slots, a));
    return t;
}

TupleModule regular_tuple(const DeformedAlgebra& D)
{
    const StructuredAlgebra& A = *D.base();
    auto R = std::make_shared<const Representation>(Representation::regular(D.base()));
    TupleModule t;
    t.M0 = R;
    t.M1 = R;
    t.T = Matrix::identity(A.dim());
    for (std::size_t a = 0; a < A.dim(); ++a) {
        Matrix m(A.dim(), A.dim());
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (const auto& [k, c] : D.cocycle().value(a, j))
                m(k, j) = c;
        t.fM.push_back(std::move(m));
    }
    return t;
}

TupleModule radical_tuple(const DeformedAlgebra& D)
{
    const StructuredAlgebra& A = *D.base();
    const auto& rad = A.radical();
    const std::size_t r = rad.size();
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < A.dim(); ++a) {
        Matrix m(r, r);
        for (std::size_t j = 0; j < r; ++j)
            for (const auto& [k, c] : A.product(a, rad[j])) {
                auto it = std::find(rad.begin(), rad.end(), k);
                if (it == rad.end())
                    throw Error(ErrorKind::VerificationFailed, "radical is not a left ideal");
                m(static_cast<std::size_t>(it - rad.begin()), j) = c;
            }
        acts.push_back(std::move(m));
    }
    TupleModule t = regular_tuple(D);
    t.M0 = std::make_shared<const Representation>(D.base(), std::move(acts), false);
    Matrix inc(A.dim(), r);
    for (std::size_t j = 0; j < r; ++j)
        inc(rad[j], j) = Scalar(1);
    t.T = inc;
    for (auto& m : t.fM)
        m = m * inc;
    return t;
}

std::vector<TupleMorphism> hom_hat_basis(const DeformedAlgebra& D, std::size_t i, std::size_t j)
{
    const StructuredAlgebra& A = *D.base();
    const auto& Pi = A.projective_basis(i);
    FreeLayout Lj(A, {j});
    const auto corner = A.corner_basis(i, j);
    auto right_mult = [&](const SparseVec& b) {
        Matrix m(Lj.dim(), Pi.size());
        for (std::size_t k = 0; k < Pi.size(); ++k)
            for (const auto& [x, c] : A.multiply(SparseVec{{Pi[k], Scalar(1)}}, b))
                m(Lj.index(0, x), k) += c;
        return m;
    };
    std::vector<TupleMorphism> out;
    for (auto b : corner) {
        Matrix u = right_mult({{b, Scalar(1)}});
        Matrix u1(Lj.dim(), Pi.size());
        for (std::size_t k = 0; k < Pi.size(); ++k)
            for (const auto& [x, c] :
                 A.multiply(D.cocycle().value(Pi[k], b), SparseVec{{A.frame(j), Scalar(1)}}))
                u1(Lj.index(0, x), k) += c;
        out.push_back({u, u1, u});
    }
    for (auto c : corner) {
        Matrix z(Lj.dim(), Pi.size());
        out.push_back({z, right_mult({{c, Scalar(1)}}), z});
    }
    return out;
}

std::size_t minimal_polynomial_degree(const StructuredAlgebra& alg, const Element& x)
{
    alg.check_owner(x);
    Subspace powers(alg.dim());
    Element p = alg.unit();
    std::size_t k = 0;
    while (powers.add(alg.dense(p))) {
        p = alg.multiply(p, x);
        ++k;
    }
    return k;
}

} // namespace defext
