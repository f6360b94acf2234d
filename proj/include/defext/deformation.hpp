#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "defext/engine.hpp"
#include "defext/hochschild.hpp"

namespace defext {

/// A_f on A ⊕ At. Basis order: b_0..b_{n-1}, then b_0 t..b_{n-1} t.
class DeformedAlgebra {
public:
    /// Throws NotACocycle if f fails the cocycle identity, Semantic if f does
    /// not vanish on the frame idempotents.
    static DeformedAlgebra build(const Cochain2& f);

    const AlgebraPtr& base() const { return base_; }
    const AlgebraPtr& algebra() const { return alg_; }
    const Cochain2& cocycle() const { return f_; }
    std::size_t base_dim() const { return base_->dim(); }

    /// a0 + a1 t
    Element lift(const Element& a0, const Element& a1) const;
    Element plain(const Element& a0) const { return lift(a0, base_->zero()); }
    Element tagged(const Element& a1) const { return lift(base_->zero(), a1); }
    /// Components (a0, a1) of an element of A_f.
    std::pair<Element, Element> split(const Element& x) const;

private:
    DeformedAlgebra(AlgebraPtr base, AlgebraPtr alg, Cochain2 f)
        : base_(std::move(base)), alg_(std::move(alg)), f_(std::move(f))
    {
    }

    AlgebraPtr base_;
    AlgebraPtr alg_;
    Cochain2 f_;
};

/// (M_0, M_1, T, f_M); fM[a] is the matrix of m ↦ f_M(b_a ⊗ m) : M_0 -> M_1.
struct TupleModule {
    std::shared_ptr<const Representation> M0;
    std::shared_ptr<const Representation> M1;
    Matrix T;
    std::vector<Matrix> fM;

    std::size_t dim() const { return M0->dim() + M1->dim(); }
};

/// (u_0, u_1, u_2) with u_0 : M_0 -> N_0, u_1 : M_0 -> N_1, u_2 : M_1 -> N_1.
struct TupleMorphism {
    Matrix u0;
    Matrix u1;
    Matrix u2;
};

/// (a_0 + a_1 t)(m_0, m_1) = (a_0 m_0, a_0 m_1 + a_1 T(m_0) + f_M(a_0 ⊗ m_0)).
/// Throws NotAModule if the result is not an A_f-module.
Representation realize_tuple(const DeformedAlgebra& D, const TupleModule& M);

/// (m_0, m_1) ↦ (u_0 m_0, u_1 m_0 + u_2 m_1); throws NotAMorphism unless A_f-linear.
Matrix realize_morphism(const DeformedAlgebra& D, const TupleModule& M, const TupleModule& N,
                        const TupleMorphism& u);

/// (0, M, 0, 0)
TupleModule zero_extension(const DeformedAlgebra& D, std::shared_ptr<const Representation> M);
/// (P, P, Id, f_P) for P = ⊕ Ae_{v_s}.
TupleModule hat_free(const DeformedAlgebra& D, const std::vector<std::size_t>& slots);
/// (A, A, Id, f)
TupleModule regular_tuple(const DeformedAlgebra& D);
/// (rad A, A, inc, f)
TupleModule radical_tuple(const DeformedAlgebra& D);

/// Basis of Hom over A_f between the hat projectives at i and j: first the
/// b-branch (·b, f(- ⊗ b)e_j, ·b), then the c-branch (0, ·c, 0).
std::vector<TupleMorphism> hom_hat_basis(const DeformedAlgebra& D, std::size_t i, std::size_t j);

/// Linear map of f_Q(a ⊗ -) on the free module ⊕ Ae_{v_s}, a a basis element of A.
Matrix free_cochain_action(const Cochain2& f, const std::vector<std::size_t>& slots, std::size_t a);

/// Degree of the minimal polynomial of x (first power dependent on lower ones).
std::size_t minimal_polynomial_degree(const StructuredAlgebra& alg, const Element& x);

} // namespace defext
