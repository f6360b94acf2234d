#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "defext/linalg.hpp"
#include "defext/structured.hpp"

namespace defext {

/// Finite-dimensional left module: action(b) is the matrix of b acting on
/// column coordinate vectors.
class Representation {
public:
    /// Throws NotAModule unless the actions respect the structure constants
    /// and the unit acts as the identity.
    Representation(AlgebraPtr alg, std::vector<Matrix> actions, bool verify = true);

    static Representation simple(AlgebraPtr alg, std::size_t v);
    /// Direct sum of all simples; basis vector v spans S_v.
    static Representation semisimple(AlgebraPtr alg);
    /// Λe_v with basis projective_basis(v).
    static Representation projective(AlgebraPtr alg, std::size_t v);
    static Representation regular(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t b) const { return actions_.at(b); }
    Matrix action(const Element& a) const;
    Vec act(const Element& a, const Vec& m) const;
    /// dim e_v M for every vertex v.
    std::vector<std::size_t> dim_vector() const;

private:
    AlgebraPtr alg_;
    std::size_t dim_ = 0;
    std::vector<Matrix> actions_;
};

/// Coordinates on a free module ⊕_s Λe_{v_s}: slot s contributes the
/// coefficients on projective_basis(v_s), slots concatenated in order.
class FreeLayout {
public:
    FreeLayout(const StructuredAlgebra& alg, std::vector<std::size_t> slots);

    const std::vector<std::size_t>& slots() const { return slots_; }
    std::size_t slot_count() const { return slots_.size(); }
    std::size_t dim() const { return dim_; }
    std::size_t offset(std::size_t s) const { return offsets_.at(s); }
    std::size_t slot_dim(std::size_t s) const;

    /// Coordinate vector of the element with the given per-slot components.
    Vec coordinates(const std::vector<const Element*>& components) const;
    Vec row_coordinates(const AlgMatrix& m, std::size_t row) const;
    /// Per-slot components of a coordinate vector.
    std::vector<Element> components(const Vec& v) const;
    /// Coordinate of basis element b in slot s.
    std::size_t index(std::size_t s, std::size_t b) const;
    /// Algebra basis element at a coordinate, with its slot.
    std::pair<std::size_t, std::size_t> basis_at(std::size_t k) const;
    /// a . v for a basis element a of the algebra.
    Vec act(std::size_t a, const Vec& v) const;
    /// Matrix of left multiplication by basis element a.
    Matrix action(std::size_t a) const;

private:
    const StructuredAlgebra* alg_;
    std::vector<std::size_t> slots_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
    std::vector<std::size_t> position_; // position of basis b inside projective_basis(right(b))
};

/// Matrix of x -> [x] B from ⊕Λe_{src} to ⊕Λe_{tgt} (dim target × dim source).
Matrix linear_map(const StructuredAlgebra& alg, const AlgMatrix& B, const std::vector<std::size_t>& src,
                  const std::vector<std::size_t>& tgt);

/// Minimal projective resolution Q_N -> ... -> Q_0 -> M -> 0.
struct Resolution {
    AlgebraPtr alg;
    std::shared_ptr<const Representation> module;
    /// terms[i] = vertices of the indecomposable summands of Q_i, in slot order.
    std::vector<std::vector<std::size_t>> terms;
    /// Images in M of the generators of Q_0.
    std::vector<Vec> augmentation;
    /// differentials[i] : Q_i -> Q_{i-1} as B_i; differentials[0] is empty.
    std::vector<AlgMatrix> differentials;

    std::size_t degree() const { return terms.size() - 1; }
    FreeLayout layout(std::size_t i) const { return FreeLayout(*alg, terms.at(i)); }
    /// Number of summands at each vertex in degree i.
    std::vector<std::size_t> multiplicities(std::size_t i) const;
    Matrix linear_augmentation() const;
    Matrix linear_differential(std::size_t i) const;
};

/// Generators of the submodule spanned by `basis` inside a module acted on by
/// `act`; returns (vertex, vector) pairs chosen in echelon order.
struct CoverGenerator {
    std::size_t vertex;
    Vec vector;
};
std::vector<CoverGenerator> top_generators(const StructuredAlgebra& alg, const std::vector<Vec>& basis,
                                           std::size_t ambient,
                                           const std::function<Vec(std::size_t, const Vec&)>& act);

/// Projective cover of M: vertices and generator images.
std::vector<CoverGenerator> projective_cover(const Representation& M);

/// Resolution up to degree N; every invariant is verified before returning.
Resolution minimal_resolution(std::shared_ptr<const Representation> M, std::size_t N);

/// Block-diagonal sum of resolutions over the same algebra; the module is
/// the direct sum of their modules.
Resolution direct_sum(const std::vector<Resolution>& parts);

struct ResolutionCheck {
    bool ok = true;
    std::string failure;
};
/// Exactness, B_{i+1} B_i = 0 and minimality.
ResolutionCheck verify_resolution(const Resolution& R);

/// Solves image-membership problems along a fixed resolution: find y in
/// e_v Q_t with δ_t(y) = target (t >= 1), or δ_0(y) = target in M (t = 0).
class Lifter {
public:
    explicit Lifter(const Resolution& R);
    /// Returns nullopt if there is no solution.
    std::optional<std::vector<Element>> solve(std::size_t t, std::size_t v, const Vec& target) const;

private:
    struct System {
        std::vector<std::pair<std::size_t, std::size_t>> unknowns; // (slot, basis)
        std::unique_ptr<LinearSolver> solver;
    };
    const System& system(std::size_t t, std::size_t v) const;

    const Resolution& R_;
    mutable std::map<std::pair<std::size_t, std::size_t>, System> cache_;
};

/// Chain map γ_t : Q_{n+t} -> Q'_t lifting a map Q_n -> M' given by the
/// images of the generators of Q_n.
std::vector<AlgMatrix> lift_chain_map(const std::vector<Vec>& g, std::size_t n, const Resolution& source,
                                      const Resolution& target, std::size_t depth);

/// Class in Ext^n(M, S) for semisimple S = ⊕ S_v: one coordinate per slot of Q_n.
struct ExtClass {
    std::size_t degree = 0;
    Vec coords;
};

/// Basis vector spanning e_v M for a module with one-dimensional vertex parts.
std::size_t simple_index(const Representation& M, std::size_t v);
/// The generator images of the cochain Q_n -> S represented by a class.
std::vector<Vec> cochain_images(const Resolution& R, const ExtClass& g);
/// The value of h ∈ Hom(Q_m, S) on a map into Q_m, read generator-wise.
ExtClass compose_class(const Resolution& R, const ExtClass& h, const AlgMatrix& gamma, std::size_t degree);
/// h ∘ g := h γ_m on a resolution of semisimple S.
ExtClass yoneda(const Resolution& R, const ExtClass& h, const ExtClass& g);

/// dim of Hom between two representations, by a linear solve.
std::size_t hom_dimension(const Representation& M, const Representation& N);

} // namespace defext
