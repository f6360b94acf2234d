#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "defext/deformation.hpp"
#include "defext/engine.hpp"
#include "defext/hochschild.hpp"

namespace defext {

/// Condition (∗) data for one resolution over A.
struct StarData {
    std::shared_ptr<const Resolution> base;
    bool star = false;
    /// Nonzero value of δ_0 α_1 δ_2 when the condition fails.
    std::string witness;
    /// C[i] for i >= 1 (C[1] = 0); C[0] is empty.
    std::vector<AlgMatrix> C;
    /// alpha[i] : Q_i -> Q_{i-1} as a linear map, i >= 1; alpha[0] is empty.
    std::vector<Matrix> alpha;

    std::size_t degree() const { return alpha.empty() ? 0 : alpha.size() - 1; }
};

/// α_1 from f~([x] ⊗ B_1) E_0 and the verdict δ_0 α_1 δ_2 = 0.
StarData check_star(std::shared_ptr<const Resolution> base, const Cochain2& f);

/// C_2..C_N from C_{i+1} B_i = E f~(B_{i+1} ⊗ B_i) E - B_{i+1} C_i; throws
/// StarNotCertified without (∗) and NoSolution if a row has no solution.
void solve_C(StarData& star, const Cochain2& f);

/// α_i = (-1)^{i+1} (f~([x] ⊗ B_i) E_{i-1} - [x] C_i); conditions (i) and
/// (ii) are verified, ConditionFailed otherwise.
void build_alphas(StarData& star, const Cochain2& f);

/// check_star, solve_C and build_alphas through the degree of the resolution.
StarData prepare_star(std::shared_ptr<const Resolution> base, const Cochain2& f);

/// Linear map of α_i for given B_i, C_i.
Matrix alpha_map(const Cochain2& f, const Resolution& R, const AlgMatrix& C, std::size_t i);

/// Where an A_f slot of the explicit complex comes from: block j, base slot s.
struct SlotOrigin {
    std::size_t block;
    std::size_t slot;
};

/// The explicit complex ⊕_{i<=m} Q̂_i as a resolution over A_f.
struct DeformedComplex {
    std::shared_ptr<const StarData> star;
    Resolution res;
    std::vector<std::vector<SlotOrigin>> origin;
};

/// Throws VerificationFailed naming the degree and the failed invariant.
DeformedComplex build_deformed_complex(const DeformedAlgebra& D, std::shared_ptr<const StarData> star,
                                       std::size_t N);

/// u_m and v_m as linear maps ⊕_{i<=m} Q_i -> ⊕_{i<m} Q_i.
Matrix u_matrix(const Resolution& base, std::size_t m);
Matrix v_matrix(const StarData& star, std::size_t m);

/// Permutation from realized (M_0, M_1) coordinates of (P, P, Id, f_P) to the
/// engine's coordinates of the free A_f-module on the same slots.
std::vector<std::size_t> hat_coordinates(const StructuredAlgebra& base, const std::vector<std::size_t>& slots);

/// (u_m, v_m, u_m) realized in engine coordinates.
Matrix realized_differential(const DeformedAlgebra& D, const StarData& star, std::size_t m);

struct ComparisonRow {
    std::size_t degree;
    std::vector<std::size_t> explicit_mult;
    std::vector<std::size_t> generic_mult;
};
struct ComparisonReport {
    bool match = true;
    std::vector<ComparisonRow> rows;
};
/// Multiplicities of the explicit complex against the engine's resolution of (0, M, 0, 0).
ComparisonReport compare_with_generic(const DeformedAlgebra& D, const DeformedComplex& C);
/// As above, throwing Mismatch(degree, expected, got) on disagreement.
void require_match(const ComparisonReport& r);

/// dim Ext^n_{A_f}(M, S) for n <= N together with the partial sums of the base dimensions.
struct ExtDims {
    std::vector<std::size_t> deformed;
    std::vector<std::size_t> partial_sums;
    bool identity_holds = true;
};
ExtDims ext_dims_deformed(const Resolution& base, const Resolution& deformed);

/// Every α_i maps into rad Q_{i-1}.
bool alpha_images_radical(const StarData& star);

} // namespace defext
