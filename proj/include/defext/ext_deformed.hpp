#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "defext/deformed_resolution.hpp"

namespace defext {

/// a^k_{r,i}; zero outside 0 <= i <= r, k >= 0.
std::int64_t a_coeff(long k, long r, long i);

/// ĝ = Σ g_k x^{n-k}; comps[k] holds one coordinate per slot of Q_k.
struct DeformedExtClass {
    std::size_t degree = 0;
    std::vector<Vec> comps;

    bool operator==(const DeformedExtClass& o) const { return degree == o.degree && comps == o.comps; }
};

enum class ProductMethod { Formula, Structured, Generic };

/// Blocks of a lifting family, each a linear map Q_s -> Q_t.
struct LiftingFamily {
    std::size_t n = 0;
    /// components g_0..g_n of the lifted class
    std::vector<Vec> g;
    std::size_t depth = 0;
    /// gamma[m], beta[m] : ⊕_{s<=n+m} Q_s -> ⊕_{t<=m} Q_t
    std::vector<Matrix> gamma;
    std::vector<Matrix> beta;
    std::vector<Matrix> phi;
    std::vector<Matrix> varphi;
};

/// Ext over A_f for S = ⊕ S_v through the explicit complex of a (∗)-certified
/// resolution of S over A.
class DeformedExt {
public:
    DeformedExt(const DeformedAlgebra& D, std::shared_ptr<const StarData> star, std::size_t N);

    const DeformedAlgebra& deformation() const { return D_; }
    const Resolution& base() const { return *star_->base; }
    const StarData& star() const { return *star_; }
    const DeformedComplex& complex() const { return X_; }
    std::size_t max_degree() const { return N_; }

    /// Canonical basis of Ext^n: unit vectors over (k, slot) in order.
    std::vector<DeformedExtClass> basis(std::size_t n) const;
    std::size_t dim(std::size_t n) const;
    DeformedExtClass zero(std::size_t n) const;
    /// Degree-0 class with every coordinate 1 (the identity of S).
    DeformedExtClass unit() const;
    /// The class x: degree 1 with g_0 the identity and g_1 = 0.
    DeformedExtClass x_class() const;
    void check_shape(const DeformedExtClass& g) const;

    ExtClass to_complex(const DeformedExtClass& g) const;
    DeformedExtClass from_complex(const ExtClass& c) const;

    /// Cochain Q_k -> S as a linear map (dim S x dim Q_k).
    Matrix cochain_matrix(std::size_t k, const Vec& coords) const;
    /// Generator values of an A-linear map Q_k -> S; throws
    /// NotALinearRepresentative unless the map is A-linear.
    Vec read_cochain(std::size_t k, const Matrix& m) const;

    /// Base product h ⋆ g over A for classes of degree i and s.
    Vec star_product(std::size_t i, const Vec& h, std::size_t s, const Vec& g) const;

    /// Closed cocycle representative of ĝ restricted to Q_s at level m, as a map Q_s -> S.
    Matrix closed_cochain_matrix(const DeformedExtClass& g, std::size_t s, std::size_t m) const;
    /// Its generator values, checked A-linear.
    Vec closed_representative(const DeformedExtClass& g, std::size_t s, std::size_t m) const;

    DeformedExtClass product_formula(const DeformedExtClass& h, const DeformedExtClass& g) const;

    /// Generic lifting Γ_0..Γ_depth of ĝ over the explicit complex.
    std::vector<AlgMatrix> generic_lifting(const DeformedExtClass& g, std::size_t depth) const;
    DeformedExtClass product_generic(const DeformedExtClass& h, const DeformedExtClass& g,
                                     const std::vector<AlgMatrix>& gamma) const;

    /// Blocks of the generic lifting, block identities (a)-(g) verified, φ/ϕ
    /// assembled and re-verified; throws EquationFailed.
    LiftingFamily structured_lifting(const DeformedExtClass& g, std::size_t depth) const;
    /// Checks (a)-(g) for the given γ/β (or φ/ϕ) blocks; empty string if all hold.
    std::string lifting_identity_failure(const LiftingFamily& fam, bool structured) const;
    DeformedExtClass product_structured(const DeformedExtClass& h, const DeformedExtClass& g,
                                        const LiftingFamily& fam) const;

    DeformedExtClass product(const DeformedExtClass& h, const DeformedExtClass& g, ProductMethod method) const;

    /// Block (t, s) of a map ⊕_{s<=n+m} Q_s -> ⊕_{t<=m} Q_t.
    Matrix block(const Matrix& m, std::size_t t, std::size_t s) const;

private:
    std::size_t offset(std::size_t k) const { return offsets_.at(k); }
    const std::vector<std::vector<Vec>>& star_table(std::size_t s, std::size_t u) const;

    DeformedAlgebra D_;
    std::shared_ptr<const StarData> star_;
    DeformedComplex X_;
    std::size_t N_;
    std::vector<std::size_t> offsets_; // start of Q_k inside ⊕ Q
    std::vector<Matrix> delta_;        // delta_[0] = augmentation
    // (s, u) -> [i][a] = e_a ⋆ e_u
    mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Vec>>> table_;
};

struct CorollaryReport {
    bool hypothesis = false;
    /// index of the first α_i leaving the radical, 0 if none
    std::size_t failing_alpha = 0;
    bool products_match = true;
    std::size_t pairs_checked = 0;
    std::string mismatch;
};
/// Radical-image hypothesis and, if it holds, the twisted tensor product formula on basis pairs.
CorollaryReport corollary_check(const DeformedExt& E, std::size_t N);

/// Structure constants of Ext^{<=N}: products[(m, a, n, b)] = e_a ∘ e_b with e_a of degree m.
struct ExtTable {
    std::size_t N = 0;
    std::vector<std::size_t> dims;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, Vec> products;
    bool associative = true;
    std::size_t triples_checked = 0;
    std::string failure;
};
ExtTable ext_table(const DeformedExt& E, std::size_t N, ProductMethod method = ProductMethod::Formula);

/// Flattened coordinates of a class over its canonical basis, and back.
Vec flatten(const DeformedExtClass& c);
DeformedExtClass unflatten(const DeformedExt& E, std::size_t degree, const Vec& v);

struct AgreementReport {
    bool agree = true;
    std::size_t pairs = 0;
    std::string mismatch;
};
/// Formula, structured and generic products on all basis pairs with n + m <= N.
AgreementReport triple_agreement(const DeformedExt& E, std::size_t N);

} // namespace defext
