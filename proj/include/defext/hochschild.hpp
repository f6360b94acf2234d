#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "defext/path_algebra.hpp"
#include "defext/structured.hpp"

namespace defext {

/// f(a'w1 (x) w2b') = a' value b' whenever the pattern w = w1w2 straddles the cut.
struct PatternRule {
    Path pattern;
    PathPoly value;
};

/// f(left (x) right) = value on a pair of basis elements.
struct EntryRule {
    std::size_t left = 0;
    std::size_t right = 0;
    Element value;
};

/// A bilinear map A (x) A -> A materialized on the basis.
class Cochain2 {
public:
    /// Throws AmbiguousPattern if two straddling evaluations disagree, Semantic
    /// if a pattern value is not parallel to its pattern.
    static Cochain2 materialize(const QuotientAlgebra& A, const std::vector<PatternRule>& rules,
                                const std::vector<EntryRule>& entries);
    static Cochain2 zero(AlgebraPtr A);
    /// table[i * dim + j] = f(b_i (x) b_j)
    static Cochain2 from_table(AlgebraPtr A, std::vector<SparseVec> table);

    const AlgebraPtr& algebra() const { return alg_; }
    const SparseVec& value(std::size_t i, std::size_t j) const { return table_[i * alg_->dim() + j]; }
    Element eval(const Element& a, const Element& b) const;
    SparseVec eval(const SparseVec& a, const SparseVec& b) const;
    bool is_zero() const;
    /// f(e_v (x) -) = f(- (x) e_v) = 0 for every frame idempotent.
    bool is_normalized() const;

private:
    AlgebraPtr alg_;
    std::vector<SparseVec> table_;
};

struct CocycleViolation {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    Element residual;
};

struct CocycleReport {
    bool pass = true;
    std::vector<CocycleViolation> violations;
};

/// a f(b(x)c) - f(ab(x)c) + f(a(x)bc) - f(a(x)b) c on every basis triple.
CocycleReport check_cocycle(const Cochain2& f);

/// f~(B (x) B')_{ij} = sum_l f(b_il (x) b'_lj).
AlgMatrix tilde_f(const Cochain2& f, const AlgMatrix& B, const AlgMatrix& Bp);

} // namespace defext
