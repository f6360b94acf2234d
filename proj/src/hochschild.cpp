#include "defext/hochschild.hpp"

#include <optional>

#include "defext/error.hpp"

namespace defext {

namespace {

bool ends_with(const Path& p, const std::vector<std::size_t>& w)
{
    return p.arrows.size() >= w.size() && std::equal(w.begin(), w.end(), p.arrows.end() - static_cast<std::ptrdiff_t>(w.size()));
}

bool starts_with(const Path& p, const std::vector<std::size_t>& w)
{
    return p.arrows.size() >= w.size() && std::equal(w.begin(), w.end(), p.arrows.begin());
}

} // namespace

Cochain2 Cochain2::materialize(const QuotientAlgebra& A, const std::vector<PatternRule>& rules,
                               const std::vector<EntryRule>& entries)
{
    const Quiver& q = A.quiver();
    for (const auto& r : rules) {
        if (r.pattern.length() < 2)
            throw Error(ErrorKind::Semantic, "pattern '" + path_to_string(q, r.pattern) +
                                                 "' must have length at least 2 to straddle a product");
        for (const auto& [p, c] : r.value)
            if (p.source != r.pattern.source || p.target != r.pattern.target)
                throw Error(ErrorKind::Semantic,
                            "value of pattern '" + path_to_string(q, r.pattern) + "' is not parallel to it");
    }
    Cochain2 f;
    f.alg_ = A.algebra();
    const std::size_t n = A.dim();
    f.table_.assign(n * n, {});
    const auto& basis = A.basis();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Path& p = basis[i];
            const Path& qq = basis[j];
            if (p.target != qq.source)
                continue;
            std::optional<Element> found;
            std::string found_from;
            for (const auto& r : rules) {
                const auto& w = r.pattern.arrows;
                for (std::size_t cut = 1; cut < w.size(); ++cut) {
                    std::vector<std::size_t> w1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
                    std::vector<std::size_t> w2(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
                    if (!ends_with(p, w1) || !starts_with(qq, w2))
                        continue;
                    Path left{p.source, r.pattern.source,
                              std::vector<std::size_t>(p.arrows.begin(), p.arrows.end() - static_cast<std::ptrdiff_t>(cut))};
                    Path right{r.pattern.target, qq.target,
                               std::vector<std::size_t>(qq.arrows.begin() + static_cast<std::ptrdiff_t>(w2.size()),
                                                        qq.arrows.end())};
                    Element v = A.reduce(poly_sandwich(left, r.value, right));
                    if (found && !(*found == v))
                        throw Error(ErrorKind::AmbiguousPattern,
                                    "patterns give different values on (" + path_to_string(q, p) + ", " +
                                        path_to_string(q, qq) + "): " + A.format(*found) + " from '" + found_from +
                                        "' and " + A.format(v) + " from '" + path_to_string(q, r.pattern) + "'");
                    found = v;
                    found_from = path_to_string(q, r.pattern);
                }
            }
            if (found)
                f.table_[i * n + j] = found->terms;
        }
    for (const auto& e : entries) {
        if (e.left >= n || e.right >= n)
            throw Error(ErrorKind::Semantic, "cochain entry refers to a non-basis element");
        A.algebra()->check_owner(e.value);
        f.table_[e.left * n + e.right] = e.value.terms;
    }
    return f;
}

Cochain2 Cochain2::zero(AlgebraPtr A)
{
    Cochain2 f;
    f.table_.assign(A->dim() * A->dim(), {});
    f.alg_ = std::move(A);
    return f;
}

Cochain2 Cochain2::from_table(AlgebraPtr A, std::vector<SparseVec> table)
{
    if (table.size() != A->dim() * A->dim())
        throw Error(ErrorKind::DimensionMismatch, "cochain table has the wrong size");
    Cochain2 f;
    f.alg_ = std::move(A);
    f.table_ = std::move(table);
    return f;
}

SparseVec Cochain2::eval(const SparseVec& a, const SparseVec& b) const
{
    SparseVec r;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b)
            r = sparse_axpy(r, ci * cj, value(i, j));
    return r;
}

Element Cochain2::eval(const Element& a, const Element& b) const
{
    alg_->check_owner(a);
    alg_->check_owner(b);
    return alg_->make(eval(a.terms, b.terms));
}

bool Cochain2::is_zero() const
{
    for (const auto& v : table_)
        if (!v.empty())
            return false;
    return true;
}

bool Cochain2::is_normalized() const
{
    for (std::size_t v = 0; v < alg_->vertex_count(); ++v)
        for (std::size_t j = 0; j < alg_->dim(); ++j)
            if (!value(alg_->frame(v), j).empty() || !value(j, alg_->frame(v)).empty())
                return false;
    return true;
}

CocycleReport check_cocycle(const Cochain2& f)
{
    const StructuredAlgebra& A = *f.algebra();
    const std::size_t n = A.dim();
    CocycleReport rep;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const SparseVec& ab = A.product(a, b);
            const SparseVec& fab = f.value(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                SparseVec r = A.multiply(SparseVec{{a, Scalar(1)}}, f.value(b, c));
                r = sparse_axpy(r, Scalar(-1), f.eval(ab, SparseVec{{c, Scalar(1)}}));
                r = sparse_axpy(r, Scalar(1), f.eval(SparseVec{{a, Scalar(1)}}, A.product(b, c)));
                r = sparse_axpy(r, Scalar(-1), A.multiply(fab, SparseVec{{c, Scalar(1)}}));
                if (!r.empty()) {
                    rep.pass = false;
                    rep.violations.push_back({a, b, c, A.make(std::move(r))});
                }
            }
        }
    return rep;
}

AlgMatrix tilde_f(const Cochain2& f, const AlgMatrix& B, const AlgMatrix& Bp)
{
    if (B.cols != Bp.rows)
        throw Error(ErrorKind::DimensionMismatch, "tilde_f: inner dimensions " + std::to_string(B.cols) + " and " +
                                                      std::to_string(Bp.rows) + " differ");
    const StructuredAlgebra& A = *f.algebra();
    AlgMatrix R = AlgMatrix::zero(A, B.rows, Bp.cols);
    for (std::size_t i = 0; i < B.rows; ++i)
        for (std::size_t j = 0; j < Bp.cols; ++j) {
            SparseVec s;
            for (std::size_t l = 0; l < B.cols; ++l) {
                A.check_owner(B.at(i, l));
                A.check_owner(Bp.at(l, j));
                s = sparse_axpy(s, Scalar(1), f.eval(B.at(i, l).terms, Bp.at(l, j).terms));
            }
            R.at(i, j) = A.make(std::move(s));
        }
    return R;
}

} // namespace defext
