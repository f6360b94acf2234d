#include "defext/engine.hpp"

#include <algorithm>

#include "defext/error.hpp"

namespace defext {

// ---------------------------------------------------------------- Representation

Representation::Representation(AlgebraPtr alg, std::vector<Matrix> actions, bool verify)
    : alg_(std::move(alg)), actions_(std::move(actions))
{
    if (actions_.size() != alg_->dim())
        throw Error(ErrorKind::DimensionMismatch, "one action matrix per algebra basis element is required");
    dim_ = actions_.empty() ? 0 : actions_[0].rows();
    for (const auto& m : actions_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw Error(ErrorKind::DimensionMismatch, "action matrices must be square of equal size");
    if (!verify)
        return;
    const std::size_t n = alg_->dim();
    Matrix unit(dim_, dim_);
    for (std::size_t v = 0; v < alg_->vertex_count(); ++v)
        unit += actions_[alg_->frame(v)];
    if (!(unit == Matrix::identity(dim_)))
        throw Error(ErrorKind::NotAModule, "the unit does not act as the identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (alg_->right_vertex(i) != alg_->left_vertex(j)) {
                if (!(actions_[i] * actions_[j]).is_zero())
                    throw Error(ErrorKind::NotAModule,
                                "action fails on (" + alg_->label(i) + ", " + alg_->label(j) + ")");
                continue;
            }
            Matrix lhs = actions_[i] * actions_[j];
            Matrix rhs(dim_, dim_);
            for (const auto& [k, c] : alg_->product(i, j))
                rhs += actions_[k].scaled(c);
            if (!(lhs == rhs))
                throw Error(ErrorKind::NotAModule,
                            "action fails on (" + alg_->label(i) + ", " + alg_->label(j) + ")");
        }
}

Representation Representation::simple(AlgebraPtr alg, std::size_t v)
{
    std::vector<Matrix> acts(alg->dim(), Matrix(1, 1));
    acts[alg->frame(v)](0, 0) = Scalar(1);
    return Representation(std::move(alg), std::move(acts), false);
}

Representation Representation::semisimple(AlgebraPtr alg)
{
    const std::size_t nv = alg->vertex_count();
    std::vector<Matrix> acts(alg->dim(), Matrix(nv, nv));
    for (std::size_t v = 0; v < nv; ++v)
        acts[alg->frame(v)](v, v) = Scalar(1);
    return Representation(std::move(alg), std::move(acts), false);
}

Representation Representation::projective(AlgebraPtr alg, std::size_t v)
{
    FreeLayout lay(*alg, {v});
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < alg->dim(); ++a)
        acts.push_back(lay.action(a));
    return Representation(std::move(alg), std::move(acts), false);
}

Representation Representation::regular(AlgebraPtr alg)
{
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < alg->dim(); ++a)
        acts.push_back(alg->left_multiplication(a));
    return Representation(std::move(alg), std::move(acts), false);
}

Matrix Representation::action(const Element& a) const
{
    alg_->check_owner(a);
    Matrix m(dim_, dim_);
    for (const auto& [i, c] : a.terms)
        m += actions_[i].scaled(c);
    return m;
}

Vec Representation::act(const Element& a, const Vec& m) const
{
    alg_->check_owner(a);
    Vec r = zero_vec(dim_);
    for (const auto& [i, c] : a.terms)
        axpy(r, c, actions_[i].apply(m));
    return r;
}

std::vector<std::size_t> Representation::dim_vector() const
{
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < alg_->vertex_count(); ++v)
        d.push_back(rank(actions_[alg_->frame(v)]));
    return d;
}

// ---------------------------------------------------------------- FreeLayout

FreeLayout::FreeLayout(const StructuredAlgebra& alg, std::vector<std::size_t> slots)
    : alg_(&alg), slots_(std::move(slots))
{
    for (auto v : slots_) {
        offsets_.push_back(dim_);
        dim_ += alg.projective_basis(v).size();
    }
    position_.assign(alg.dim(), 0);
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
        const auto& pb = alg.projective_basis(v);
        for (std::size_t k = 0; k < pb.size(); ++k)
            position_[pb[k]] = k;
    }
}

std::size_t FreeLayout::slot_dim(std::size_t s) const { return alg_->projective_basis(slots_.at(s)).size(); }

std::size_t FreeLayout::index(std::size_t s, std::size_t b) const
{
    if (alg_->right_vertex(b) != slots_.at(s))
        throw Error(ErrorKind::DimensionMismatch, "basis element " + alg_->label(b) + " does not lie in slot " +
                                                      std::to_string(s));
    return offsets_[s] + position_[b];
}

std::pair<std::size_t, std::size_t> FreeLayout::basis_at(std::size_t k) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), k);
    std::size_t s = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    // skip empty slots sharing the offset
    while (s + 1 < offsets_.size() && offsets_[s + 1] == offsets_[s] && offsets_[s] <= k && slot_dim(s) == 0)
        ++s;
    return {s, alg_->projective_basis(slots_[s])[k - offsets_[s]]};
}

Vec FreeLayout::coordinates(const std::vector<const Element*>& components) const
{
    if (components.size() != slots_.size())
        throw Error(ErrorKind::DimensionMismatch, "free module element has the wrong number of components");
    Vec v = zero_vec(dim_);
    for (std::size_t s = 0; s < slots_.size(); ++s)
        for (const auto& [b, c] : components[s]->terms)
            v[index(s, b)] = c;
    return v;
}

Vec FreeLayout::row_coordinates(const AlgMatrix& m, std::size_t row) const
{
    if (m.cols != slots_.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix row does not match the free module");
    Vec v = zero_vec(dim_);
    for (std::size_t s = 0; s < slots_.size(); ++s)
        for (const auto& [b, c] : m.at(row, s).terms)
            v[index(s, b)] = c;
    return v;
}

std::vector<Element> FreeLayout::components(const Vec& v) const
{
    std::vector<Element> r;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        SparseVec terms;
        const auto& pb = alg_->projective_basis(slots_[s]);
        for (std::size_t k = 0; k < pb.size(); ++k)
            if (!v[offsets_[s] + k].is_zero())
                terms.emplace_back(pb[k], v[offsets_[s] + k]);
        std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        r.push_back(alg_->make(std::move(terms)));
    }
    return r;
}

Vec FreeLayout::act(std::size_t a, const Vec& v) const
{
    Vec r = zero_vec(dim_);
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const auto& pb = alg_->projective_basis(slots_[s]);
        for (std::size_t k = 0; k < pb.size(); ++k) {
            const Scalar& c = v[offsets_[s] + k];
            if (c.is_zero())
                continue;
            for (const auto& [b, d] : alg_->product(a, pb[k]))
                r[offsets_[s] + position_[b]] += c * d;
        }
    }
    return r;
}

Matrix FreeLayout::action(std::size_t a) const
{
    Matrix m(dim_, dim_);
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const auto& pb = alg_->projective_basis(slots_[s]);
        for (std::size_t k = 0; k < pb.size(); ++k)
            for (const auto& [b, d] : alg_->product(a, pb[k]))
                m(offsets_[s] + position_[b], offsets_[s] + k) = d;
    }
    return m;
}

Matrix linear_map(const StructuredAlgebra& alg, const AlgMatrix& B, const std::vector<std::size_t>& src,
                  const std::vector<std::size_t>& tgt)
{
    if (B.rows != src.size() || B.cols != tgt.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix does not match the free modules");
    FreeLayout S(alg, src);
    FreeLayout T(alg, tgt);
    Matrix m(T.dim(), S.dim());
    for (std::size_t s = 0; s < src.size(); ++s) {
        const auto& pb = alg.projective_basis(src[s]);
        for (std::size_t k = 0; k < pb.size(); ++k)
            for (std::size_t t = 0; t < tgt.size(); ++t)
                for (const auto& [b, c] : alg.multiply(SparseVec{{pb[k], Scalar(1)}}, B.at(s, t).terms))
                    m(T.index(t, b), S.offset(s) + k) += c;
    }
    return m;
}

// ---------------------------------------------------------------- Resolution

std::vector<std::size_t> Resolution::multiplicities(std::size_t i) const
{
    std::vector<std::size_t> m(alg->vertex_count(), 0);
    for (auto v : terms.at(i))
        ++m[v];
    return m;
}

Matrix Resolution::linear_augmentation() const
{
    FreeLayout L = layout(0);
    Matrix m(module->dim(), L.dim());
    for (std::size_t s = 0; s < L.slot_count(); ++s) {
        const auto& pb = alg->projective_basis(terms[0][s]);
        for (std::size_t k = 0; k < pb.size(); ++k)
            m.set_column(L.offset(s) + k, module->action(pb[k]).apply(augmentation[s]));
    }
    return m;
}

Matrix Resolution::linear_differential(std::size_t i) const
{
    return linear_map(*alg, differentials.at(i), terms.at(i), terms.at(i - 1));
}

std::vector<CoverGenerator> top_generators(const StructuredAlgebra& alg, const std::vector<Vec>& basis,
                                           std::size_t ambient,
                                           const std::function<Vec(std::size_t, const Vec&)>& act)
{
    std::vector<CoverGenerator> gens;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
        const std::size_t e = alg.frame(v);
        std::vector<Vec> ev;
        for (const auto& k : basis)
            ev.push_back(act(e, k));
        ev = echelon_basis(ev, ambient);
        if (ev.empty())
            continue;
        Subspace span(ambient);
        for (auto r : alg.radical())
            if (alg.left_vertex(r) == v)
                for (const auto& k : basis) {
                    Vec w = act(r, k);
                    if (!is_zero(w))
                        span.add(w);
                }
        for (const auto& w : ev)
            if (span.add(w))
                gens.push_back({v, w});
    }
    return gens;
}

std::vector<CoverGenerator> projective_cover(const Representation& M)
{
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < M.dim(); ++i) {
        Vec e = zero_vec(M.dim());
        e[i] = Scalar(1);
        basis.push_back(std::move(e));
    }
    return top_generators(*M.algebra(), basis, M.dim(),
                          [&](std::size_t a, const Vec& x) { return M.action(a).apply(x); });
}

Resolution minimal_resolution(std::shared_ptr<const Representation> M, std::size_t N)
{
    Resolution R;
    R.alg = M->algebra();
    R.module = M;
    const StructuredAlgebra& A = *R.alg;
    auto cover = projective_cover(*M);
    R.terms.emplace_back();
    for (auto& g : cover) {
        R.terms[0].push_back(g.vertex);
        R.augmentation.push_back(std::move(g.vector));
    }
    R.differentials.emplace_back();
    Matrix previous = R.linear_augmentation();
    for (std::size_t i = 1; i <= N; ++i) {
        FreeLayout lower = R.layout(i - 1);
        std::vector<Vec> kernel = nullspace(previous);
        auto gens = top_generators(A, kernel, lower.dim(),
                                   [&](std::size_t a, const Vec& x) { return lower.act(a, x); });
        std::vector<std::size_t> slots;
        AlgMatrix B = AlgMatrix::zero(A, gens.size(), lower.slot_count());
        for (std::size_t r = 0; r < gens.size(); ++r) {
            slots.push_back(gens[r].vertex);
            auto comps = lower.components(gens[r].vector);
            for (std::size_t c = 0; c < comps.size(); ++c)
                B.at(r, c) = std::move(comps[c]);
        }
        R.terms.push_back(std::move(slots));
        R.differentials.push_back(std::move(B));
        previous = R.linear_differential(i);
    }
    auto check = verify_resolution(R);
    if (!check.ok)
        throw Error(ErrorKind::VerificationFailed, check.failure);
    return R;
}

Resolution direct_sum(const std::vector<Resolution>& parts)
{
    if (parts.empty())
        throw Error(ErrorKind::DimensionMismatch, "direct sum of no resolutions");
    Resolution R;
    R.alg = parts[0].alg;
    const StructuredAlgebra& A = *R.alg;
    std::size_t N = parts[0].degree();
    std::size_t mdim = 0;
    for (const auto& p : parts) {
        if (p.alg->id() != R.alg->id())
            throw Error(ErrorKind::AlgebraMismatch, "direct sum over different algebras");
        N = std::min(N, p.degree());
        mdim += p.module->dim();
    }
    std::vector<Matrix> acts(A.dim(), Matrix(mdim, mdim));
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t a = 0; a < A.dim(); ++a)
            acts[a].set_block(off, off, p.module->action(a));
        for (const auto& g : p.augmentation) {
            Vec v = zero_vec(mdim);
            std::copy(g.begin(), g.end(), v.begin() + static_cast<std::ptrdiff_t>(off));
            R.augmentation.push_back(std::move(v));
        }
        off += p.module->dim();
    }
    R.module = std::make_shared<const Representation>(R.alg, std::move(acts), false);
    R.terms.resize(N + 1);
    R.differentials.resize(N + 1);
    for (std::size_t i = 0; i <= N; ++i)
        for (const auto& p : parts)
            R.terms[i].insert(R.terms[i].end(), p.terms[i].begin(), p.terms[i].end());
    for (std::size_t i = 1; i <= N; ++i) {
        AlgMatrix B = AlgMatrix::zero(A, R.terms[i].size(), R.terms[i - 1].size());
        std::size_t r0 = 0, c0 = 0;
        for (const auto& p : parts) {
            const AlgMatrix& P = p.differentials[i];
            for (std::size_t r = 0; r < P.rows; ++r)
                for (std::size_t c = 0; c < P.cols; ++c)
                    B.at(r0 + r, c0 + c) = P.at(r, c);
            r0 += p.terms[i].size();
            c0 += p.terms[i - 1].size();
        }
        R.differentials[i] = std::move(B);
    }
    return R;
}

ResolutionCheck verify_resolution(const Resolution& R)
{
    const StructuredAlgebra& A = *R.alg;
    Matrix aug = R.linear_augmentation();
    if (rank(aug) != R.module->dim())
        return {false, "augmentation is not surjective"};
    std::size_t image_rank = R.module->dim();
    Matrix previous = aug;
    for (std::size_t i = 1; i <= R.degree(); ++i) {
        const AlgMatrix& B = R.differentials[i];
        for (std::size_t r = 0; r < B.rows; ++r)
            for (std::size_t c = 0; c < B.cols; ++c) {
                const Element& e = B.at(r, c);
                for (const auto& [b, coeff] : e.terms) {
                    if (!A.is_radical(b))
                        return {false, "degree " + std::to_string(i) + ": entry outside the radical"};
                    if (A.left_vertex(b) != R.terms[i][r] || A.right_vertex(b) != R.terms[i - 1][c])
                        return {false, "degree " + std::to_string(i) + ": entry violates the idempotent frame"};
                }
            }
        if (i >= 2 && !multiply(A, B, R.differentials[i - 1]).is_zero())
            return {false, "B_" + std::to_string(i) + " B_" + std::to_string(i - 1) + " is not zero"};
        Matrix d = R.linear_differential(i);
        if (i == 1 && !(aug * d).is_zero())
            return {false, "augmentation does not kill the image of the first differential"};
        const std::size_t kernel = previous.cols() - image_rank;
        const std::size_t rk = rank(d);
        if (rk != kernel)
            return {false, "not exact at degree " + std::to_string(i - 1)};
        previous = std::move(d);
        image_rank = rk;
    }
    return {};
}

// ---------------------------------------------------------------- lifting

Lifter::Lifter(const Resolution& R) : R_(R) {}

const Lifter::System& Lifter::system(std::size_t t, std::size_t v) const
{
    auto key = std::make_pair(t, v);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    const StructuredAlgebra& A = *R_.alg;
    System sys;
    std::vector<Vec> columns;
    std::size_t rows = 0;
    if (t == 0) {
        rows = R_.module->dim();
        for (std::size_t u = 0; u < R_.terms[0].size(); ++u)
            for (auto b : A.corner_basis(v, R_.terms[0][u])) {
                sys.unknowns.emplace_back(u, b);
                columns.push_back(R_.module->action(b).apply(R_.augmentation[u]));
            }
    } else {
        FreeLayout lower = R_.layout(t - 1);
        rows = lower.dim();
        const AlgMatrix& B = R_.differentials.at(t);
        for (std::size_t u = 0; u < R_.terms[t].size(); ++u)
            for (auto b : A.corner_basis(v, R_.terms[t][u])) {
                sys.unknowns.emplace_back(u, b);
                Vec col = zero_vec(rows);
                for (std::size_t c = 0; c < B.cols; ++c)
                    for (const auto& [k, coeff] : A.multiply(SparseVec{{b, Scalar(1)}}, B.at(u, c).terms))
                        col[lower.index(c, k)] += coeff;
                columns.push_back(std::move(col));
            }
    }
    sys.solver = std::make_unique<LinearSolver>(Matrix::from_columns(columns, rows));
    return cache_.emplace(key, std::move(sys)).first->second;
}

std::optional<std::vector<Element>> Lifter::solve(std::size_t t, std::size_t v, const Vec& target) const
{
    const StructuredAlgebra& A = *R_.alg;
    const std::size_t slots = R_.terms.at(t).size();
    if (is_zero(target))
        return std::vector<Element>(slots, A.zero());
    const System& sys = system(t, v);
    if (sys.unknowns.empty())
        return std::nullopt;
    auto x = sys.solver->solve(target);
    if (!x)
        return std::nullopt;
    std::vector<SparseVec> parts(slots);
    for (std::size_t k = 0; k < sys.unknowns.size(); ++k)
        if (!(*x)[k].is_zero())
            parts[sys.unknowns[k].first].emplace_back(sys.unknowns[k].second, (*x)[k]);
    std::vector<Element> r;
    for (auto& p : parts) {
        std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        r.push_back(A.make(std::move(p)));
    }
    return r;
}

std::vector<AlgMatrix> lift_chain_map(const std::vector<Vec>& g, std::size_t n, const Resolution& source,
                                      const Resolution& target, std::size_t depth)
{
    const StructuredAlgebra& A = *source.alg;
    if (source.alg->id() != target.alg->id())
        throw Error(ErrorKind::AlgebraMismatch, "lifting between resolutions over different algebras");
    if (n + depth > source.degree() || depth > target.degree())
        throw Error(ErrorKind::DegreeMismatch, "resolutions are too short for the requested lifting");
    if (g.size() != source.terms[n].size())
        throw Error(ErrorKind::DimensionMismatch, "one image per generator is required");
    Lifter lifter(target);
    std::vector<AlgMatrix> gamma;
    for (std::size_t t = 0; t <= depth; ++t) {
        const auto& src = source.terms[n + t];
        AlgMatrix G = AlgMatrix::zero(A, src.size(), target.terms[t].size());
        std::optional<AlgMatrix> rhs;
        std::optional<FreeLayout> lower;
        if (t > 0) {
            rhs = multiply(A, source.differentials[n + t], gamma[t - 1]);
            lower.emplace(target.layout(t - 1));
        }
        for (std::size_t s = 0; s < src.size(); ++s) {
            Vec want = t == 0 ? g[s] : lower->row_coordinates(*rhs, s);
            auto y = lifter.solve(t, src[s], want);
            if (!y)
                throw Error(ErrorKind::LiftFailed, "no lift at degree " + std::to_string(t) + ", generator " +
                                                       std::to_string(s));
            for (std::size_t u = 0; u < y->size(); ++u)
                G.at(s, u) = std::move((*y)[u]);
        }
        gamma.push_back(std::move(G));
    }
    return gamma;
}

std::size_t simple_index(const Representation& M, std::size_t v)
{
    const Matrix& e = M.action(M.algebra()->frame(v));
    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < M.dim(); ++k)
        if (!e(k, k).is_zero()) {
            if (found)
                throw Error(ErrorKind::DimensionMismatch, "module is not semisimple with simple multiplicity one");
            found = k;
        }
    if (!found)
        throw Error(ErrorKind::DimensionMismatch, "module has no composition factor at vertex " +
                                                      M.algebra()->vertex_label(v));
    return *found;
}

std::vector<Vec> cochain_images(const Resolution& R, const ExtClass& g)
{
    const auto& slots = R.terms.at(g.degree);
    if (g.coords.size() != slots.size())
        throw Error(ErrorKind::DimensionMismatch, "class has " + std::to_string(g.coords.size()) +
                                                      " coordinates, degree " + std::to_string(g.degree) + " has " +
                                                      std::to_string(slots.size()) + " slots");
    std::vector<Vec> images;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        Vec v = zero_vec(R.module->dim());
        if (!g.coords[s].is_zero())
            v[simple_index(*R.module, slots[s])] = g.coords[s];
        images.push_back(std::move(v));
    }
    return images;
}

ExtClass compose_class(const Resolution& R, const ExtClass& h, const AlgMatrix& gamma, std::size_t degree)
{
    const StructuredAlgebra& A = *R.alg;
    const auto& tgt = R.terms.at(h.degree);
    if (gamma.cols != tgt.size() || h.coords.size() != tgt.size())
        throw Error(ErrorKind::DimensionMismatch, "composition with a class of the wrong shape");
    ExtClass r{degree, zero_vec(gamma.rows)};
    for (std::size_t s = 0; s < gamma.rows; ++s)
        for (std::size_t u = 0; u < tgt.size(); ++u)
            if (!h.coords[u].is_zero())
                r.coords[s] += h.coords[u] * gamma.at(s, u).coeff(A.frame(tgt[u]));
    return r;
}

ExtClass yoneda(const Resolution& R, const ExtClass& h, const ExtClass& g)
{
    if (g.degree + h.degree > R.degree())
        throw Error(ErrorKind::DegreeMismatch, "resolution too short for a product of degree " +
                                                   std::to_string(g.degree + h.degree));
    auto gamma = lift_chain_map(cochain_images(R, g), g.degree, R, R, h.degree);
    return compose_class(R, h, gamma.back(), g.degree + h.degree);
}

std::size_t hom_dimension(const Representation& M, const Representation& N)
{
    if (M.algebra()->id() != N.algebra()->id())
        throw Error(ErrorKind::AlgebraMismatch, "hom between modules over different algebras");
    const std::size_t m = M.dim(), n = N.dim();
    const std::size_t unknowns = m * n; // X(i, j) at i * m + j, X : M -> N
    if (unknowns == 0)
        return 0;
    std::vector<Vec> eqs;
    for (std::size_t a = 0; a < M.algebra()->dim(); ++a) {
        const Matrix& Ma = M.action(a);
        const Matrix& Na = N.action(a);
        // (X Ma - Na X)(i, j) = 0
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Vec row = zero_vec(unknowns);
                for (std::size_t k = 0; k < m; ++k)
                    row[i * m + k] += Ma(k, j);
                for (std::size_t k = 0; k < n; ++k)
                    row[k * m + j] -= Na(i, k);
                if (!is_zero(row))
                    eqs.push_back(std::move(row));
            }
    }
    if (eqs.empty())
        return unknowns;
    return unknowns - rank(Matrix::from_rows(eqs, unknowns));
}

} // namespace defext
