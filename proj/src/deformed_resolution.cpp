#include "defext/deformed_resolution.hpp"

#include "defext/error.hpp"

namespace defext {

namespace {

std::string deg(std::size_t i) { return std::to_string(i); }

// E X E' : each entry sandwiched by the frame idempotents of its row and column.
AlgMatrix sandwich(const StructuredAlgebra& A, const AlgMatrix& X, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols)
{
    AlgMatrix R = AlgMatrix::zero(A, X.rows, X.cols);
    for (std::size_t r = 0; r < X.rows; ++r)
        for (std::size_t c = 0; c < X.cols; ++c)
            R.at(r, c) = A.multiply(A.multiply(A.idempotent(rows[r]), X.at(r, c)), A.idempotent(cols[c]));
    return R;
}

} // namespace

Matrix alpha_map(const Cochain2& f, const Resolution& R, const AlgMatrix& C, std::size_t i)
{
    const StructuredAlgebra& A = *R.alg;
    const auto& src = R.terms.at(i);
    const auto& tgt = R.terms.at(i - 1);
    const AlgMatrix& B = R.differentials.at(i);
    FreeLayout S(A, src);
    FreeLayout T(A, tgt);
    Matrix m(T.dim(), S.dim());
    const Scalar sg = sign(static_cast<long>(i) + 1);
    for (std::size_t s = 0; s < src.size(); ++s) {
        const auto& pb = A.projective_basis(src[s]);
        for (std::size_t k = 0; k < pb.size(); ++k) {
            const SparseVec b{{pb[k], Scalar(1)}};
            for (std::size_t t = 0; t < tgt.size(); ++t) {
                SparseVec val = A.multiply(f.eval(b, B.at(s, t).terms), SparseVec{{A.frame(tgt[t]), Scalar(1)}});
                val = sparse_axpy(val, Scalar(-1), A.multiply(b, C.at(s, t).terms));
                for (const auto& [x, c] : val)
                    m(T.index(t, x), S.offset(s) + k) += sg * c;
            }
        }
    }
    return m;
}

StarData check_star(std::shared_ptr<const Resolution> base, const Cochain2& f)
{
    if (base->alg->id() != f.algebra()->id())
        throw Error(ErrorKind::AlgebraMismatch, "cocycle and resolution live over different algebras");
    if (base->degree() < 2)
        throw Error(ErrorKind::DegreeMismatch, "condition (*) needs the resolution through degree 2");
    const StructuredAlgebra& A = *base->alg;
    StarData d;
    d.base = base;
    d.C.resize(2);
    d.C[1] = AlgMatrix::zero(A, base->terms[1].size(), base->terms[0].size());
    d.alpha.resize(2);
    d.alpha[1] = alpha_map(f, *base, d.C[1], 1);
    Matrix w = base->linear_augmentation() * d.alpha[1] * base->linear_differential(2);
    d.star = w.is_zero();
    if (!d.star) {
        FreeLayout L = base->layout(2);
        for (std::size_t c = 0; c < w.cols() && d.witness.empty(); ++c)
            if (!is_zero(w.column(c))) {
                auto [s, b] = L.basis_at(c);
                d.witness = "generator " + deg(s) + " of Q_2 at basis element " + A.label(b) + " maps to a nonzero element";
            }
    }
    return d;
}

void solve_C(StarData& star, const Cochain2& f)
{
    if (!star.star)
        throw Error(ErrorKind::StarNotCertified, "condition (*) fails: " + star.witness);
    const Resolution& R = *star.base;
    const StructuredAlgebra& A = *R.alg;
    Lifter lifter(R);
    star.C.resize(R.degree() + 1);
    for (std::size_t i = 1; i + 1 <= R.degree(); ++i) {
        const AlgMatrix& Bn = R.differentials[i + 1];
        const AlgMatrix& B = R.differentials[i];
        AlgMatrix rhs = sandwich(A, tilde_f(f, Bn, B), R.terms[i + 1], R.terms[i - 1]);
        rhs = add(A, rhs, scale(A, Scalar(-1), multiply(A, Bn, star.C[i])));
        FreeLayout lower = R.layout(i - 1);
        AlgMatrix C = AlgMatrix::zero(A, R.terms[i + 1].size(), R.terms[i].size());
        for (std::size_t s = 0; s < Bn.rows; ++s) {
            auto y = lifter.solve(i, R.terms[i + 1][s], lower.row_coordinates(rhs, s));
            if (!y)
                throw Error(ErrorKind::NoSolution, "no row " + deg(s) + " of C_" + deg(i + 1));
            for (std::size_t u = 0; u < y->size(); ++u)
                C.at(s, u) = std::move((*y)[u]);
        }
        star.C[i + 1] = std::move(C);
    }
    for (std::size_t i = 2; i <= R.degree(); ++i) {
        AlgMatrix lhs = sandwich(A, tilde_f(f, R.differentials[i], R.differentials[i - 1]), R.terms[i],
                                 R.terms[i - 2]);
        AlgMatrix rhs = add(A, multiply(A, star.C[i], R.differentials[i - 1]),
                            multiply(A, R.differentials[i], star.C[i - 1]));
        if (!add(A, lhs, scale(A, Scalar(-1), rhs)).is_zero())
            throw Error(ErrorKind::ConditionFailed, "C_" + deg(i) + " violates its defining identity");
    }
}

void build_alphas(StarData& star, const Cochain2& f)
{
    const Resolution& R = *star.base;
    const StructuredAlgebra& A = *R.alg;
    const std::size_t N = R.degree();
    if (star.C.size() != N + 1)
        throw Error(ErrorKind::DegreeMismatch, "C is not available through degree " + deg(N));
    star.alpha.resize(N + 1);
    for (std::size_t i = 1; i <= N; ++i)
        star.alpha[i] = alpha_map(f, R, star.C[i], i);
    std::vector<Matrix> delta(N + 1);
    for (std::size_t i = 1; i <= N; ++i)
        delta[i] = R.linear_differential(i);
    for (std::size_t i = 1; i <= N; ++i) {
        const Scalar sg = sign(static_cast<long>(i) + 1);
        for (std::size_t a = 0; a < A.dim(); ++a) {
            Matrix La = R.layout(i).action(a);
            Matrix La1 = R.layout(i - 1).action(a);
            Matrix Fa = free_cochain_action(f, R.terms[i], a);
            Matrix Fa1 = free_cochain_action(f, R.terms[i - 1], a);
            Matrix lhs = star.alpha[i] * La - La1 * star.alpha[i];
            Matrix rhs = (Fa1 * delta[i] - delta[i] * Fa).scaled(sg);
            if (!(lhs == rhs))
                throw Error(ErrorKind::ConditionFailed,
                            "alpha_" + deg(i) + " fails the twisted linearity at " + A.label(a));
        }
    }
    for (std::size_t i = 1; i + 1 <= N; ++i)
        if (!(star.alpha[i] * delta[i + 1] == delta[i] * star.alpha[i + 1]))
            throw Error(ErrorKind::ConditionFailed,
                        "alpha_" + deg(i) + " delta_" + deg(i + 1) + " differs from delta_" + deg(i) + " alpha_" +
                            deg(i + 1));
}

StarData prepare_star(std::shared_ptr<const Resolution> base, const Cochain2& f)
{
    StarData d = check_star(std::move(base), f);
    solve_C(d, f);
    build_alphas(d, f);
    return d;
}

bool alpha_images_radical(const StarData& star)
{
    const Resolution& R = *star.base;
    const StructuredAlgebra& A = *R.alg;
    for (std::size_t i = 1; i < star.alpha.size(); ++i) {
        FreeLayout L = R.layout(i - 1);
        const Matrix& m = star.alpha[i];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (A.is_radical(L.basis_at(r).second))
                continue;
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(r, c).is_zero())
                    return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- explicit complex

namespace {

std::vector<std::size_t> concat_slots(const Resolution& R, std::size_t m)
{
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j <= m; ++j)
        v.insert(v.end(), R.terms[j].begin(), R.terms[j].end());
    return v;
}

std::vector<std::size_t> block_offsets(const Resolution& R, std::size_t m)
{
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (std::size_t j = 0; j <= m; ++j) {
        off.push_back(o);
        o += R.layout(j).dim();
    }
    off.push_back(o);
    return off;
}

} // namespace

Matrix u_matrix(const Resolution& base, std::size_t m)
{
    auto src = block_offsets(base, m);
    Matrix u(m == 0 ? 0 : src[m], src[m + 1]);
    for (std::size_t j = 1; j <= m; ++j)
        u.set_block(src[j - 1], src[j], base.linear_differential(j));
    return u;
}

Matrix v_matrix(const StarData& star, std::size_t m)
{
    const Resolution& R = *star.base;
    auto src = block_offsets(R, m);
    Matrix v(m == 0 ? 0 : src[m], src[m + 1]);
    for (std::size_t j = 0; j + 1 <= m; ++j) {
        const Scalar sg = sign(static_cast<long>(j));
        v.set_block(src[j], src[j], Matrix::identity(src[j + 1] - src[j]).scaled(sg));
        v.set_block(src[j], src[j + 1], star.alpha.at(j + 1).scaled(sg));
    }
    return v;
}

std::vector<std::size_t> hat_coordinates(const StructuredAlgebra& base, const std::vector<std::size_t>& slots)
{
    FreeLayout L(base, slots);
    std::vector<std::size_t> perm(2 * L.dim());
    for (std::size_t s = 0; s < slots.size(); ++s)
        for (std::size_t k = 0; k < L.slot_dim(s); ++k) {
            perm[L.offset(s) + k] = 2 * L.offset(s) + k;
            perm[L.dim() + L.offset(s) + k] = 2 * L.offset(s) + L.slot_dim(s) + k;
        }
    return perm;
}

Matrix realized_differential(const DeformedAlgebra& D, const StarData& star, std::size_t m)
{
    const Resolution& R = *star.base;
    Matrix u = u_matrix(R, m);
    Matrix v = v_matrix(star, m);
    auto src = concat_slots(R, m);
    std::vector<std::size_t> tgt;
    if (m > 0)
        tgt = concat_slots(R, m - 1);
    Matrix U = realize_morphism(D, hat_free(D, src), hat_free(D, tgt), {u, v, u});
    auto pc = hat_coordinates(*D.base(), src);
    auto pr = hat_coordinates(*D.base(), tgt);
    Matrix E(U.rows(), U.cols());
    for (std::size_t r = 0; r < U.rows(); ++r)
        for (std::size_t c = 0; c < U.cols(); ++c)
            E(pr[r], pc[c]) = U(r, c);
    return E;
}

DeformedComplex build_deformed_complex(const DeformedAlgebra& D, std::shared_ptr<const StarData> star, std::size_t N)
{
    const Resolution& R = *star->base;
    if (R.alg->id() != D.base()->id())
        throw Error(ErrorKind::AlgebraMismatch, "resolution and deformation live over different algebras");
    if (N > star->degree() || N > R.degree())
        throw Error(ErrorKind::DegreeMismatch, "alpha is available only through degree " + deg(star->degree()));
    const StructuredAlgebra& A = *R.alg;
    const StructuredAlgebra& Af = *D.algebra();
    DeformedComplex out;
    out.star = star;
    Resolution& X = out.res;
    X.alg = D.algebra();
    X.module = std::make_shared<const Representation>(realize_tuple(D, zero_extension(D, R.module)));
    X.augmentation = R.augmentation;
    X.differentials.emplace_back();
    for (std::size_t m = 0; m <= N; ++m) {
        std::vector<std::size_t> slots;
        std::vector<SlotOrigin> origin;
        for (std::size_t j = 0; j <= m; ++j)
            for (std::size_t s = 0; s < R.terms[j].size(); ++s) {
                slots.push_back(R.terms[j][s]);
                origin.push_back({j, s});
            }
        X.terms.push_back(std::move(slots));
        out.origin.push_back(std::move(origin));
    }
    for (std::size_t m = 1; m <= N; ++m) {
        // column index of (block, slot) in degree m - 1
        std::vector<std::size_t> first(m + 1, 0);
        for (std::size_t j = 1; j <= m; ++j)
            first[j] = first[j - 1] + R.terms[j - 1].size();
        AlgMatrix B = AlgMatrix::zero(Af, X.terms[m].size(), X.terms[m - 1].size());
        for (std::size_t r = 0; r < out.origin[m].size(); ++r) {
            const auto [j, s] = out.origin[m][r];
            if (j >= 1) {
                const AlgMatrix& Bj = R.differentials[j];
                FreeLayout L = R.layout(j - 1);
                FreeLayout S = R.layout(j);
                Vec gen = zero_vec(S.dim());
                gen[S.index(s, A.frame(R.terms[j][s]))] = Scalar(1);
                auto comps = L.components(star->alpha[j].apply(gen));
                const Scalar sg = sign(static_cast<long>(j) - 1);
                for (std::size_t u = 0; u < Bj.cols; ++u)
                    B.at(r, first[j - 1] + u) =
                        Af.add(D.plain(Bj.at(s, u)), D.tagged(A.scale(sg, comps[u])));
            }
            if (j + 1 <= m)
                B.at(r, first[j] + s) = D.tagged(A.scale(sign(static_cast<long>(j)), A.idempotent(R.terms[j][s])));
        }
        X.differentials.push_back(std::move(B));
    }
    auto check = verify_resolution(X);
    if (!check.ok)
        throw Error(ErrorKind::VerificationFailed, "explicit complex over A_f: " + check.failure);
    for (std::size_t m = 1; m <= N; ++m)
        if (!(X.linear_differential(m) == realized_differential(D, *star, m)))
            throw Error(ErrorKind::VerificationFailed,
                        "degree " + deg(m) + ": differential differs from the realized (u, v, u)");
    return out;
}

ComparisonReport compare_with_generic(const DeformedAlgebra& D, const DeformedComplex& C)
{
    (void)D;
    Resolution G = minimal_resolution(C.res.module, C.res.degree());
    ComparisonReport rep;
    for (std::size_t m = 0; m <= C.res.degree(); ++m) {
        ComparisonRow row{m, C.res.multiplicities(m), G.multiplicities(m)};
        if (row.explicit_mult != row.generic_mult)
            rep.match = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

void require_match(const ComparisonReport& r)
{
    auto str = [](const std::vector<std::size_t>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    for (const auto& row : r.rows)
        if (row.explicit_mult != row.generic_mult)
            throw Error(ErrorKind::Mismatch, "degree " + deg(row.degree) + ": expected " + str(row.explicit_mult) +
                                                 ", got " + str(row.generic_mult));
}

ExtDims ext_dims_deformed(const Resolution& base, const Resolution& deformed)
{
    ExtDims d;
    std::size_t sum = 0;
    const std::size_t N = std::min(base.degree(), deformed.degree());
    for (std::size_t n = 0; n <= N; ++n) {
        sum += base.terms[n].size();
        d.partial_sums.push_back(sum);
        d.deformed.push_back(deformed.terms[n].size());
        if (d.deformed.back() != sum)
            d.identity_holds = false;
    }
    return d;
}

} // namespace defext
