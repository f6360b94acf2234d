#include "defext/ext_deformed.hpp"

#include <mutex>
#include <optional>

#include "defext/error.hpp"

namespace defext {

std::int64_t a_coeff(long k, long r, long i)
{
    if (k < 0 || r < 0 || i < 0 || i > r)
        return 0;
    if (k == 0)
        return i == 0 ? 1 : 0;
    static std::mutex mu;
    static std::map<std::tuple<long, long, long>, std::int64_t> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({k, r, i});
        if (it != memo.end())
            return it->second;
    }
    const std::int64_t sr = (r % 2 == 0) ? 1 : -1;
    const std::int64_t v = sr * a_coeff(k - 1, r, i) + a_coeff(k, r - 1, i) - sr * a_coeff(k, r - 1, i - 1);
    std::lock_guard<std::mutex> lock(mu);
    memo[{k, r, i}] = v;
    return v;
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

long binomial(long n, long k)
{
    long r = 1;
    for (long j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

std::vector<std::size_t> concat_slots(const Resolution& R, std::size_t m)
{
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j <= m; ++j)
        v.insert(v.end(), R.terms[j].begin(), R.terms[j].end());
    return v;
}

// Linear matrix of the A-linear map from a free module with the given
// generator images into M.
Matrix cochain_linear(const Resolution& R, std::size_t k, const std::vector<Vec>& images)
{
    FreeLayout L = R.layout(k);
    Matrix m(R.module->dim(), L.dim());
    for (std::size_t s = 0; s < L.slot_count(); ++s) {
        const auto& pb = R.alg->projective_basis(R.terms[k][s]);
        for (std::size_t j = 0; j < pb.size(); ++j)
            m.set_column(L.offset(s) + j, R.module->action(pb[j]).apply(images[s]));
    }
    return m;
}

} // namespace

DeformedExt::DeformedExt(const DeformedAlgebra& D, std::shared_ptr<const StarData> star, std::size_t N)
    : D_(D), star_(std::move(star)), X_(build_deformed_complex(D, star_, N)), N_(N)
{
    const Resolution& R = base();
    std::size_t o = 0;
    for (std::size_t k = 0; k <= R.degree(); ++k) {
        offsets_.push_back(o);
        o += R.layout(k).dim();
    }
    offsets_.push_back(o);
    delta_.push_back(R.linear_augmentation());
    for (std::size_t i = 1; i <= R.degree(); ++i)
        delta_.push_back(R.linear_differential(i));
}

std::size_t DeformedExt::dim(std::size_t n) const
{
    std::size_t d = 0;
    for (std::size_t k = 0; k <= n; ++k)
        d += base().terms.at(k).size();
    return d;
}

DeformedExtClass DeformedExt::zero(std::size_t n) const
{
    if (n > N_)
        throw Error(ErrorKind::DegreeMismatch, "degree " + idx(n) + " exceeds the computed range " + idx(N_));
    DeformedExtClass c{n, {}};
    for (std::size_t k = 0; k <= n; ++k)
        c.comps.push_back(zero_vec(base().terms[k].size()));
    return c;
}

std::vector<DeformedExtClass> DeformedExt::basis(std::size_t n) const
{
    std::vector<DeformedExtClass> out;
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t u = 0; u < base().terms[k].size(); ++u) {
            DeformedExtClass c = zero(n);
            c.comps[k][u] = Scalar(1);
            out.push_back(std::move(c));
        }
    return out;
}

DeformedExtClass DeformedExt::unit() const
{
    DeformedExtClass c = zero(0);
    for (auto& x : c.comps[0])
        x = Scalar(1);
    return c;
}

DeformedExtClass DeformedExt::x_class() const
{
    DeformedExtClass c = zero(1);
    for (auto& x : c.comps[0])
        x = Scalar(1);
    return c;
}

void DeformedExt::check_shape(const DeformedExtClass& g) const
{
    if (g.degree > N_)
        throw Error(ErrorKind::DegreeMismatch, "degree " + idx(g.degree) + " exceeds the computed range " + idx(N_));
    if (g.comps.size() != g.degree + 1)
        throw Error(ErrorKind::DimensionMismatch,
                    "a class of degree " + idx(g.degree) + " has " + idx(g.degree + 1) + " components");
    for (std::size_t k = 0; k <= g.degree; ++k)
        if (g.comps[k].size() != base().terms[k].size())
            throw Error(ErrorKind::DimensionMismatch, "component " + idx(k) + " needs " +
                                                          idx(base().terms[k].size()) + " coordinates, got " +
                                                          idx(g.comps[k].size()));
}

ExtClass DeformedExt::to_complex(const DeformedExtClass& g) const
{
    check_shape(g);
    ExtClass c{g.degree, {}};
    for (const auto& v : g.comps)
        c.coords.insert(c.coords.end(), v.begin(), v.end());
    return c;
}

DeformedExtClass DeformedExt::from_complex(const ExtClass& c) const
{
    DeformedExtClass g = zero(c.degree);
    std::size_t p = 0;
    for (auto& v : g.comps)
        for (auto& x : v)
            x = c.coords.at(p++);
    return g;
}

Matrix DeformedExt::cochain_matrix(std::size_t k, const Vec& coords) const
{
    const Resolution& R = base();
    FreeLayout L = R.layout(k);
    Matrix m(R.module->dim(), L.dim());
    for (std::size_t u = 0; u < R.terms[k].size(); ++u)
        if (!coords[u].is_zero())
            m(simple_index(*R.module, R.terms[k][u]), L.index(u, R.alg->frame(R.terms[k][u]))) = coords[u];
    return m;
}

Vec DeformedExt::read_cochain(std::size_t k, const Matrix& m) const
{
    const Resolution& R = base();
    const StructuredAlgebra& A = *R.alg;
    FreeLayout L = R.layout(k);
    for (std::size_t a = 0; a < A.dim(); ++a)
        if (!(m * L.action(a) == R.module->action(a) * m))
            throw Error(ErrorKind::NotALinearRepresentative,
                        "map on Q_" + idx(k) + " is not A-linear at " + A.label(a));
    Vec c = zero_vec(R.terms[k].size());
    for (std::size_t u = 0; u < c.size(); ++u)
        c[u] = m(simple_index(*R.module, R.terms[k][u]), L.index(u, A.frame(R.terms[k][u])));
    return c;
}

const std::vector<std::vector<Vec>>& DeformedExt::star_table(std::size_t s, std::size_t u) const
{
    auto key = std::make_pair(s, u);
    auto it = table_.find(key);
    if (it != table_.end())
        return it->second;
    const Resolution& R = base();
    ExtClass e{s, zero_vec(R.terms[s].size())};
    e.coords[u] = Scalar(1);
    auto gamma = lift_chain_map(cochain_images(R, e), s, R, R, R.degree() - s);
    std::vector<std::vector<Vec>> t;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        std::vector<Vec> row;
        for (std::size_t a = 0; a < R.terms[i].size(); ++a) {
            ExtClass h{i, zero_vec(R.terms[i].size())};
            h.coords[a] = Scalar(1);
            row.push_back(compose_class(R, h, gamma[i], s + i).coords);
        }
        t.push_back(std::move(row));
    }
    return table_.emplace(key, std::move(t)).first->second;
}

Vec DeformedExt::star_product(std::size_t i, const Vec& h, std::size_t s, const Vec& g) const
{
    const Resolution& R = base();
    if (i + s > R.degree())
        throw Error(ErrorKind::DegreeMismatch, "base product of degree " + idx(i + s) + " is out of range");
    Vec r = zero_vec(R.terms[i + s].size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (g[u].is_zero())
            continue;
        const auto& t = star_table(s, u);
        for (std::size_t a = 0; a < h.size(); ++a)
            if (!h[a].is_zero())
                axpy(r, g[u] * h[a], t[i][a]);
    }
    return r;
}

Matrix DeformedExt::closed_cochain_matrix(const DeformedExtClass& g, std::size_t s, std::size_t m) const
{
    check_shape(g);
    const std::size_t n = g.degree;
    const Resolution& R = base();
    if (s > n + m || s > R.degree())
        throw Error(ErrorKind::DegreeMismatch, "representative index out of range");
    const std::size_t dS = R.module->dim();
    const std::size_t dQ = offsets_[s + 1] - offsets_[s];
    // g_k α_{k+1} ⋯ α_s, zero outside 0..n
    auto term = [&](long k) {
        if (k < 0 || k > static_cast<long>(n))
            return Matrix(dS, dQ);
        Matrix acc = cochain_matrix(static_cast<std::size_t>(k), g.comps[static_cast<std::size_t>(k)]);
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j <= s; ++j)
            acc = acc * star_->alpha.at(j);
        return acc;
    };
    const long sl = static_cast<long>(s);
    const long ml = static_cast<long>(m);
    if (s == n + m) {
        const long e = ml * (static_cast<long>(n) + 1) + ml * (ml + 1) / 2;
        return term(static_cast<long>(n)).scaled(sign(e));
    }
    Matrix out(dS, dQ);
    const long r = ml / 2;
    for (long k = 0; k <= r; ++k) {
        const Scalar c(binomial(r, k));
        if (ml % 2 == 0)
            out += term(sl - 2 * k).scaled(c * sign(k));
        else
            out += (term(sl - 2 * k) - term(sl - 2 * k - 1)).scaled(c * sign(k + sl));
    }
    return out;
}

Vec DeformedExt::closed_representative(const DeformedExtClass& g, std::size_t s, std::size_t m) const
{
    return read_cochain(s, closed_cochain_matrix(g, s, m));
}

DeformedExtClass DeformedExt::product_formula(const DeformedExtClass& h, const DeformedExtClass& g) const
{
    check_shape(h);
    check_shape(g);
    const std::size_t n = g.degree, m = h.degree;
    if (n + m > N_)
        throw Error(ErrorKind::DegreeMismatch, "product degree " + idx(n + m) + " exceeds " + idx(N_));
    DeformedExtClass out = zero(n + m);
    for (std::size_t i = 0; i <= m; ++i) {
        if (is_zero(h.comps[i]))
            continue;
        for (std::size_t s = 0; s + i <= n + m; ++s) {
            Vec L = closed_representative(g, s, m - i);
            if (!is_zero(L))
                out.comps[i + s] = add(out.comps[i + s], star_product(i, h.comps[i], s, L));
        }
    }
    return out;
}

std::vector<AlgMatrix> DeformedExt::generic_lifting(const DeformedExtClass& g, std::size_t depth) const
{
    if (g.degree + depth > N_)
        throw Error(ErrorKind::DegreeMismatch, "lifting beyond the computed range");
    return lift_chain_map(cochain_images(X_.res, to_complex(g)), g.degree, X_.res, X_.res, depth);
}

DeformedExtClass DeformedExt::product_generic(const DeformedExtClass& h, const DeformedExtClass& g,
                                              const std::vector<AlgMatrix>& gamma) const
{
    check_shape(h);
    if (h.degree >= gamma.size())
        throw Error(ErrorKind::DegreeMismatch, "lifting too short for a class of degree " + idx(h.degree));
    return from_complex(compose_class(X_.res, to_complex(h), gamma[h.degree], g.degree + h.degree));
}

Matrix DeformedExt::block(const Matrix& m, std::size_t t, std::size_t s) const
{
    return m.block(offsets_.at(t), offsets_.at(s), offsets_.at(t + 1) - offsets_.at(t),
                   offsets_.at(s + 1) - offsets_.at(s));
}

std::string DeformedExt::lifting_identity_failure(const LiftingFamily& fam, bool structured) const
{
    const Resolution& R = base();
    const StructuredAlgebra& A = *R.alg;
    const Cochain2& f = D_.cocycle();
    const std::size_t n = fam.n;
    const auto& G = structured ? fam.phi : fam.gamma;
    const auto& B = structured ? fam.varphi : fam.beta;
    auto g = [&](std::size_t m, std::size_t t, std::size_t s) { return block(G.at(m), t, s); };
    auto b = [&](std::size_t m, std::size_t t, std::size_t s) { return block(B.at(m), t, s); };
    auto alpha = [&](std::size_t i) -> const Matrix& { return star_->alpha.at(i); };
    auto where = [](const char* eq, std::size_t m, std::size_t t, std::size_t s) {
        return std::string("(") + eq + ") at m=" + idx(m) + ", t=" + idx(t) + ", s=" + idx(s);
    };
    for (std::size_t m = 0; m <= fam.depth; ++m) {
        auto src = concat_slots(R, n + m);
        auto tgt = concat_slots(R, m);
        FreeLayout Ls(A, src), Lt(A, tgt);
        for (std::size_t a = 0; a < A.dim(); ++a) {
            const Matrix las = Ls.action(a), lat = Lt.action(a);
            if (!(G[m] * las == lat * G[m]))
                return "A-linearity at m=" + idx(m) + ", a=" + A.label(a);
            Matrix lhs = B[m] * las - lat * B[m];
            Matrix rhs = free_cochain_action(f, tgt, a) * G[m] - G[m] * free_cochain_action(f, src, a);
            if (!(lhs == rhs))
                return "(a) at m=" + idx(m) + ", a=" + A.label(a);
        }
        if (m == 0) {
            for (std::size_t s = 0; s <= n; ++s)
                if (!(delta_[0] * g(0, 0, s) == cochain_matrix(s, fam.g[s])))
                    return where("b", 0, 0, s);
            continue;
        }
        for (std::size_t t = 1; t <= m; ++t) {
            const Scalar st = sign(static_cast<long>(t));
            const Scalar st1 = sign(static_cast<long>(t) - 1);
            if (!(delta_[t] * g(m, t, 0)).is_zero())
                return where("c", m, t, 0);
            for (std::size_t s = 1; s <= n + m; ++s)
                if (!(delta_[t] * g(m, t, s) == g(m - 1, t - 1, s - 1) * delta_[s]))
                    return where("d", m, t, s);
            {
                Matrix lhs = g(m, t - 1, 0).scaled(st) + g(m - 1, t - 1, 0);
                Matrix rhs = delta_[t] * b(m, t, 0) + (alpha(t) * g(m, t, 0)).scaled(st1);
                if (!(lhs == rhs))
                    return where("e", m, t, 0);
            }
            for (std::size_t s = 1; s <= n + m; ++s) {
                const Scalar ss = sign(static_cast<long>(s));
                Matrix lhs = g(m, t - 1, s).scaled(st);
                if (s < n + m)
                    lhs += g(m - 1, t - 1, s).scaled(ss);
                Matrix rhs = delta_[t] * b(m, t, s) - b(m - 1, t - 1, s - 1) * delta_[s] +
                             (alpha(t) * g(m, t, s)).scaled(st1) + (g(m - 1, t - 1, s - 1) * alpha(s)).scaled(ss);
                if (!(lhs == rhs))
                    return where(s < n + m ? "f" : "g", m, t, s);
            }
        }
    }
    return {};
}

LiftingFamily DeformedExt::structured_lifting(const DeformedExtClass& g, std::size_t depth) const
{
    const Resolution& R = base();
    const StructuredAlgebra& A = *R.alg;
    const StructuredAlgebra& Af = *D_.algebra();
    const std::size_t n = g.degree;
    auto Gamma = generic_lifting(g, depth);
    LiftingFamily fam;
    fam.n = n;
    fam.g = g.comps;
    fam.depth = depth;
    for (std::size_t m = 0; m <= depth; ++m) {
        auto src = concat_slots(R, n + m);
        auto tgt = concat_slots(R, m);
        Matrix E = linear_map(Af, Gamma[m], X_.res.terms[n + m], X_.res.terms[m]);
        auto pc = hat_coordinates(A, src);
        auto pr = hat_coordinates(A, tgt);
        Matrix U(E.rows(), E.cols());
        for (std::size_t r = 0; r < U.rows(); ++r)
            for (std::size_t c = 0; c < U.cols(); ++c)
                U(r, c) = E(pr[r], pc[c]);
        const std::size_t ds = U.cols() / 2, dt = U.rows() / 2;
        Matrix u0 = U.block(0, 0, dt, ds);
        if (!U.block(0, ds, dt, ds).is_zero() || !(U.block(dt, ds, dt, ds) == u0))
            throw Error(ErrorKind::EquationFailed, "lifting of degree " + idx(m) + " is not of the form (u0, u1, u0)");
        fam.gamma.push_back(u0);
        fam.beta.push_back(U.block(dt, 0, dt, ds));
    }
    fam.phi = fam.gamma;
    fam.varphi = fam.beta;
    auto failure = lifting_identity_failure(fam, false);
    if (!failure.empty())
        throw Error(ErrorKind::EquationFailed, "generic lifting: " + failure);
    for (std::size_t m = 0; m <= depth; ++m) {
        Matrix P(offsets_[m + 1], offsets_[n + m + 1]);
        Matrix V(offsets_[m + 1], offsets_[n + m + 1]);
        for (std::size_t t = 0; t <= m; ++t)
            for (std::size_t s = t; s <= n + m; ++s) {
                Matrix p, v;
                if (s >= m) {
                    p = block(fam.gamma[m], t, s);
                    v = block(fam.beta[m], t, s);
                } else {
                    const std::size_t r = s - t;
                    p = Matrix(offsets_[t + 1] - offsets_[t], offsets_[s + 1] - offsets_[s]);
                    v = p;
                    for (std::size_t i = 0; i <= r && i <= n; ++i) {
                        const std::int64_t c = a_coeff(static_cast<long>(m - s), static_cast<long>(r),
                                                       static_cast<long>(i));
                        if (c == 0)
                            continue;
                        p += block(fam.gamma[s - i], t, s).scaled(Scalar(static_cast<long>(c)));
                        v += block(fam.beta[s - i], t, s).scaled(Scalar(static_cast<long>(c)));
                    }
                }
                P.set_block(offsets_[t], offsets_[s], p);
                V.set_block(offsets_[t], offsets_[s], v);
            }
        fam.phi[m] = std::move(P);
        fam.varphi[m] = std::move(V);
    }
    failure = lifting_identity_failure(fam, true);
    if (!failure.empty())
        throw Error(ErrorKind::EquationFailed, "structured lifting: " + failure);
    // (φ, ϕ, φ) is a chain map lifting ĝ; A_f-linearity is (a) plus A-linearity
    std::vector<Matrix> realized;
    for (std::size_t m = 0; m <= depth; ++m) {
        auto src = concat_slots(R, n + m);
        auto tgt = concat_slots(R, m);
        const std::size_t ds = offsets_[n + m + 1], dt = offsets_[m + 1];
        Matrix U(2 * dt, 2 * ds);
        U.set_block(0, 0, fam.phi[m]);
        U.set_block(dt, 0, fam.varphi[m]);
        U.set_block(dt, ds, fam.phi[m]);
        auto pc = hat_coordinates(A, src);
        auto pr = hat_coordinates(A, tgt);
        Matrix E(U.rows(), U.cols());
        for (std::size_t r = 0; r < U.rows(); ++r)
            for (std::size_t c = 0; c < U.cols(); ++c)
                E(pr[r], pc[c]) = U(r, c);
        realized.push_back(std::move(E));
    }
    Matrix gf = cochain_linear(X_.res, n, cochain_images(X_.res, to_complex(g)));
    if (!(X_.res.linear_augmentation() * realized[0] == gf))
        throw Error(ErrorKind::EquationFailed, "structured lifting does not lift the class");
    for (std::size_t m = 1; m <= depth; ++m)
        if (!(X_.res.linear_differential(m) * realized[m] == realized[m - 1] * X_.res.linear_differential(n + m)))
            throw Error(ErrorKind::EquationFailed, "structured lifting is not a chain map at degree " + idx(m));
    for (std::size_t m = 0; m <= depth; ++m)
        for (std::size_t s = 0; s <= n + m; ++s)
            if (!(delta_[0] * block(fam.phi[m], 0, s) == closed_cochain_matrix(g, s, m)))
                throw Error(ErrorKind::EquationFailed,
                            "first block of the structured lifting differs from the closed representative at m=" +
                                idx(m) + ", s=" + idx(s));
    return fam;
}

DeformedExtClass DeformedExt::product_structured(const DeformedExtClass& h, const DeformedExtClass& g,
                                                 const LiftingFamily& fam) const
{
    check_shape(h);
    const std::size_t m = h.degree, n = g.degree;
    if (m > fam.depth || fam.n != n)
        throw Error(ErrorKind::DegreeMismatch, "lifting family does not cover this product");
    DeformedExtClass out = zero(n + m);
    for (std::size_t j = 0; j <= n + m; ++j) {
        Matrix acc(base().module->dim(), offsets_[j + 1] - offsets_[j]);
        for (std::size_t i = 0; i <= m; ++i)
            if (!is_zero(h.comps[i]))
                acc += cochain_matrix(i, h.comps[i]) * block(fam.phi[m], i, j);
        out.comps[j] = read_cochain(j, acc);
    }
    return out;
}

DeformedExtClass DeformedExt::product(const DeformedExtClass& h, const DeformedExtClass& g,
                                      ProductMethod method) const
{
    check_shape(h);
    check_shape(g);
    if (g.degree + h.degree > N_)
        throw Error(ErrorKind::DegreeMismatch, "product degree " + idx(g.degree + h.degree) + " exceeds " + idx(N_));
    switch (method) {
    case ProductMethod::Formula:
        return product_formula(h, g);
    case ProductMethod::Structured:
        return product_structured(h, g, structured_lifting(g, h.degree));
    case ProductMethod::Generic:
        return product_generic(h, g, generic_lifting(g, h.degree));
    }
    throw Error(ErrorKind::Semantic, "unknown product method");
}

// ---------------------------------------------------------------- reports

Vec flatten(const DeformedExtClass& c)
{
    Vec v;
    for (const auto& x : c.comps)
        v.insert(v.end(), x.begin(), x.end());
    return v;
}

DeformedExtClass unflatten(const DeformedExt& E, std::size_t degree, const Vec& v)
{
    return E.from_complex(ExtClass{degree, v});
}

CorollaryReport corollary_check(const DeformedExt& E, std::size_t N)
{
    CorollaryReport rep;
    const Resolution& R = E.base();
    const StructuredAlgebra& A = *R.alg;
    const auto& alpha = E.star().alpha;
    for (std::size_t i = 1; i < alpha.size() && i <= N && rep.failing_alpha == 0; ++i) {
        FreeLayout L = R.layout(i - 1);
        for (std::size_t r = 0; r < alpha[i].rows() && rep.failing_alpha == 0; ++r) {
            if (A.is_radical(L.basis_at(r).second))
                continue;
            for (std::size_t c = 0; c < alpha[i].cols(); ++c)
                if (!alpha[i](r, c).is_zero()) {
                    rep.failing_alpha = i;
                    break;
                }
        }
    }
    rep.hypothesis = rep.failing_alpha == 0;
    if (!rep.hypothesis) {
        rep.products_match = false;
        return rep;
    }
    for (std::size_t n = 0; n <= N; ++n)
        for (const auto& g : E.basis(n))
            for (std::size_t m = 0; m + n <= N; ++m)
                for (const auto& h : E.basis(m)) {
                    DeformedExtClass want = E.zero(n + m);
                    for (std::size_t i = 0; i <= m; ++i)
                        for (std::size_t s = 0; s <= n; ++s)
                            want.comps[i + s] = add(want.comps[i + s],
                                                    scale(sign(static_cast<long>(s * (m - i))),
                                                          E.star_product(i, h.comps[i], s, g.comps[s])));
                    ++rep.pairs_checked;
                    if (!(E.product_formula(h, g) == want) && rep.products_match) {
                        rep.products_match = false;
                        rep.mismatch = "degrees (" + idx(m) + ", " + idx(n) + ")";
                    }
                }
    return rep;
}

ExtTable ext_table(const DeformedExt& E, std::size_t N, ProductMethod method)
{
    ExtTable T;
    T.N = N;
    for (std::size_t n = 0; n <= N; ++n)
        T.dims.push_back(E.dim(n));
    for (std::size_t n = 0; n <= N; ++n) {
        auto gs = E.basis(n);
        for (std::size_t b = 0; b < gs.size(); ++b) {
            const std::size_t depth = N - n;
            std::optional<std::vector<AlgMatrix>> gamma;
            std::optional<LiftingFamily> fam;
            if (method == ProductMethod::Generic)
                gamma = E.generic_lifting(gs[b], depth);
            if (method == ProductMethod::Structured)
                fam = E.structured_lifting(gs[b], depth);
            for (std::size_t m = 0; m <= depth; ++m) {
                auto hs = E.basis(m);
                for (std::size_t a = 0; a < hs.size(); ++a) {
                    DeformedExtClass p = method == ProductMethod::Generic      ? E.product_generic(hs[a], gs[b], *gamma)
                                         : method == ProductMethod::Structured ? E.product_structured(hs[a], gs[b], *fam)
                                                                               : E.product_formula(hs[a], gs[b]);
                    T.products[{m, a, n, b}] = flatten(p);
                }
            }
        }
    }
    for (std::size_t p = 0; p <= N; ++p)
        for (std::size_t q = 0; p + q <= N; ++q)
            for (std::size_t r = 0; p + q + r <= N; ++r)
                for (std::size_t a = 0; a < T.dims[p]; ++a)
                    for (std::size_t b = 0; b < T.dims[q]; ++b)
                        for (std::size_t c = 0; c < T.dims[r]; ++c) {
                            const Vec& ab = T.products.at({p, a, q, b});
                            const Vec& bc = T.products.at({q, b, r, c});
                            Vec left = zero_vec(T.dims[p + q + r]);
                            Vec right = left;
                            for (std::size_t k = 0; k < ab.size(); ++k)
                                if (!ab[k].is_zero())
                                    axpy(left, ab[k], T.products.at({p + q, k, r, c}));
                            for (std::size_t k = 0; k < bc.size(); ++k)
                                if (!bc[k].is_zero())
                                    axpy(right, bc[k], T.products.at({p, a, q + r, k}));
                            ++T.triples_checked;
                            if (left != right && T.associative) {
                                T.associative = false;
                                T.failure = "basis triple (" + idx(p) + ":" + idx(a) + ", " + idx(q) + ":" + idx(b) +
                                            ", " + idx(r) + ":" + idx(c) + ")";
                            }
                        }
    return T;
}

AgreementReport triple_agreement(const DeformedExt& E, std::size_t N)
{
    AgreementReport rep;
    for (std::size_t n = 0; n <= N; ++n)
        for (const auto& g : E.basis(n)) {
            auto gamma = E.generic_lifting(g, N - n);
            auto fam = E.structured_lifting(g, N - n);
            for (std::size_t m = 0; m + n <= N; ++m)
                for (const auto& h : E.basis(m)) {
                    auto f = E.product_formula(h, g);
                    auto s = E.product_structured(h, g, fam);
                    auto c = E.product_generic(h, g, gamma);
                    ++rep.pairs;
                    if ((!(f == s) || !(f == c)) && rep.agree) {
                        rep.agree = false;
                        rep.mismatch = "degrees (" + idx(m) + ", " + idx(n) + "): formula " +
                                       (f == s ? "agrees with" : "differs from") + " structured, " +
                                       (f == c ? "agrees with" : "differs from") + " generic";
                    }
                }
        }
    return rep;
}

} // namespace defext
