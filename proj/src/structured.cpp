#include "defext/structured.hpp"

#include <atomic>
#include <sstream>

#include "defext/error.hpp"

namespace defext {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

} // namespace

SparseVec sparse_from_dense(const Vec& v)
{
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            s.emplace_back(i, v[i]);
    return s;
}

Vec dense_from_sparse(const SparseVec& s, std::size_t dim)
{
    Vec v = zero_vec(dim);
    for (const auto& [i, c] : s)
        v.at(i) = c;
    return v;
}

SparseVec sparse_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b)
{
    if (c.is_zero() || b.empty())
        return a;
    SparseVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Scalar s = a[i].second + c * b[j].second;
            if (!s.is_zero())
                r.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

Scalar Element::coeff(std::size_t basis_index) const
{
    for (const auto& [i, c] : terms)
        if (i == basis_index)
            return c;
    return Scalar(0);
}

bool Element::operator==(const Element& o) const
{
    if (algebra != o.algebra || terms.size() != o.terms.size())
        return false;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i].first != o.terms[i].first || terms[i].second != o.terms[i].second)
            return false;
    return true;
}

std::shared_ptr<const StructuredAlgebra> StructuredAlgebra::create(Data data, const std::string& name)
{
    const std::size_t n = data.labels.size();
    if (data.products.size() != n * n)
        throw Error(ErrorKind::DimensionMismatch, "structure constants do not match the basis");
    if (data.vertex_labels.size() != data.frame.size())
        throw Error(ErrorKind::DimensionMismatch, "vertex labels do not match the frame");
    std::shared_ptr<StructuredAlgebra> alg(new StructuredAlgebra());
    alg->id_ = next_algebra_id++;
    alg->name_ = name;
    alg->data_ = std::move(data);
    alg->radical_mask_.assign(n, false);
    for (auto r : alg->data_.radical) {
        if (r >= n)
            throw Error(ErrorKind::VerificationFailed, "radical index out of range");
        alg->radical_mask_[r] = true;
    }
    for (auto f : alg->data_.frame) {
        if (f >= n || alg->radical_mask_[f])
            throw Error(ErrorKind::VerificationFailed, "frame idempotent inside the radical basis");
    }
    if (alg->data_.frame.size() + alg->data_.radical.size() != n)
        throw Error(ErrorKind::VerificationFailed, "basis is not frame plus radical basis");

    // homogeneity: e_u b e_v = b for a unique (u, v)
    const std::size_t nv = alg->data_.frame.size();
    alg->left_.assign(n, 0);
    alg->right_.assign(n, 0);
    alg->proj_.assign(nv, {});
    for (std::size_t b = 0; b < n; ++b) {
        int left = -1, right = -1;
        for (std::size_t v = 0; v < nv; ++v) {
            const SparseVec& l = alg->product(alg->data_.frame[v], b);
            if (!l.empty()) {
                if (l.size() != 1 || l[0].first != b || !l[0].second.is_one() || left >= 0)
                    throw Error(ErrorKind::VerificationFailed,
                                "basis element " + alg->label(b) + " is not frame-homogeneous on the left");
                left = static_cast<int>(v);
            }
            const SparseVec& r = alg->product(b, alg->data_.frame[v]);
            if (!r.empty()) {
                if (r.size() != 1 || r[0].first != b || !r[0].second.is_one() || right >= 0)
                    throw Error(ErrorKind::VerificationFailed,
                                "basis element " + alg->label(b) + " is not frame-homogeneous on the right");
                right = static_cast<int>(v);
            }
        }
        if (left < 0 || right < 0)
            throw Error(ErrorKind::VerificationFailed,
                        "basis element " + alg->label(b) + " is killed by every idempotent");
        alg->left_[b] = static_cast<std::size_t>(left);
        alg->right_[b] = static_cast<std::size_t>(right);
        alg->proj_[static_cast<std::size_t>(right)].push_back(b);
    }
    alg->validate();
    return alg;
}

void StructuredAlgebra::validate() const
{
    const std::size_t n = dim();
    // associativity on all basis triples
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& ij = product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                SparseVec lhs;
                for (const auto& [m, c] : ij)
                    lhs = sparse_axpy(lhs, c, product(m, k));
                SparseVec rhs;
                for (const auto& [m, c] : product(j, k))
                    rhs = sparse_axpy(rhs, c, product(i, m));
                if (!(make(lhs) == make(rhs)))
                    throw Error(ErrorKind::VerificationFailed, "associativity fails at (" + label(i) + ", " +
                                                                   label(j) + ", " + label(k) + ")");
            }
        }
    // frame idempotents are orthogonal (homogeneity gives e_u e_v = 0 for u != v and e_v e_v = e_v)
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        if (left_[frame(v)] != v || right_[frame(v)] != v)
            throw Error(ErrorKind::VerificationFailed, "frame idempotent " + label(frame(v)) + " misplaced");
    }
    // radical is a two-sided ideal
    for (std::size_t i = 0; i < n; ++i)
        for (auto r : radical()) {
            for (const auto& [m, c] : product(i, r))
                if (!radical_mask_[m])
                    throw Error(ErrorKind::VerificationFailed, "radical is not a left ideal");
            for (const auto& [m, c] : product(r, i))
                if (!radical_mask_[m])
                    throw Error(ErrorKind::VerificationFailed, "radical is not a right ideal");
        }
    // radical is nilpotent: J^k shrinks to zero
    std::vector<Vec> power;
    for (auto r : radical())
        power.push_back(dense(basis_element(r)));
    power = echelon_basis(power, n);
    std::size_t steps = 0;
    while (!power.empty()) {
        std::vector<Vec> next;
        for (const auto& p : power) {
            SparseVec ps = sparse_from_dense(p);
            for (auto r : radical())
                next.push_back(dense_from_sparse(multiply(SparseVec{{r, Scalar(1)}}, ps), n));
        }
        next = echelon_basis(next, n);
        if (next.size() == power.size())
            throw Error(ErrorKind::NotAdmissible, "radical basis does not span a nilpotent ideal");
        power = std::move(next);
        if (++steps > n + 1)
            throw Error(ErrorKind::NotAdmissible, "radical basis does not span a nilpotent ideal");
    }
}

std::vector<std::size_t> StructuredAlgebra::corner_basis(std::size_t u, std::size_t v) const
{
    std::vector<std::size_t> r;
    for (auto b : projective_basis(v))
        if (left_[b] == u)
            r.push_back(b);
    return r;
}

Element StructuredAlgebra::basis_element(std::size_t i) const
{
    if (i >= dim())
        throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
    return {id_, {{i, Scalar(1)}}};
}

Element StructuredAlgebra::unit() const
{
    SparseVec s;
    for (std::size_t v = 0; v < vertex_count(); ++v)
        s = sparse_axpy(s, Scalar(1), SparseVec{{frame(v), Scalar(1)}});
    return make(std::move(s));
}

void StructuredAlgebra::check_owner(const Element& e) const
{
    if (e.algebra != id_)
        throw Error(ErrorKind::AlgebraMismatch, "element does not belong to algebra " + name_);
}

SparseVec StructuredAlgebra::multiply(const SparseVec& a, const SparseVec& b) const
{
    SparseVec r;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b)
            r = sparse_axpy(r, ci * cj, product(i, j));
    return r;
}

Element StructuredAlgebra::multiply(const Element& a, const Element& b) const
{
    check_owner(a);
    check_owner(b);
    return make(multiply(a.terms, b.terms));
}

Element StructuredAlgebra::add(const Element& a, const Element& b) const
{
    check_owner(a);
    check_owner(b);
    return make(sparse_axpy(a.terms, Scalar(1), b.terms));
}

Element StructuredAlgebra::sub(const Element& a, const Element& b) const
{
    check_owner(a);
    check_owner(b);
    return make(sparse_axpy(a.terms, Scalar(-1), b.terms));
}

Element StructuredAlgebra::scale(const Scalar& s, const Element& a) const
{
    check_owner(a);
    if (s.is_zero())
        return zero();
    Element r = a;
    for (auto& [i, c] : r.terms)
        c = s * c;
    return r;
}

Vec StructuredAlgebra::dense(const Element& e) const
{
    check_owner(e);
    return dense_from_sparse(e.terms, dim());
}

Matrix StructuredAlgebra::left_multiplication(std::size_t a) const
{
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, c] : product(a, j))
            m(k, j) = c;
    return m;
}

Matrix StructuredAlgebra::right_multiplication(std::size_t a) const
{
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, c] : product(j, a))
            m(k, j) = c;
    return m;
}

std::string StructuredAlgebra::format(const Element& e) const
{
    check_owner(e);
    if (e.terms.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [i, c] : e.terms) {
        std::string coeff = c.str();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative)
            coeff = coeff.substr(1);
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (coeff != "1")
            s += coeff + "*";
        s += label(i);
        first = false;
    }
    return s;
}

AlgMatrix AlgMatrix::zero(const StructuredAlgebra& alg, std::size_t rows, std::size_t cols)
{
    return {rows, cols, std::vector<Element>(rows * cols, alg.zero())};
}

bool AlgMatrix::is_zero() const
{
    for (const auto& e : entries)
        if (!e.is_zero())
            return false;
    return true;
}

AlgMatrix multiply(const StructuredAlgebra& alg, const AlgMatrix& a, const AlgMatrix& b)
{
    if (a.cols != b.rows)
        throw Error(ErrorKind::DimensionMismatch, "algebra matrix product");
    AlgMatrix r = AlgMatrix::zero(alg, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (!b.at(k, j).is_zero())
                    r.at(i, j) = alg.add(r.at(i, j), alg.multiply(a.at(i, k), b.at(k, j)));
        }
    return r;
}

AlgMatrix add(const StructuredAlgebra& alg, const AlgMatrix& a, const AlgMatrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols)
        throw Error(ErrorKind::DimensionMismatch, "algebra matrix sum");
    AlgMatrix r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        r.entries[i] = alg.add(a.entries[i], b.entries[i]);
    return r;
}

AlgMatrix scale(const StructuredAlgebra& alg, const Scalar& s, const AlgMatrix& a)
{
    AlgMatrix r = a;
    for (auto& e : r.entries)
        e = alg.scale(s, e);
    return r;
}

AlgMatrix frame_matrix(const StructuredAlgebra& alg, const std::vector<std::size_t>& vertices)
{
    AlgMatrix m = AlgMatrix::zero(alg, vertices.size(), vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        m.at(i, i) = alg.idempotent(vertices[i]);
    return m;
}

std::string format(const StructuredAlgebra& alg, const AlgMatrix& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (i)
            os << "; ";
        for (std::size_t j = 0; j < m.cols; ++j)
            os << (j ? ", " : "") << alg.format(m.at(i, j));
    }
    os << "]";
    return os.str();
}

} // namespace defext
