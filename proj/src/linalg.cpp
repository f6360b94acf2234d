#include "defext/linalg.hpp"

#include <sstream>

#include "defext/error.hpp"

namespace defext {

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "vector add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "vector sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Scalar& s, const Vec& v)
{
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

void axpy(Vec& v, const Scalar& s, const Vec& w)
{
    if (s.is_zero())
        return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!w[i].is_zero())
            v[i] += s * w[i];
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        m.set_column(c, cols[c]);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorKind::DimensionMismatch, "from_rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const
{
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vec& v)
{
    if (v.size() != rows_)
        throw Error(ErrorKind::DimensionMismatch, "set_column");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                        std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero())
                    r(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix r = *this;
    r += o;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] += o.data_[i];
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix r = *this;
    for (auto& x : r.data_)
        if (!x.is_zero())
            x = s * x;
    return r;
}

Vec Matrix::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix apply");
    Vec r = zero_vec(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = (*this)(i, c);
            if (!a.is_zero())
                r[i] += a * v[c];
        }
    }
    return r;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(ErrorKind::DimensionMismatch, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw Error(ErrorKind::DimensionMismatch, "set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const
{
    Matrix r(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            r(i, j) = (*this)(i, cols[j]);
    return r;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i])
            return false;
    return true;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

namespace {

// Row-reduces m in place using only the first `pivot_cols` columns for pivots.
std::vector<std::size_t> reduce_in_place(Matrix& m, std::size_t pivot_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < pivot_cols && row < m.rows(); ++c) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, c).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(sel, j), m(row, j));
        Scalar inv = m(row, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(row, j).is_zero())
                m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c).is_zero())
                continue;
            Scalar factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

Rref rref(Matrix m)
{
    auto pivots = reduce_in_place(m, m.cols());
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m)
{
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v = zero_vec(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k)
            v[r.pivots[k]] = -r.reduced(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols())
{
    Matrix aug(m.rows(), m.cols() + m.rows());
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i)
        aug(i, m.cols() + i) = 1;
    pivots_ = reduce_in_place(aug, m.cols());
    transform_ = aug.block(0, m.cols(), m.rows(), m.rows());
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const
{
    if (b.size() != rows_)
        throw Error(ErrorKind::DimensionMismatch, "solve: rhs size");
    Vec c = transform_.apply(b);
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (!c[i].is_zero())
            return std::nullopt;
    Vec x = zero_vec(cols_);
    for (std::size_t k = 0; k < pivots_.size(); ++k)
        x[pivots_[k]] = c[k];
    return x;
}

Vec Subspace::reduce(Vec v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar coeff = v[pivots_[k]];
        if (!coeff.is_zero())
            axpy(v, -coeff, rows_[k]);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return defext::is_zero(reduce(v)); }

bool Subspace::add(const Vec& v)
{
    if (v.size() != ambient_)
        throw Error(ErrorKind::DimensionMismatch, "subspace add");
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && r[p].is_zero())
        ++p;
    if (p == r.size())
        return false;
    r = scale(r[p].inverse(), r);
    // keep fully reduced: clear the new pivot from existing rows
    for (auto& row : rows_) {
        const Scalar coeff = row[p];
        if (!coeff.is_zero())
            axpy(row, -coeff, r);
    }
    // insert sorted by pivot
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p)
        ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

std::vector<Vec> echelon_basis(const std::vector<Vec>& vectors, std::size_t ambient)
{
    Subspace s(ambient);
    for (const auto& v : vectors)
        s.add(v);
    return s.basis();
}

} // namespace defext
