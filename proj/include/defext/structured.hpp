#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "defext/linalg.hpp"
#include "defext/scalar.hpp"

namespace defext {

/// Sorted (basis index, nonzero coefficient) pairs.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec sparse_from_dense(const Vec& v);
Vec dense_from_sparse(const SparseVec& s, std::size_t dim);
/// a + c * b, keeping the result sorted and free of zeros.
SparseVec sparse_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);

/// An element of a particular algebra; `algebra` is that algebra's id.
struct Element {
    std::uint64_t algebra = 0;
    SparseVec terms;

    bool is_zero() const { return terms.empty(); }
    Scalar coeff(std::size_t basis_index) const;
    bool operator==(const Element& o) const;
};

/// Finite-dimensional basic algebra given by structure constants.
///
/// Every basis element is homogeneous for the idempotent frame
/// (e_u b e_v = b for exactly one pair (u, v)), and the basis is the disjoint
/// union of the frame and a radical basis spanning a nilpotent ideal.
class StructuredAlgebra {
public:
    struct Data {
        Field field;
        std::vector<std::string> labels;
        std::vector<std::string> vertex_labels;
        /// products[i * dim + j] = b_i * b_j
        std::vector<SparseVec> products;
        /// frame[v] = basis index of e_v
        std::vector<std::size_t> frame;
        std::vector<std::size_t> radical;
    };

    /// Validates every invariant; throws Error(VerificationFailed) naming the
    /// first violation.
    static std::shared_ptr<const StructuredAlgebra> create(Data data, const std::string& name);

    std::uint64_t id() const { return id_; }
    const std::string& name() const { return name_; }
    const Field& field() const { return data_.field; }
    std::size_t dim() const { return data_.labels.size(); }
    std::size_t vertex_count() const { return data_.frame.size(); }
    const std::string& label(std::size_t i) const { return data_.labels.at(i); }
    const std::string& vertex_label(std::size_t v) const { return data_.vertex_labels.at(v); }
    const std::vector<std::string>& vertex_labels() const { return data_.vertex_labels; }
    std::size_t frame(std::size_t v) const { return data_.frame.at(v); }
    const std::vector<std::size_t>& radical() const { return data_.radical; }
    bool is_radical(std::size_t i) const { return radical_mask_.at(i); }
    std::size_t left_vertex(std::size_t i) const { return left_.at(i); }
    std::size_t right_vertex(std::size_t i) const { return right_.at(i); }

    const SparseVec& product(std::size_t i, std::size_t j) const { return data_.products[i * dim() + j]; }

    /// Basis of the left projective Λe_v (basis elements with right vertex v).
    const std::vector<std::size_t>& projective_basis(std::size_t v) const { return proj_.at(v); }
    /// Basis of e_u Λ e_v.
    std::vector<std::size_t> corner_basis(std::size_t u, std::size_t v) const;

    Element zero() const { return {id_, {}}; }
    Element basis_element(std::size_t i) const;
    Element idempotent(std::size_t v) const { return basis_element(frame(v)); }
    Element unit() const;
    Element make(SparseVec terms) const { return {id_, std::move(terms)}; }

    Element multiply(const Element& a, const Element& b) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element scale(const Scalar& s, const Element& a) const;
    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;

    Vec dense(const Element& e) const;
    Element from_dense(const Vec& v) const { return make(sparse_from_dense(v)); }

    /// Left multiplication by basis element `a` on the whole algebra.
    Matrix left_multiplication(std::size_t a) const;
    Matrix right_multiplication(std::size_t a) const;

    std::string format(const Element& e) const;
    void check_owner(const Element& e) const;

private:
    StructuredAlgebra() = default;
    void validate() const;

    std::uint64_t id_ = 0;
    std::string name_;
    Data data_;
    std::vector<bool> radical_mask_;
    std::vector<std::size_t> left_;
    std::vector<std::size_t> right_;
    std::vector<std::vector<std::size_t>> proj_;
};

using AlgebraPtr = std::shared_ptr<const StructuredAlgebra>;

/// Matrix with entries in an algebra; row r holds the image of the r-th
/// generator under a map of free modules ([x] B convention).
struct AlgMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Element> entries;

    static AlgMatrix zero(const StructuredAlgebra& alg, std::size_t rows, std::size_t cols);
    Element& at(std::size_t r, std::size_t c) { return entries.at(r * cols + c); }
    const Element& at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
    bool is_zero() const;
};

AlgMatrix multiply(const StructuredAlgebra& alg, const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix add(const StructuredAlgebra& alg, const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix scale(const StructuredAlgebra& alg, const Scalar& s, const AlgMatrix& a);
/// Diagonal idempotent matrix for a list of vertices.
AlgMatrix frame_matrix(const StructuredAlgebra& alg, const std::vector<std::size_t>& vertices);
std::string format(const StructuredAlgebra& alg, const AlgMatrix& m);

} // namespace defext
