#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defext/quiver.hpp"
#include "defext/structured.hpp"

namespace defext {

/// Formal linear combination of paths of kQ, ordered by PathLess.
using PathPoly = std::map<Path, Scalar, PathLess>;

void poly_add(PathPoly& p, const Path& path, const Scalar& c);
/// u * p * v, dropping non-composable terms.
PathPoly poly_sandwich(const Path& u, const PathPoly& p, const Path& v);

/// Parses the element grammar into a combination of quiver paths:
///   expr := term (('+'|'-') term)* ; term := [scalar '*'] factor
///   factor := 'e_'vertex | arrow ('*' arrow)* ; scalar := int | int/int
/// The literal `0` denotes the empty combination.
PathPoly parse_path_poly(const Quiver& q, const Field& field, std::string_view text);

/// A = kQ/I with a certified normal-form basis.
class QuotientAlgebra {
public:
    /// length_bound == 0 selects the default bound.
    /// Throws FinitenessNotCertified, NonParallelRelation or NotAdmissible.
    static std::shared_ptr<const QuotientAlgebra> build(Quiver q, Field field, std::vector<PathPoly> relations,
                                                        std::size_t length_bound = 0);

    static std::size_t default_length_bound(const Quiver& q, const std::vector<PathPoly>& relations);

    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    const StructuredAlgebra& structured() const { return *algebra_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t length_bound() const { return length_bound_; }
    const std::vector<Path>& basis() const { return basis_; }
    const std::vector<PathPoly>& relations() const { return relations_; }
    /// Reduced Gröbner basis of the ideal, each element monic in its leading path.
    const std::vector<PathPoly>& groebner_basis() const { return groebner_; }

    std::optional<std::size_t> basis_index(const Path& p) const;
    /// Normal form of a combination of kQ paths.
    Element reduce(const PathPoly& p) const;
    Element path_element(const Path& p) const { return reduce(PathPoly{{p, Scalar(1)}}); }
    Element parse(std::string_view text) const;
    std::string format(const Element& e) const { return algebra_->format(e); }

    Element multiply(const Element& a, const Element& b) const { return algebra_->multiply(a, b); }
    /// Basis of e_i A e_j (paths i -> j); b stands for x -> x b : Ae_i -> Ae_j.
    std::vector<Element> hom_basis(std::size_t i, std::size_t j) const;

private:
    QuotientAlgebra() = default;
    PathPoly normal_form(PathPoly p) const;

    Quiver quiver_;
    Field field_;
    std::vector<PathPoly> relations_;
    std::vector<PathPoly> groebner_;
    std::size_t length_bound_ = 0;
    std::vector<Path> basis_;
    std::map<Path, std::size_t, PathLess> index_;
    AlgebraPtr algebra_;
};

using QuotientPtr = std::shared_ptr<const QuotientAlgebra>;

/// Structure-constant view with the same basis order, frame and radical.
inline const AlgebraPtr& as_structured(const QuotientAlgebra& a) { return a.algebra(); }

} // namespace defext
