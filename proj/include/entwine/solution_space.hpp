#ifndef ENTWINE_SOLUTION_SPACE_HPP
#define ENTWINE_SOLUTION_SPACE_HPP

#include "entwine/linmap.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace entwine {

/// Linear constraint evaluator: maps a candidate X to the list of LinMaps that
/// must all vanish. Must be linear in X.
using Residual = std::function<std::vector<LinMap>(const LinMap&)>;

/// Basis of { X : domain -> codomain | residual(X) = 0 }, together with the
/// residual so membership can be re-checked independently of the solver.
class SolutionSpace {
public:
    SolutionSpace() = default;
    SolutionSpace(Field f, Shape domain, Shape codomain, std::vector<LinMap> basis, Residual residual);

    const Field& field() const noexcept { return field_; }
    const Shape& domain() const noexcept { return dom_; }
    const Shape& codomain() const noexcept { return cod_; }
    const std::vector<LinMap>& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }

    LinMap combine(const Vector& coords) const;
    bool satisfied_by(const LinMap& x) const;
    /// Coordinates of x in the basis, or nothing when x lies outside the span.
    std::optional<Vector> coordinates_of(const LinMap& x) const;

    /// Some X in the space with L(X) = target, for L linear.
    std::optional<LinMap> solve_affine(const std::function<LinMap(const LinMap&)>& l, const LinMap& target) const;

    const Residual& residual() const noexcept { return residual_; }

private:
    Field field_;
    Shape dom_;
    Shape cod_;
    std::vector<LinMap> basis_;
    Residual residual_;
};

/// Computes the solution space by probing the residual on the elementary maps
/// and taking the kernel of the resulting constraint matrix. Every basis
/// element is re-verified against the residual.
SolutionSpace solve_homogeneous(const Field& f, const Shape& domain, const Shape& codomain, Residual residual);

/// The elementary map sending basis vector `in` to basis vector `out`.
LinMap elementary(const Field& f, const Shape& domain, const Shape& codomain, std::size_t out, std::size_t in);

/// Flattened concatenation of the matrices (row-major), used as a coordinate vector.
Vector flatten_maps(const std::vector<LinMap>& maps);
Vector flatten_map(const LinMap& m);
LinMap unflatten_map(const Field& f, const Shape& domain, const Shape& codomain, const Vector& v);

} // namespace entwine

#endif
