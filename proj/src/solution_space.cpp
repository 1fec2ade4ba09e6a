#include "entwine/solution_space.hpp"

#include <type_traits>

namespace entwine {

SolutionSpace::SolutionSpace(Field f, Shape domain, Shape codomain, std::vector<LinMap> basis, Residual residual)
    : field_(f), dom_(std::move(domain)), cod_(std::move(codomain)), basis_(std::move(basis)), residual_(std::move(residual)) {}

LinMap SolutionSpace::combine(const Vector& coords) const {
    if (coords.size() != basis_.size()) throw ContractViolation("combine: coordinate count mismatch");
    Matrix m(field_, total(cod_), total(dom_));
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) m = m + basis_[i].matrix().scaled(coords[i]);
    return LinMap(dom_, cod_, std::move(m));
}

bool SolutionSpace::satisfied_by(const LinMap& x) const {
    if (!residual_) return true;
    for (const auto& r : residual_(x))
        if (!r.is_zero()) return false;
    return true;
}

std::optional<Vector> SolutionSpace::coordinates_of(const LinMap& x) const {
    std::vector<Vector> cols;
    cols.reserve(basis_.size());
    for (const auto& b : basis_) cols.push_back(flatten_map(b));
    Vector target = flatten_map(x);
    auto sol = solve_linear(Matrix::from_columns(field_, cols, target.size()), target);
    return sol.particular;
}

std::optional<LinMap> SolutionSpace::solve_affine(const std::function<LinMap(const LinMap&)>& l,
                                                  const LinMap& target) const {
    Vector rhs = flatten_map(target);
    std::vector<Vector> cols;
    cols.reserve(basis_.size());
    for (const auto& b : basis_) cols.push_back(flatten_map(l(b)));
    auto sol = solve_linear(Matrix::from_columns(field_, cols, rhs.size()), rhs);
    if (!sol.particular) return std::nullopt;
    LinMap x = combine(*sol.particular);
    if (l(x) != target) throw std::logic_error("solve_affine: solution failed substitution");
    return x;
}

LinMap elementary(const Field& f, const Shape& domain, const Shape& codomain, std::size_t out, std::size_t in) {
    Matrix m(f, total(codomain), total(domain));
    m.set(out, in, f.one());
    return LinMap(domain, codomain, std::move(m));
}

Vector flatten_map(const LinMap& m) {
    Vector v;
    const auto& mat = m.matrix();
    v.reserve(mat.rows() * mat.cols());
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) v.push_back(mat.at(i, j));
    return v;
}

Vector flatten_maps(const std::vector<LinMap>& maps) {
    Vector v;
    for (const auto& m : maps) {
        auto part = flatten_map(m);
        v.insert(v.end(), part.begin(), part.end());
    }
    return v;
}

LinMap unflatten_map(const Field& f, const Shape& domain, const Shape& codomain, const Vector& v) {
    const std::size_t rows = total(codomain), cols = total(domain);
    if (v.size() != rows * cols) throw ContractViolation("unflatten_map: length mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!v[i * cols + j].is_zero()) m.set(i, j, v[i * cols + j]);
    return LinMap(domain, codomain, std::move(m));
}

SolutionSpace solve_homogeneous(const Field& f, const Shape& domain, const Shape& codomain, Residual residual) {
    const std::size_t rows = total(codomain), cols = total(domain);
    const std::size_t unknowns = rows * cols;

    // column k of the constraint matrix is the residual of the k-th elementary map
    Matrix constraints;
    std::size_t eqs = 0;
    for (std::size_t k = 0; k < unknowns; ++k) {
        auto maps = residual(elementary(f, domain, codomain, k / cols, k % cols));
        if (k == 0) {
            for (const auto& m : maps) eqs += m.matrix().rows() * m.matrix().cols();
            constraints = Matrix(f, eqs, unknowns);
        }
        std::size_t row = 0;
        constraints.visit([&](auto, auto& cd) {
            using T = typename std::decay_t<decltype(cd)>::value_type;
            for (const auto& m : maps) {
                m.matrix().visit([&](auto ops, const auto& md) {
                    if constexpr (std::is_same_v<typename std::decay_t<decltype(md)>::value_type, T>) {
                        for (std::size_t i = 0; i < md.size(); ++i)
                            if (!ops.is_zero(md[i])) cd[(row + i) * unknowns + k] = md[i];
                    }
                });
                row += m.matrix().rows() * m.matrix().cols();
            }
        });
        if (row != eqs) throw std::logic_error("solve_homogeneous: residual length changed");
    }

    std::vector<LinMap> basis;
    if (eqs == 0) {
        for (std::size_t k = 0; k < unknowns; ++k) basis.push_back(elementary(f, domain, codomain, k / cols, k % cols));
    } else {
        for (auto& kv : kernel_basis(constraints)) basis.push_back(unflatten_map(f, domain, codomain, kv));
    }

    SolutionSpace space(f, domain, codomain, std::move(basis), std::move(residual));
    for (const auto& b : space.basis())
        if (!space.satisfied_by(b)) throw std::logic_error("solve_homogeneous: basis element has nonzero residual");
    return space;
}

} // namespace entwine
