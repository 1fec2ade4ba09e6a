#ifndef ENTWINE_STRUCTURES_HPP
#define ENTWINE_STRUCTURES_HPP

#include "entwine/linmap.hpp"
#include "entwine/validation.hpp"

#include <functional>
#include <string>
#include <vector>

namespace entwine {

using Table3 = std::function<Scalar(std::size_t, std::size_t, std::size_t)>;

/// Associative unital algebra given by structure constants:
/// mult : {n,n} -> {n}, e_i e_j = sum_k m[i][j][k] e_k; unit : {} -> {n}.
struct AlgebraData {
    LinMap mult;
    LinMap unit;

    AlgebraData() = default;
    AlgebraData(LinMap mult, LinMap unit);
    static AlgebraData from_table(const Field& f, std::size_t n, const Table3& m, const Vector& unit);

    const Field& field() const { return mult.field(); }
    std::size_t dim() const { return unit.codomain().at(0); }
    Scalar mult_coeff(std::size_t i, std::size_t j, std::size_t k) const { return mult.coeff(k, i * dim() + j); }
    Scalar unit_coeff(std::size_t i) const { return unit.coeff(i, 0); }
    LinMap id() const { return LinMap::identity(field(), {dim()}); }
    /// Product of two elements given in coordinates.
    Vector multiply(const Vector& x, const Vector& y) const;
    Vector unit_vector() const { return unit.image_of_basis(0); }

    AlgebraData opposite() const;
    bool operator==(const AlgebraData& o) const { return mult == o.mult && unit == o.unit; }
};

/// Coassociative counital coalgebra: comult : {n} -> {n,n}, counit : {n} -> {}.
/// Delta(e_i) = sum d[i][j][k] e_j (x) e_k.
struct CoalgebraData {
    LinMap comult;
    LinMap counit;

    CoalgebraData() = default;
    CoalgebraData(LinMap comult, LinMap counit);
    static CoalgebraData from_table(const Field& f, std::size_t n, const Table3& d, const Vector& counit);

    const Field& field() const { return comult.field(); }
    std::size_t dim() const { return counit.domain().at(0); }
    Scalar comult_coeff(std::size_t i, std::size_t j, std::size_t k) const { return comult.coeff(j * dim() + k, i); }
    Scalar counit_coeff(std::size_t i) const { return counit.coeff(0, i); }
    LinMap id() const { return LinMap::identity(field(), {dim()}); }

    CoalgebraData coopposite() const;
    bool operator==(const CoalgebraData& o) const { return comult == o.comult && counit == o.counit; }
};

struct BialgebraData {
    AlgebraData algebra;
    CoalgebraData coalgebra;

    BialgebraData() = default;
    BialgebraData(AlgebraData a, CoalgebraData c);
    std::size_t dim() const { return algebra.dim(); }
    const Field& field() const { return algebra.field(); }
};

enum class Side { left, right };

/// Module structure: right M (x) X -> M, left X (x) M -> M.
struct ActionData {
    Side side = Side::right;
    LinMap map;
};

/// Comodule structure: right M -> M (x) X, left M -> X (x) M.
struct CoactionData {
    Side side = Side::right;
    LinMap map;
};

/// Family {x_i, f_i} with sum_i f_i(x) . x_i = x. For module dual bases the
/// functionals land in the ring and the product is the module action.
struct DualBasis {
    std::vector<Vector> elements;
    std::vector<LinMap> functionals;
    std::size_t size() const { return elements.size(); }
};

ValidationReport check_algebra(const AlgebraData& a);
ValidationReport check_coalgebra(const CoalgebraData& c);
ValidationReport check_bialgebra(const BialgebraData& h);

/// Generic module/comodule laws on an object of shape `m`.
ValidationReport check_action(const AlgebraData& a, const Shape& m, const ActionData& act);
ValidationReport check_coaction(const CoalgebraData& c, const Shape& m, const CoactionData& co);

ValidationReport check_comodule_algebra(const BialgebraData& h, const AlgebraData& a, const CoactionData& rho);
ValidationReport check_module_coalgebra(const BialgebraData& h, const CoalgebraData& c, const ActionData& act);
/// i : R -> S unital and multiplicative.
ValidationReport check_algebra_map(const AlgebraData& r, const AlgebraData& s, const LinMap& i);

/// Convolution algebra C* on the dual coordinate basis, or its opposite.
AlgebraData dual_algebra(const CoalgebraData& c, bool opposite = false);

/// sum_i Delta(e_i) (x) e_i^* == sum_{i,j} e_i (x) e_j (x) e_i^* e_j^* in C (x) C (x) C*.
ValidationReport check_coalgebra_dual_basis_identity(const CoalgebraData& c);

} // namespace entwine

#endif
