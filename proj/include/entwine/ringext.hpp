#ifndef ENTWINE_RINGEXT_HPP
#define ENTWINE_RINGEXT_HPP

// Algebra maps i : R -> S, and the induction / restriction adjunction
// between right R-modules and right S-modules.

#include "entwine/entwining.hpp"
#include "entwine/homspaces.hpp"
#include "entwine/verdict.hpp"

namespace entwine::ringext {

struct RingExtension {
    AlgebraData r;
    AlgebraData s;
    LinMap i; ///< {R} -> {S}

    RingExtension() = default;
    /// Throws InvalidStructure when i is not a unital algebra map.
    RingExtension(AlgebraData r, AlgebraData s, LinMap i);

    const Field& field() const { return s.field(); }
    std::size_t nr() const { return r.dim(); }
    std::size_t ns() const { return s.dim(); }
};

/// S (x)_R S as a quotient of S (x) S. Coordinates of the quotient are the
/// non-pivot coordinates of the row-reduced relation space.
struct TensorOverR {
    std::size_t dim = 0;
    LinMap projection; ///< {S, S} -> {dim}
    LinMap section;    ///< {dim} -> {S, S}, projection o section = id
};

TensorOverR tensor_over_R(const RingExtension& x);

/// R-bimodule maps S -> R.
SolutionSpace conditional_expectations(const RingExtension& x);
/// e in S (x)_R S with s e = e s, as elements {} -> {dim}.
SolutionSpace casimir_elements(const RingExtension& x, const TensorOverR& q);
SolutionSpace casimir_elements(const RingExtension& x);

/// nu(1) = 1. Witness "nu".
Verdict split_check(const RingExtension& x);
/// e^1 e^2 = 1. Witness "e" (quotient coordinates) and "e_lift" (in S (x) S).
Verdict separable_check(const RingExtension& x);

/// nu(e^1) e^2 = e^1 nu(e^2) = 1.
ValidationReport check_frobenius_witnesses(const RingExtension& x, const TensorOverR& q, const LinMap& nu, const LinMap& e);

/// Right R-linear maps S -> R, as maps {S} -> {R}.
SolutionSpace hom_R(const RingExtension& x);
/// Hom_R(S, R) as an (R, S)-bimodule in the coordinates of `hom`:
/// (r f s)(t) = r f(s t).
EntwinedObject hom_R_bimodule(const RingExtension& x, const SolutionSpace& hom);
/// S as an (R, S)-bimodule.
EntwinedObject s_bimodule(const RingExtension& x);
ConstraintSet bimodule_constraints();

/// A dual basis {e_i, sigma_i} of S as a right R-module with the e_i the
/// coordinate basis, when S is projective over R.
std::optional<DualBasis> projective_dual_basis(const RingExtension& x, const SolutionSpace& hom);

/// phibar(s) = nu(s -), as a map {S} -> {dim hom}.
LinMap nu_to_phibar(const RingExtension& x, const SolutionSpace& hom, const LinMap& nu);
/// nu = phibar(1).
LinMap phibar_to_nu(const RingExtension& x, const SolutionSpace& hom, const LinMap& phibar);
/// phi(f) = f(e^1) e^2, as a map {dim hom} -> {S}.
LinMap e_to_phi(const RingExtension& x, const TensorOverR& q, const SolutionSpace& hom, const LinMap& e);
/// e = sum_i e_i (x) phi(sigma_i) for a dual basis of S over R.
LinMap phi_to_e(const RingExtension& x, const TensorOverR& q, const SolutionSpace& hom, const DualBasis& db,
                const LinMap& phi);

/// Witnesses "nu", "e", "phi", "phibar" on yes.
Verdict frobenius_check(const RingExtension& x, Route route = Route::witnesses, const SearchBudget& budget = {});

/// {e^1, nu(e^2 -)} aggregated over the first tensor factor.
DualBasis dual_basis_S(const RingExtension& x, const TensorOverR& q, const LinMap& nu, const LinMap& e);
/// sum_i x_i i(f_i(s)) = s for every basis s.
ValidationReport check_dual_basis_S(const RingExtension& x, const DualBasis& db);

} // namespace entwine::ringext

#endif
