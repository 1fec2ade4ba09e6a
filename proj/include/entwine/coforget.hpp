#ifndef ENTWINE_COFORGET_HPP
#define ENTWINE_COFORGET_HPP

// The functor F forgetting the C-coaction of entwined modules, and its
// right adjoint G = - (x) C.
//
// theta : C (x) C -> A, shapes {C, C} -> {A}
// z     : element of A (x) C, shapes {} -> {A, C}

#include "entwine/entwining.hpp"
#include "entwine/homspaces.hpp"
#include "entwine/verdict.hpp"

namespace entwine::coforget {

/// theta(c (x) d)a = a_{psi Psi} theta(c^Psi (x) d^psi) and
/// theta(c (x) d_(1)) (x) d_(2) = theta(c_(2) (x) d)_psi (x) c_(1)^psi.
std::vector<LinMap> theta_residual(const Entwining& e, const LinMap& theta);
/// a z = z a for all a.
std::vector<LinMap> z_residual(const Entwining& e, const LinMap& z);

SolutionSpace compute_V1(const Entwining& e);
SolutionSpace compute_W1(const Entwining& e);

/// theta o Delta = 1 epsilon. Witness "theta".
Verdict F_separable(const Entwining& e);
/// (id (x) epsilon) z = 1. Witness "z".
Verdict G_separable(const Entwining& e);

/// epsilon(d)1 = sum a_l theta(c_l (x) d) = sum a_l_psi theta(d^psi (x) c_l).
ValidationReport check_frobenius_witnesses(const Entwining& e, const LinMap& theta, const LinMap& z);

/// Left A-linear, right A-linear and right C-colinear maps.
ConstraintSet comparison_constraints();

/// Witnesses "theta", "z", "phi" (C*(x)A -> A(x)C) and "phibar" (A(x)C -> C*(x)A) on yes.
Verdict FG_frobenius(const Entwining& e, Route route = Route::witnesses, const SearchBudget& budget = {});

/// phibar(a (x) c) = sum_i e_i^* (x) a_psi theta(e_i^psi (x) c).
LinMap theta_to_phibar(const Entwining& e, const LinMap& theta);
/// theta(d (x) c) = phibar(1 (x) c)(d).
LinMap phibar_to_theta(const Entwining& e, const LinMap& phibar);
/// phi(c^* (x) a) = sum_l a_l a_psi (x) <c^*, c_l(2)> c_l(1)^psi.
LinMap z_to_phi(const Entwining& e, const LinMap& z);
/// z = phi(epsilon (x) 1).
LinMap phi_to_z(const Entwining& e, const LinMap& phi);

/// Dual basis of A (x) C as a left A-module: elements 1 (x) e_k and maps
/// sigma_k : A (x) C -> A. Throws ContractViolation unless (theta, z) is a Frobenius pair of witnesses.
DualBasis dual_basis_AC(const Entwining& e, const LinMap& theta, const LinMap& z);
/// sum_k sigma_k(x) (1 (x) e_k) = x on every basis vector x.
ValidationReport check_dual_basis_AC(const Entwining& e, const DualBasis& db);

} // namespace entwine::coforget

#endif
