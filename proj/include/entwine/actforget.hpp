#ifndef ENTWINE_ACTFORGET_HPP
#define ENTWINE_ACTFORGET_HPP

// The functor G' forgetting the A-action of entwined modules, and its left
// adjoint F' = - (x) A.
//
// vartheta : C (x) A -> k, shapes {C, A} -> {}
// e        : C -> A (x) A, shapes {C} -> {A, A}

#include "entwine/entwining.hpp"
#include "entwine/homspaces.hpp"
#include "entwine/verdict.hpp"

namespace entwine::actforget {

/// vartheta(c_(1) (x) a_psi) c_(2)^psi = vartheta(c_(2) (x) a) c_(1).
std::vector<LinMap> vartheta_residual(const Entwining& en, const LinMap& vartheta);
/// e(c_(1)) (x) c_(2) = e^1(c_(2))_psi (x) e^2(c_(2))_Psi (x) c_(1)^{psi Psi} and
/// e^1(c) (x) e^2(c) a = a_psi e^1(c^psi) (x) e^2(c^psi).
std::vector<LinMap> e_residual(const Entwining& en, const LinMap& e);

SolutionSpace compute_V1prime(const Entwining& en);
SolutionSpace compute_W1prime(const Entwining& en);

/// vartheta(c (x) 1) = epsilon(c). Witness "vartheta".
Verdict Fprime_separable(const Entwining& en);
/// e^1(c) e^2(c) = epsilon(c) 1. Witness "e".
Verdict Gprime_separable(const Entwining& en);

/// epsilon(c)1 = vartheta(c_(1) (x) e^1(c_(2))) e^2(c_(2)) = vartheta(c_(1)^psi (x) e^2(c_(2))) e^1(c_(2))_psi.
ValidationReport check_frobenius_witnesses(const Entwining& en, const LinMap& vartheta, const LinMap& e);

/// Left C-colinear, right C-colinear and right A-linear maps.
ConstraintSet comparison_constraints();

/// Witnesses "vartheta", "e", "Omega" (A*(x)C -> C(x)A) and "Omegabar" (C(x)A -> A*(x)C) on yes.
Verdict FprimeGprime_frobenius(const Entwining& en, Route route = Route::witnesses, const SearchBudget& budget = {});

/// Omega(a^* (x) c) = <a^*, e^1(c_(2))_psi> c_(1)^psi (x) e^2(c_(2)).
LinMap e_to_Omega(const Entwining& en, const LinMap& e);
/// e(c) = sum_i e_i (x) (epsilon (x) id) Omega(e_i^* (x) c).
LinMap Omega_to_e(const Entwining& en, const LinMap& omega);
/// Omegabar(c (x) a) = sum_i vartheta(c_(1) (x) a_psi e_i) e_i^* (x) c_(2)^psi.
LinMap vartheta_to_Omegabar(const Entwining& en, const LinMap& vartheta);
/// vartheta(c (x) a) = <Omegabar(c (x) a), 1 (x) epsilon>.
LinMap Omegabar_to_vartheta(const Entwining& en, const LinMap& omegabar);

/// Dual basis {e_i, a_i^*} of A as a vector space, built from Frobenius
/// witnesses, the inverse of psi, and an element c with epsilon(c) = 1.
/// Throws ContractViolation when psi is not invertible or the witnesses fail.
DualBasis dual_basis_A(const Entwining& en, const LinMap& vartheta, const LinMap& e);
ValidationReport check_dual_basis_A(const Entwining& en, const DualBasis& db);

} // namespace entwine::actforget

#endif
