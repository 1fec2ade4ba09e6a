#ifndef ENTWINE_SMASH_HPP
#define ENTWINE_SMASH_HPP

// Factorization structures (B, A, R) with R : A (x) B -> B (x) A, written
// R(a (x) b) = b_R (x) a_R, and the smash product B #_R A.

#include "entwine/entwining.hpp"
#include "entwine/ringext.hpp"
#include "entwine/verdict.hpp"

#include <optional>

namespace entwine::smash {

struct Factorization {
    AlgebraData b;
    AlgebraData a;
    LinMap rmap; ///< {A, B} -> {B, A}

    Factorization() = default;
    /// Only reshapes rmap; validation is left to check_factorization so that
    /// invalid candidates can still be inspected.
    Factorization(AlgebraData b, AlgebraData a, LinMap rmap);

    const Field& field() const { return a.field(); }
    std::size_t nb() const { return b.dim(); }
    std::size_t na() const { return a.dim(); }
};

/// R(ac (x) b), R(a (x) bd), R(a (x) 1), R(1 (x) b).
ValidationReport check_factorization(const Factorization& f);

/// (b # a)(d # c) = b d_R # a_R c on B (x) A, without validation.
AlgebraData smash_multiplication(const Factorization& f);
/// Throws InvalidStructure when f is not a factorization structure.
AlgebraData smash_product(const Factorization& f);

/// kappa : B -> A with a kappa(b) = kappa(b_R) a_R.
SolutionSpace compute_V3(const Factorization& f);
/// b^1 (x) b^2 (x) a^2 in B (x) B (x) A, as elements {} -> {B, B, A}.
SolutionSpace compute_W3(const Factorization& f);

std::vector<LinMap> kappa_residual(const Factorization& f, const LinMap& kappa);
std::vector<LinMap> w3_residual(const Factorization& f, const LinMap& e);

/// R = A, S = B #_R A with a -> 1 # a.
ringext::RingExtension over_A_extension(const Factorization& f);
/// R = B, S = B #_R A with b -> b # 1.
ringext::RingExtension over_B_extension(const Factorization& f);

ValidationReport check_frobenius_witnesses(const Factorization& f, const LinMap& kappa, const LinMap& e);

/// gamma((b # a) (x)_A (d # c)) = b (x) d_R (x) a_R c, in the quotient
/// coordinates of tensor_over_R(over_A_extension(f)).
LinMap gamma(const Factorization& f, const ringext::TensorOverR& q);
LinMap gamma_inverse(const Factorization& f, const ringext::TensorOverR& q);
/// gamma is bijective, carries the Casimir elements onto W3, and
/// nu -> nu(- # 1) carries the conditional expectations onto V3.
ValidationReport check_gamma_bridge(const Factorization& f);

struct ExtensionReport {
    std::string extension;
    Verdict split;     ///< witness "kappa"
    Verdict separable; ///< witness "e"
    Verdict frobenius; ///< witnesses "kappa", "e"
    /// The same three questions asked of the ring extension directly.
    Verdict ringext_split;
    Verdict ringext_separable;
    Verdict ringext_frobenius;
    std::size_t v3_dim = 0;
    std::size_t w3_dim = 0;
    std::size_t v1_dim = 0;
    std::size_t w1_dim = 0;
    /// No definite answer contradicts another and the dimensions agree.
    bool consistent = false;
};

/// B #_R A / A. Throws InvalidStructure on an invalid factorization.
ExtensionReport smash_over_A_report(const Factorization& f, const SearchBudget& budget = {});
/// B #_R A / B through op_dual: the verdicts and witnesses are those of
/// (A^op #_R~ B^op) / B^op; the ring extension cross-check uses b -> b # 1.
ExtensionReport smash_over_B_report(const Factorization& f, const SearchBudget& budget = {});

/// (A^op, B^op, R~) with R~(b (x) a) = a_R (x) b_R.
Factorization op_dual(const Factorization& f);
/// a # b -> b # a as an algebra map (A^op #_R~ B^op)^op -> B #_R A.
ValidationReport check_op_dual_isomorphism(const Factorization& f);

/// B = (C^*)^op on the dual coordinate basis and
/// R(a (x) c^*) = sum_i <c^*, c_i^psi> c_i^* (x) a_psi.
Factorization entwining_to_factorization(const Entwining& e);
/// psi(c (x) a) = sum_i a_R (x) <(c_i^*)_R, c> c_i. Throws ContractViolation
/// unless f.b is (C^*)^op for the given C.
Entwining factorization_to_entwining(const Factorization& f, const CoalgebraData& c);

struct CrossCheck {
    Verdict coforget;
    Verdict smash;
    bool agree = false;
};

/// FG_frobenius(e) against the Frobenius verdict of (C^*)^op #_R A / A.
CrossCheck cross_check_frobenius(const Entwining& e, const SearchBudget& budget = {});
/// The same, reusing a witness-route FG_frobenius verdict already computed for e.
CrossCheck cross_check_frobenius(const Entwining& e, const Verdict& coforget, const SearchBudget& budget = {});

} // namespace entwine::smash

#endif
