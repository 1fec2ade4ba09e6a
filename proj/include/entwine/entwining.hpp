#ifndef ENTWINE_ENTWINING_HPP
#define ENTWINE_ENTWINING_HPP

#include "entwine/structures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace entwine {

/// A (right-right) entwining structure. psi : C (x) A -> A (x) C, stored with
/// domain shape {dim C, dim A} and codomain shape {dim A, dim C}.
struct Entwining {
    AlgebraData a;
    CoalgebraData c;
    LinMap psi;

    Entwining() = default;
    Entwining(AlgebraData a, CoalgebraData c, LinMap psi);

    const Field& field() const { return a.field(); }
    std::size_t na() const { return a.dim(); }
    std::size_t nc() const { return c.dim(); }
    /// Coefficient of e_{a2} (x) e_{c2} in psi(e_c (x) e_a).
    Scalar psi_coeff(std::size_t c, std::size_t a, std::size_t a2, std::size_t c2) const {
        return psi.coeff(a2 * nc() + c2, c * na() + a);
    }
};

/// The flip c (x) a -> a (x) c.
Entwining flip_entwining(const AlgebraData& a, const CoalgebraData& c);

ValidationReport check_entwining(const Entwining& e);

/// Bialgebra H, right H-comodule algebra A (coaction A -> A (x) H) and right
/// H-module coalgebra C (action C (x) H -> C).
struct DoiHopfDatum {
    BialgebraData h;
    AlgebraData a;
    LinMap coaction;
    CoalgebraData c;
    LinMap action;
};

ValidationReport check_doi_hopf(const DoiHopfDatum& d);
/// psi(c (x) a) = a_(0) (x) c . a_(1). Throws InvalidStructure on an invalid datum.
Entwining from_doi_hopf(const DoiHopfDatum& d);

/// A space with right A-action and right C-coaction, optionally a left
/// A-action or a left C-coaction. All maps use the object's shape for the
/// M factor. The same container carries (R,S)-bimodules in the ring
/// extension code, where only the two actions are present.
struct EntwinedObject {
    std::string name;
    Shape shape;
    std::optional<LinMap> right_action;   ///< M (x) A -> M
    std::optional<LinMap> right_coaction; ///< M -> M (x) C
    std::optional<LinMap> left_action;    ///< A (x) M -> M
    std::optional<LinMap> left_coaction;  ///< M -> C (x) M

    std::size_t dim() const { return total(shape); }
};

ValidationReport check_entwined_object(const Entwining& e, const EntwinedObject& m);

/// A (x) C with (a (x) c)b = a b_psi (x) c^psi, coaction id (x) Delta, left action by multiplication.
EntwinedObject std_object_AC(const Entwining& e);
/// C (x) A with coaction c_(1) (x) a_psi (x) c_(2)^psi, right multiplication, left coaction Delta (x) id.
EntwinedObject std_object_CA(const Entwining& e);
/// C* (x) A with the bimodule and comodule structure making it isomorphic to A (x) C when (F,G) is Frobenius.
EntwinedObject std_object_CstarA(const Entwining& e);
/// A* (x) C with the structure compared against C (x) A for the (F',G') question.
EntwinedObject std_object_AstarC(const Entwining& e);

/// Left A-action A (x) C* -> C* (x) A on C* (x) A, as a map with shape {A,C} -> {C,A}.
LinMap cstar_twist(const Entwining& e);

/// Checks that psi is a morphism std_object_CA -> std_object_AC of entwined modules.
ValidationReport check_psi_morphism(const Entwining& e);

/// Reformulations of the C* (x) A structure on Hom(C, A):
/// (b f b')(c) = b_psi f(c^psi) b' and f_[0](c) (x) f_[1] = psi(c_(1) (x) f(c_(2))).
ValidationReport check_cstar_functional_form(const Entwining& e);

struct PsiInverse {
    std::optional<LinMap> phi; ///< A (x) C -> C (x) A
    std::size_t rank = 0;
    ValidationReport laws;     ///< left-left counit and comultiplication laws for phi
};

PsiInverse invert_psi(const Entwining& e);

/// Unit/counit triangle identities for (F, G = - (x) C) and (F' = - (x) A, G')
/// on each sample, together with the (co)linearity of the unit and counit maps.
ValidationReport adjunction_check(const Entwining& e, const std::vector<EntwinedObject>& samples);

} // namespace entwine

#endif
