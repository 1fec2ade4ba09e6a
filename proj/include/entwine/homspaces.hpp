#ifndef ENTWINE_HOMSPACES_HPP
#define ENTWINE_HOMSPACES_HPP

#include "entwine/entwining.hpp"
#include "entwine/search.hpp"
#include "entwine/solution_space.hpp"

#include <optional>
#include <string>

namespace entwine {

/// Which structure maps a morphism must respect. Each flag needs the
/// corresponding structure on both objects.
struct ConstraintSet {
    bool right_action = false;
    bool left_action = false;
    bool right_coaction = false;
    bool left_coaction = false;

    std::string describe() const;
};

/// Linear maps f : X -> Y (domain {dim X}, codomain {dim Y}) commuting with
/// every flagged structure. Throws ContractViolation for unsupported flags.
SolutionSpace hom_basis(const EntwinedObject& x, const EntwinedObject& y, const ConstraintSet& cs);

enum class IsoKind { yes, no, probably_no };
std::string to_string(IsoKind k);

struct IsoVerdict {
    IsoKind kind = IsoKind::probably_no;
    std::string reason;
    std::optional<LinMap> forward;  ///< X -> Y
    std::optional<LinMap> backward; ///< Y -> X, the verified two-sided inverse
    std::size_t hom_dim = 0;
    std::uint64_t examined = 0;
    std::uint64_t seed = 0;
};

/// Searches Hom(X, Y) for an invertible element. Over F_p within the
/// enumeration budget the answer is definitive; otherwise a failed search
/// reports probably_no, never no (unless a rank certificate rules isomorphism out).
IsoVerdict iso_exists(const EntwinedObject& x, const EntwinedObject& y, const ConstraintSet& cs,
                      const SearchBudget& budget = {});

} // namespace entwine

#endif
