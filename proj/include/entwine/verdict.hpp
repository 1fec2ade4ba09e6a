#ifndef ENTWINE_VERDICT_HPP
#define ENTWINE_VERDICT_HPP

#include "entwine/search.hpp"
#include "entwine/solution_space.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entwine {

/// How a Frobenius question is settled: by a joint witness search, or by
/// looking for an isomorphism between the two comparison objects.
enum class Route { witnesses, isomorphism };
std::string to_string(Route r);

/// Answer to one question, with named witnesses when the answer is yes.
struct Verdict {
    Answer answer = Answer::unknown;
    std::string reason;
    std::vector<std::pair<std::string, LinMap>> witnesses;
    std::uint64_t examined = 0;

    bool yes() const { return answer == Answer::yes; }
    const LinMap* find(std::string_view name) const;
    /// Throws ContractViolation when the witness is absent.
    const LinMap& at(std::string_view name) const;
};

/// Looks for X in `space` with l(X) = target.
Verdict affine_verdict(const SolutionSpace& space, const std::function<LinMap(const LinMap&)>& l,
                       const LinMap& target, const std::string& witness_name);

/// Builds the bilinear system sum s_i t_j B(s_basis_i, t_basis_j) = target from a
/// bilinear evaluator returning the list of maps that must equal `targets`.
BilinearProblem bilinear_problem(const SolutionSpace& s_space, const SolutionSpace& t_space,
                                 const std::function<std::vector<LinMap>(const LinMap&, const LinMap&)>& b,
                                 const std::vector<LinMap>& targets);

} // namespace entwine

#endif
