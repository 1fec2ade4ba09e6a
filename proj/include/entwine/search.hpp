#ifndef ENTWINE_SEARCH_HPP
#define ENTWINE_SEARCH_HPP

#include "entwine/linmap.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace entwine {

enum class Answer { yes, no, unknown };

std::string to_string(Answer a);

struct SearchBudget {
    std::uint64_t enum_budget = 1ULL << 16;
    std::uint64_t trials = 64;
    std::uint64_t seed = 0;
    bool parallel = true;
};

/// False when ENTWINE_NO_PARALLEL=1 is set or the budget disables it.
bool parallel_enabled(const SearchBudget& b);

/// Outcome of scanning coefficient vectors of a d-dimensional space.
template <class T>
struct SearchOutcome {
    std::optional<T> witness;
    /// The scan covered every candidate up to nonzero scaling.
    bool exhaustive = false;
    std::uint64_t examined = 0;
};

namespace detail {

struct CandidatePlan {
    Field field;
    std::size_t dim = 0;
    std::uint64_t enumerated = 0; ///< candidates taken from the exhaustive/grid phase
    std::uint64_t random = 0;     ///< candidates drawn afterwards
    std::uint64_t base = 3;       ///< p for full F_p enumeration, 3 for the {0,1,-1} grid
    bool exhaustive = false;
    std::uint64_t seed = 0;
};

CandidatePlan plan_search(const Field& f, std::size_t dim, const SearchBudget& b);
Vector candidate(const CandidatePlan& plan, std::uint64_t index);

/// Runs body(index) over [0, n) and returns the smallest index for which it
/// succeeded. Chunks are handed out in increasing order, so the answer does
/// not depend on thread count.
std::optional<std::uint64_t> first_success(std::uint64_t n, bool parallel,
                                           const std::function<bool(std::uint64_t)>& body);

} // namespace detail

/// Scans coefficient vectors in a fixed order: over F_p with p^d within the
/// enumeration budget every vector is visited; otherwise (and over Q) the
/// {0, 1, -1} grid comes first, followed by `trials` seeded random vectors.
/// `test` must be invariant under nonzero scaling of its argument for the
/// `exhaustive` flag to be meaningful. It must be safe to call concurrently.
template <class T>
SearchOutcome<T> search(const Field& f, std::size_t dim, const SearchBudget& budget,
                        const std::function<std::optional<T>(const Vector&)>& test) {
    auto plan = detail::plan_search(f, dim, budget);
    const std::uint64_t n = plan.enumerated + plan.random;
    auto hit = detail::first_success(n, parallel_enabled(budget), [&](std::uint64_t i) {
        return test(detail::candidate(plan, i)).has_value();
    });
    SearchOutcome<T> out;
    out.exhaustive = plan.exhaustive;
    if (hit) {
        out.witness = test(detail::candidate(plan, *hit));
        out.examined = *hit + 1;
    } else {
        out.examined = n;
    }
    return out;
}

/// Find s, t with sum_{i,j} s_i t_j terms[i][j] = target (each term a
/// coordinate vector of equal length).
struct BilinearProblem {
    Field field;
    std::size_t s_dim = 0;
    std::size_t t_dim = 0;
    std::vector<std::vector<Vector>> terms;
    Vector target;
};

struct BilinearResult {
    Answer answer = Answer::unknown;
    std::string reason;
    Vector s;
    Vector t;
    std::uint64_t examined = 0;
};

BilinearResult solve_bilinear(const BilinearProblem& p, const SearchBudget& budget);

} // namespace entwine

#endif
