#ifndef ENTWINE_CORPUS_HPP
#define ENTWINE_CORPUS_HPP

// Built-in example structures and a seeded Doi-Hopf generator.

#include "entwine/entwining.hpp"
#include "entwine/ringext.hpp"
#include "entwine/smash.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace entwine::corpus {

enum class Kind { algebra, coalgebra, bialgebra, doi_hopf, entwining, factorization, ring_extension };
std::string to_string(Kind k);

using Payload = std::variant<AlgebraData, CoalgebraData, BialgebraData, DoiHopfDatum, Entwining, smash::Factorization,
                             ringext::RingExtension>;

struct CorpusEntry {
    std::string name;
    Field field;
    Payload payload;
    std::string note;
    /// For factorizations with B = (C^*)^op.
    std::optional<CoalgebraData> dual_of;

    Kind kind() const { return static_cast<Kind>(payload.index()); }
    /// The entwining carried by an entwining or Doi-Hopf entry.
    std::optional<Entwining> entwining() const;
};

/// Sorted names of every builtin.
const std::vector<std::string>& builtin_names();
/// Throws ContractViolation for an unknown name.
CorpusEntry builtin(const std::string& name, const Field& f);
std::vector<CorpusEntry> all_builtins(const Field& f);
/// The entwinings of all entwining and Doi-Hopf builtins, with their names.
std::vector<std::pair<std::string, Entwining>> builtin_entwinings(const Field& f);
std::vector<std::pair<std::string, ringext::RingExtension>> builtin_extensions(const Field& f);

/// Every validator applicable to the payload.
ValidationReport validate(const Payload& p);
ValidationReport validate(const CorpusEntry& e);

/// The structure maps of a payload, in a fixed order, and the inverse
/// operation (no validation on rebuild).
std::vector<std::pair<std::string, LinMap>> components(const Payload& p);
Payload with_component(const Payload& p, const std::string& name, const LinMap& value);

/// One structure constant of one component increased by 1.
struct Mutation {
    std::string entry;
    std::string component;
    std::size_t row = 0;
    std::size_t col = 0;
};
/// `count` seeded mutations spread over the builtins.
std::vector<Mutation> standard_mutations(const Field& f, std::size_t count, std::uint64_t seed);
Payload apply_mutation(const Payload& p, const Mutation& m);

// Building blocks, exposed for tests and the generator.
AlgebraData trivial_algebra(const Field& f);
AlgebraData cyclic_group_algebra(const Field& f, std::size_t n);
AlgebraData matrix_algebra(const Field& f, std::size_t n);
AlgebraData diagonal_algebra(const Field& f, std::size_t n);
/// k[x]/(x^n).
AlgebraData truncated_polynomials(const Field& f, std::size_t n);
CoalgebraData grouplike_coalgebra(const Field& f, std::size_t n);
/// Divided powers: Delta(x_n) = sum_{i+j=n} x_i (x) x_j, epsilon(x_n) = delta_n0.
CoalgebraData divided_power_coalgebra(const Field& f, std::size_t n);
CoalgebraData matrix_coalgebra(const Field& f, std::size_t n);
BialgebraData cyclic_group_bialgebra(const Field& f, std::size_t n);
/// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.
BialgebraData sweedler_bialgebra(const Field& f);

/// Rejection-samples a grading of A and a permutation action on C for
/// H = kC_h with dims = {h, dim A, dim C}. Deterministic for a fixed seed.
std::optional<DoiHopfDatum> random_doi_hopf(std::array<std::size_t, 3> dims, const Field& f, std::uint64_t seed,
                                            std::size_t attempts = 64);

} // namespace entwine::corpus

#endif
