#ifndef ENTWINE_CLI_HPP
#define ENTWINE_CLI_HPP

#include "entwine/io.hpp"
#include "entwine/verdict.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace entwine::cli {

inline constexpr const char* version = "entwine 1.0.0";

enum ExitCode { exit_yes = 0, exit_no = 1, exit_input = 2, exit_unknown = 3 };

const std::vector<std::string>& questions();

struct AnalyzeOptions {
    std::string question;
    Route route = Route::witnesses;
    SearchBudget budget;
    bool timing = false;
};

struct Outcome {
    io::json report;
    int exit_code = exit_yes;
};

/// Runs every applicable validator on every payload of the file.
Outcome validate_file(const io::StructureFile& file);
/// Throws ContractViolation when the question does not fit the payloads.
Outcome analyze(const io::StructureFile& file, const AnalyzeOptions& opts);

struct SuiteOptions {
    std::vector<Field> fields{Field::prime(2), Field::prime(3)};
    /// Test mode: perturb one structure constant of this entry first.
    std::optional<std::string> inject_mutation;
    SearchBudget budget;
};

/// The cross-module equivalence suite over the builtins, as a pass/fail
/// matrix. Exit 0 iff every cell passes.
Outcome corpus_run(const SuiteOptions& opts);
io::json corpus_list();

/// Human-readable rendering of a report.
std::string render_text(const io::json& report);

/// Parses "Q", "F<p>" or "Fp:<p>".
Field parse_field_name(const std::string& s);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace entwine::cli

#endif
