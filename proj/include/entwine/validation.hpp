#ifndef ENTWINE_VALIDATION_HPP
#define ENTWINE_VALIDATION_HPP

#include "entwine/linmap.hpp"

#include <string>
#include <vector>

namespace entwine {

/// One violated law, located at the first basis input where the two sides
/// of the identity disagree.
struct Failure {
    std::string law;
    std::vector<std::size_t> input;  ///< multi-index into the domain shape
    std::vector<std::size_t> output; ///< multi-index into the codomain shape
    std::string lhs;
    std::string rhs;
};

struct ValidationReport {
    std::string subject;
    std::vector<Failure> failures;

    bool valid() const { return failures.empty(); }
    /// Appends another report's failures, prefixing their law names.
    void absorb(const ValidationReport& other, const std::string& prefix = {});
    std::string summary() const;
};

/// Thrown when a constructor is handed data that fails its validator.
class InvalidStructure : public ContractViolation {
public:
    explicit InvalidStructure(ValidationReport r) : ContractViolation(r.summary()), report_(std::move(r)) {}
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Throws InvalidStructure unless the report is clean.
void require_valid(const ValidationReport& r);

/// Records a failure in `report` unless lhs == rhs exactly. Returns whether they agree.
bool expect_equal(ValidationReport& report, const std::string& law, const LinMap& lhs, const LinMap& rhs);

} // namespace entwine

#endif
