#include "entwine/validation.hpp"

#include <sstream>

namespace entwine {

void ValidationReport::absorb(const ValidationReport& other, const std::string& prefix) {
    for (auto f : other.failures) {
        if (!prefix.empty()) f.law = prefix + ": " + f.law;
        failures.push_back(std::move(f));
    }
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << subject << ": ";
    if (valid()) {
        os << "valid";
        return os.str();
    }
    os << failures.size() << " failure(s)";
    for (const auto& f : failures) {
        os << "\n  " << f.law << " at input (";
        for (std::size_t k = 0; k < f.input.size(); ++k) os << (k ? "," : "") << f.input[k];
        os << ") output (";
        for (std::size_t k = 0; k < f.output.size(); ++k) os << (k ? "," : "") << f.output[k];
        os << "): " << f.lhs << " != " << f.rhs;
    }
    return os.str();
}

void require_valid(const ValidationReport& r) {
    if (!r.valid()) throw InvalidStructure(r);
}

bool expect_equal(ValidationReport& report, const std::string& law, const LinMap& lhs, const LinMap& rhs) {
    if (total(lhs.domain()) != total(rhs.domain()) || total(lhs.codomain()) != total(rhs.codomain()))
        throw ContractViolation(law + ": sides have shapes " + shape_string(lhs.domain()) + "->" +
                                shape_string(lhs.codomain()) + " and " + shape_string(rhs.domain()) + "->" +
                                shape_string(rhs.codomain()));
    auto diff = lhs.matrix().first_difference(rhs.matrix());
    if (!diff) return true;
    auto [row, col] = *diff;
    report.failures.push_back(Failure{law, unflatten(lhs.domain(), col), unflatten(lhs.codomain(), row),
                                      lhs.coeff(row, col).to_string(), rhs.coeff(row, col).to_string()});
    return false;
}

} // namespace entwine
