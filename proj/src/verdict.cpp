#include "entwine/verdict.hpp"

namespace entwine {

std::string to_string(Route r) { return r == Route::witnesses ? "witnesses" : "isomorphism"; }

const LinMap* Verdict::find(std::string_view name) const {
    for (const auto& [n, m] : witnesses)
        if (n == name) return &m;
    return nullptr;
}

const LinMap& Verdict::at(std::string_view name) const {
    if (const auto* m = find(name)) return *m;
    throw ContractViolation("verdict has no witness named " + std::string(name));
}

Verdict affine_verdict(const SolutionSpace& space, const std::function<LinMap(const LinMap&)>& l,
                       const LinMap& target, const std::string& witness_name) {
    Verdict v;
    auto x = space.solve_affine(l, target);
    v.examined = 1;
    if (x) {
        v.answer = Answer::yes;
        v.reason = "witness found";
        v.witnesses.emplace_back(witness_name, std::move(*x));
    } else {
        v.answer = Answer::no;
        v.reason = "normalization is inconsistent on a solution space of dimension " + std::to_string(space.dim());
    }
    return v;
}

BilinearProblem bilinear_problem(const SolutionSpace& s_space, const SolutionSpace& t_space,
                                 const std::function<std::vector<LinMap>(const LinMap&, const LinMap&)>& b,
                                 const std::vector<LinMap>& targets) {
    BilinearProblem p;
    p.field = s_space.field();
    p.s_dim = s_space.dim();
    p.t_dim = t_space.dim();
    p.target = flatten_maps(targets);
    p.terms.resize(p.s_dim);
    for (std::size_t i = 0; i < p.s_dim; ++i)
        for (std::size_t j = 0; j < p.t_dim; ++j) p.terms[i].push_back(flatten_maps(b(s_space.basis()[i], t_space.basis()[j])));
    return p;
}

} // namespace entwine
