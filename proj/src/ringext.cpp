#include "entwine/ringext.hpp"

namespace entwine::ringext {

namespace {

LinMap id(const Field& f, std::size_t n) { return LinMap::identity(f, {n}); }

LinMap basis_element(const Field& f, std::size_t n, std::size_t k) {
    Vector v(n, f.zero());
    v[k] = f.one();
    return LinMap::element(f, {n}, v);
}

void require_zero(const std::vector<LinMap>& residual, const char* what) {
    for (const auto& r : residual)
        if (!r.is_zero()) throw ContractViolation(std::string(what) + " violates its defining conditions");
}

std::vector<LinMap> nu_residual(const RingExtension& x, const LinMap& nu0) {
    const Field& f = x.field();
    auto nu = nu0.reshaped({x.ns()}, {x.nr()});
    auto is = id(f, x.ns()), ir = id(f, x.nr());
    return {nu * x.s.mult * tensor(x.i, is) - x.r.mult * tensor(ir, nu),
            nu * x.s.mult * tensor(is, x.i) - x.r.mult * tensor(nu, ir)};
}

std::vector<LinMap> casimir_residual(const RingExtension& x, const TensorOverR& q, const LinMap& e0) {
    const Field& f = x.field();
    auto is = id(f, x.ns());
    auto lifted = q.section * e0.reshaped({}, {q.dim});
    return {q.projection * tensor(x.s.mult, is) * tensor(is, lifted) - q.projection * tensor(is, x.s.mult) * tensor(lifted, is)};
}

std::vector<LinMap> normalizations(const RingExtension& x, const TensorOverR& q, const LinMap& nu0, const LinMap& e0) {
    const Field& f = x.field();
    auto nu = nu0.reshaped({x.ns()}, {x.nr()});
    auto is = id(f, x.ns());
    auto lifted = q.section * e0.reshaped({}, {q.dim});
    return {x.s.mult * tensor(x.i, is) * tensor(nu, is) * lifted, x.s.mult * tensor(is, x.i) * tensor(is, nu) * lifted};
}

std::vector<LinMap> hom_residual(const RingExtension& x, const LinMap& g0) {
    auto g = g0.reshaped({x.ns()}, {x.nr()});
    return {g * x.s.mult * tensor(id(x.field(), x.ns()), x.i) - x.r.mult * tensor(g, id(x.field(), x.nr()))};
}

Vector coordinates(const SolutionSpace& hom, const LinMap& g, const char* what) {
    auto c = hom.coordinates_of(g);
    if (!c) throw std::logic_error(std::string(what) + " left Hom_R(S, R)");
    return *c;
}

} // namespace

RingExtension::RingExtension(AlgebraData r_, AlgebraData s_, LinMap i_) : r(std::move(r_)), s(std::move(s_)), i(std::move(i_)) {
    if (r.field() != s.field() || i.field() != s.field()) throw ContractViolation("ring extension over different fields");
    if (total(i.domain()) != r.dim() || total(i.codomain()) != s.dim()) throw ContractViolation("i must be a map R -> S");
    i = i.reshaped({r.dim()}, {s.dim()});
    ValidationReport rep{"ring extension", {}};
    rep.absorb(check_algebra(r), "R");
    rep.absorb(check_algebra(s), "S");
    rep.absorb(check_algebra_map(r, s, i), "i");
    require_valid(rep);
}

TensorOverR tensor_over_R(const RingExtension& x) {
    const Field& f = x.field();
    const std::size_t ns = x.ns();
    auto is = id(f, ns);
    // column (s, r, t) is s i(r) (x) t - s (x) i(r) t
    auto rel = tensor(x.s.mult * tensor(is, x.i), is) - tensor(is, x.s.mult * tensor(x.i, is));
    auto ech = rel.matrix().transpose().rref();
    std::vector<bool> is_pivot(ns * ns, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < ns * ns; ++k)
        if (!is_pivot[k]) free.push_back(k);

    TensorOverR q;
    q.dim = free.size();
    Matrix proj(f, q.dim, ns * ns), sec(f, ns * ns, q.dim);
    for (std::size_t j = 0; j < q.dim; ++j) {
        proj.set(j, free[j], f.one());
        sec.set(free[j], j, f.one());
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            auto v = ech.reduced.at(r, free[j]);
            if (!v.is_zero()) proj.set(j, ech.pivots[r], -v);
        }
    }
    q.projection = LinMap({ns, ns}, {q.dim}, std::move(proj));
    q.section = LinMap({q.dim}, {ns, ns}, std::move(sec));
    if (q.projection * q.section != LinMap::identity(f, {q.dim}) || !(q.projection * rel).is_zero())
        throw std::logic_error("tensor_over_R: inconsistent quotient");
    return q;
}

SolutionSpace conditional_expectations(const RingExtension& x) {
    return solve_homogeneous(x.field(), {x.ns()}, {x.nr()}, [x](const LinMap& nu) { return nu_residual(x, nu); });
}

SolutionSpace casimir_elements(const RingExtension& x, const TensorOverR& q) {
    return solve_homogeneous(x.field(), {}, {q.dim}, [x, q](const LinMap& e) { return casimir_residual(x, q, e); });
}

SolutionSpace casimir_elements(const RingExtension& x) { return casimir_elements(x, tensor_over_R(x)); }

Verdict split_check(const RingExtension& x) {
    auto v = affine_verdict(conditional_expectations(x), [&](const LinMap& nu) { return nu * x.s.unit; }, x.r.unit, "nu");
    if (v.yes()) require_zero(nu_residual(x, v.at("nu")), "nu");
    return v;
}

Verdict separable_check(const RingExtension& x) {
    auto q = tensor_over_R(x);
    auto v = affine_verdict(casimir_elements(x, q), [&](const LinMap& e) { return x.s.mult * q.section * e; }, x.s.unit, "e");
    if (v.yes()) {
        require_zero(casimir_residual(x, q, v.at("e")), "e");
        v.witnesses.emplace_back("e_lift", q.section * v.at("e"));
    }
    return v;
}

ValidationReport check_frobenius_witnesses(const RingExtension& x, const TensorOverR& q, const LinMap& nu, const LinMap& e) {
    ValidationReport r{"Frobenius witnesses (nu, e)", {}};
    for (const auto& d : nu_residual(x, nu)) expect_equal(r, "nu is an R-bimodule map", d, LinMap::zero(x.field(), d.domain(), d.codomain()));
    for (const auto& d : casimir_residual(x, q, e)) expect_equal(r, "e is a Casimir element", d, LinMap::zero(x.field(), d.domain(), d.codomain()));
    auto n = normalizations(x, q, nu, e);
    expect_equal(r, "nu(e^1) e^2 = 1", n[0], x.s.unit);
    expect_equal(r, "e^1 nu(e^2) = 1", n[1], x.s.unit);
    return r;
}

SolutionSpace hom_R(const RingExtension& x) {
    return solve_homogeneous(x.field(), {x.ns()}, {x.nr()}, [x](const LinMap& g) { return hom_residual(x, g); });
}

EntwinedObject hom_R_bimodule(const RingExtension& x, const SolutionSpace& hom) {
    const Field& f = x.field();
    const std::size_t h = hom.dim(), nr = x.nr(), ns = x.ns();
    Matrix left(f, h, nr * h), right(f, h, h * ns);
    for (std::size_t j = 0; j < h; ++j) {
        const auto& g = hom.basis()[j];
        for (std::size_t r = 0; r < nr; ++r) {
            auto c = coordinates(hom, x.r.mult * tensor(basis_element(f, nr, r), g), "left R-action");
            for (std::size_t k = 0; k < h; ++k) left.set(k, r * h + j, c[k]);
        }
        for (std::size_t s = 0; s < ns; ++s) {
            auto c = coordinates(hom, g * x.s.mult * tensor(basis_element(f, ns, s), id(f, ns)), "right S-action");
            for (std::size_t k = 0; k < h; ++k) right.set(k, j * ns + s, c[k]);
        }
    }
    EntwinedObject m;
    m.name = "Hom_R(S,R)";
    m.shape = {h};
    m.left_action = LinMap({nr, h}, {h}, std::move(left));
    m.right_action = LinMap({h, ns}, {h}, std::move(right));
    return m;
}

EntwinedObject s_bimodule(const RingExtension& x) {
    EntwinedObject m;
    m.name = "S";
    m.shape = {x.ns()};
    m.left_action = x.s.mult * tensor(x.i, id(x.field(), x.ns()));
    m.right_action = x.s.mult;
    return m;
}

ConstraintSet bimodule_constraints() {
    ConstraintSet cs;
    cs.left_action = true;
    cs.right_action = true;
    return cs;
}

std::optional<DualBasis> projective_dual_basis(const RingExtension& x, const SolutionSpace& hom) {
    const Field& f = x.field();
    const std::size_t ns = x.ns(), h = hom.dim();
    // sum_{i,j} c_ij e_i i(f_j(s)) = s
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < h; ++j)
            cols.push_back(flatten_map(x.s.mult * tensor(basis_element(f, ns, i), x.i * hom.basis()[j])));
    auto target = flatten_map(id(f, ns));
    auto sol = solve_linear(Matrix::from_columns(f, cols, target.size()), target);
    if (!sol.particular) return std::nullopt;
    DualBasis db;
    for (std::size_t i = 0; i < ns; ++i) {
        Vector c(sol.particular->begin() + static_cast<std::ptrdiff_t>(i * h),
                 sol.particular->begin() + static_cast<std::ptrdiff_t>((i + 1) * h));
        db.elements.push_back(basis_element(f, ns, i).image_of_basis(0));
        db.functionals.push_back(h ? hom.combine(c) : LinMap::zero(f, {ns}, {x.nr()}));
    }
    return db;
}

LinMap nu_to_phibar(const RingExtension& x, const SolutionSpace& hom, const LinMap& nu0) {
    require_zero(nu_residual(x, nu0), "nu");
    const Field& f = x.field();
    const std::size_t ns = x.ns(), h = hom.dim();
    auto nu = nu0.reshaped({ns}, {x.nr()});
    Matrix m(f, h, ns);
    for (std::size_t s = 0; s < ns; ++s) {
        auto c = coordinates(hom, nu * x.s.mult * tensor(basis_element(f, ns, s), id(f, ns)), "nu(s -)");
        for (std::size_t k = 0; k < h; ++k) m.set(k, s, c[k]);
    }
    return LinMap({ns}, {h}, std::move(m));
}

LinMap phibar_to_nu(const RingExtension& x, const SolutionSpace& hom, const LinMap& phibar) {
    auto c = phibar.reshaped({x.ns()}, {hom.dim()}).apply(x.s.unit_vector());
    return hom.combine(c);
}

LinMap e_to_phi(const RingExtension& x, const TensorOverR& q, const SolutionSpace& hom, const LinMap& e) {
    require_zero(casimir_residual(x, q, e), "e");
    const Field& f = x.field();
    const std::size_t ns = x.ns(), h = hom.dim();
    auto lifted = q.section * e.reshaped({}, {q.dim});
    Matrix m(f, ns, h);
    for (std::size_t j = 0; j < h; ++j) {
        auto img = x.s.mult * tensor(x.i, id(f, ns)) * tensor(hom.basis()[j], id(f, ns)) * lifted;
        for (std::size_t k = 0; k < ns; ++k) m.set(k, j, img.coeff(k, 0));
    }
    return LinMap({h}, {ns}, std::move(m));
}

LinMap phi_to_e(const RingExtension& x, const TensorOverR& q, const SolutionSpace& hom, const DualBasis& db,
                const LinMap& phi) {
    const Field& f = x.field();
    const std::size_t ns = x.ns();
    auto p = phi.reshaped({hom.dim()}, {ns});
    LinMap lifted = LinMap::zero(f, {}, {ns, ns});
    for (std::size_t i = 0; i < db.size(); ++i) {
        auto image = p.apply(coordinates(hom, db.functionals[i], "dual basis functional"));
        lifted = lifted + tensor(LinMap::element(f, {ns}, db.elements[i]), LinMap::element(f, {ns}, image));
    }
    return q.projection * lifted;
}

Verdict frobenius_check(const RingExtension& x, Route route, const SearchBudget& budget) {
    Verdict v;
    auto q = tensor_over_R(x);
    auto hom = hom_R(x);
    LinMap nu, e;
    if (route == Route::witnesses) {
        auto w1 = casimir_elements(x, q);
        auto v1 = conditional_expectations(x);
        auto problem = bilinear_problem(
            w1, v1, [&](const LinMap& ee, const LinMap& nn) { return normalizations(x, q, nn, ee); }, {x.s.unit, x.s.unit});
        auto res = solve_bilinear(problem, budget);
        v.answer = res.answer;
        v.reason = res.reason;
        v.examined = res.examined;
        if (res.answer != Answer::yes) return v;
        e = w1.combine(res.s);
        nu = v1.combine(res.t);
    } else {
        auto db = projective_dual_basis(x, hom);
        if (!db) {
            v.answer = Answer::no;
            v.reason = "S is not projective as a right R-module";
            return v;
        }
        auto iso = iso_exists(hom_R_bimodule(x, hom), s_bimodule(x), bimodule_constraints(), budget);
        v.examined = iso.examined;
        v.reason = iso.reason;
        if (iso.kind != IsoKind::yes) {
            v.answer = iso.kind == IsoKind::no ? Answer::no : Answer::unknown;
            return v;
        }
        v.answer = Answer::yes;
        e = phi_to_e(x, q, hom, *db, *iso.forward);
        nu = phibar_to_nu(x, hom, *iso.backward);
    }
    auto report = check_frobenius_witnesses(x, q, nu, e);
    if (!report.valid()) throw std::logic_error("frobenius_check: extracted witnesses fail: " + report.summary());
    auto phi = e_to_phi(x, q, hom, e);
    auto phibar = nu_to_phibar(x, hom, nu);
    const Field& f = x.field();
    if (phi * phibar != LinMap::identity(f, {x.ns()}) || phibar * phi != LinMap::identity(f, {hom.dim()}))
        throw std::logic_error("frobenius_check: phi and phibar are not mutually inverse");
    v.witnesses = {{"nu", nu}, {"e", e}, {"e_lift", q.section * e}, {"phi", phi}, {"phibar", phibar}};
    return v;
}

DualBasis dual_basis_S(const RingExtension& x, const TensorOverR& q, const LinMap& nu0, const LinMap& e) {
    auto report = check_frobenius_witnesses(x, q, nu0, e);
    if (!report.valid()) throw ContractViolation(report.summary());
    const Field& f = x.field();
    const std::size_t ns = x.ns();
    auto nu = nu0.reshaped({ns}, {x.nr()});
    auto lifted = q.section * e.reshaped({}, {q.dim});
    DualBasis db;
    for (std::size_t a = 0; a < ns; ++a) {
        Vector second(ns, f.zero());
        bool any = false;
        for (std::size_t b = 0; b < ns; ++b) {
            second[b] = lifted.coeff(a * ns + b, 0);
            any = any || !second[b].is_zero();
        }
        if (!any) continue;
        db.elements.push_back(basis_element(f, ns, a).image_of_basis(0));
        db.functionals.push_back(nu * x.s.mult * tensor(LinMap::element(f, {ns}, second), id(f, ns)));
    }
    return db;
}

ValidationReport check_dual_basis_S(const RingExtension& x, const DualBasis& db) {
    ValidationReport r{"dual basis of S over R", {}};
    const Field& f = x.field();
    const std::size_t ns = x.ns();
    LinMap sum = LinMap::zero(f, {ns}, {ns});
    for (std::size_t k = 0; k < db.size(); ++k)
        sum = sum + x.s.mult * tensor(LinMap::element(f, {ns}, db.elements[k]), x.i * db.functionals[k].reshaped({ns}, {x.nr()}));
    expect_equal(r, "resolution of identity", sum, LinMap::identity(f, {ns}));
    return r;
}

} // namespace entwine::ringext
