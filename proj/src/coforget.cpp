#include "entwine/coforget.hpp"

namespace entwine::coforget {

namespace {

LinMap id(const Field& f, std::size_t n) { return LinMap::identity(f, {n}); }

LinMap unit_counit(const Entwining& e) { return e.a.unit * e.c.counit; }

void require_zero(const std::vector<LinMap>& residual, const char* what) {
    for (const auto& r : residual)
        if (!r.is_zero()) throw ContractViolation(std::string(what) + " violates its defining conditions");
}

LinMap as_theta(const Entwining& e, const LinMap& theta) {
    if (total(theta.domain()) != e.nc() * e.nc() || total(theta.codomain()) != e.na())
        throw ContractViolation("theta must be a map C (x) C -> A");
    return theta.reshaped({e.nc(), e.nc()}, {e.na()});
}

LinMap as_z(const Entwining& e, const LinMap& z) {
    if (total(z.domain()) != 1 || total(z.codomain()) != e.na() * e.nc())
        throw ContractViolation("z must be an element of A (x) C");
    return z.reshaped({}, {e.na(), e.nc()});
}

// left-hand sides of the two Frobenius normalizations, both maps C -> A
std::vector<LinMap> normalizations(const Entwining& e, const LinMap& theta, const LinMap& z) {
    const Field& f = e.field();
    auto ia = id(f, e.na()), ic = id(f, e.nc());
    auto first = e.a.mult * tensor(ia, theta) * tensor(z, ic);
    auto second = e.a.mult * tensor(ia, theta) * tensor(e.psi, ic) * tensor(ic, z);
    return {first, second};
}

} // namespace

std::vector<LinMap> theta_residual(const Entwining& e, const LinMap& theta0) {
    const Field& f = e.field();
    auto theta = as_theta(e, theta0);
    auto ia = id(f, e.na()), ic = id(f, e.nc());
    const auto& m = e.a.mult;
    const auto& psi = e.psi;
    return {
        then_tensor(m, theta, ia) - then_tensor(then_tensor(then_tensor(m, ia, theta), psi, ic), ic, psi),
        tensor_then(theta, ic, tensor(ic, e.c.comult)) - then_tensor(then_tensor(psi, ic, theta), e.c.comult, ic),
    };
}

std::vector<LinMap> z_residual(const Entwining& e, const LinMap& z0) {
    const Field& f = e.field();
    auto z = as_z(e, z0);
    auto ia = id(f, e.na()), ic = id(f, e.nc());
    auto m_c = tensor(e.a.mult, ic);
    return {then_tensor(m_c, ia, z) - then_tensor(then_tensor(m_c, ia, e.psi), z, ia)};
}

SolutionSpace compute_V1(const Entwining& e) {
    return solve_homogeneous(e.field(), {e.nc(), e.nc()}, {e.na()}, [e](const LinMap& t) { return theta_residual(e, t); });
}

SolutionSpace compute_W1(const Entwining& e) {
    return solve_homogeneous(e.field(), {}, {e.na(), e.nc()}, [e](const LinMap& z) { return z_residual(e, z); });
}

Verdict F_separable(const Entwining& e) {
    auto v = affine_verdict(compute_V1(e), [&](const LinMap& t) { return t * e.c.comult; }, unit_counit(e), "theta");
    if (v.yes()) require_zero(theta_residual(e, v.at("theta")), "theta");
    return v;
}

Verdict G_separable(const Entwining& e) {
    auto proj = tensor(id(e.field(), e.na()), e.c.counit);
    auto v = affine_verdict(compute_W1(e), [&](const LinMap& z) { return proj * z; }, e.a.unit, "z");
    if (v.yes()) require_zero(z_residual(e, v.at("z")), "z");
    return v;
}

ValidationReport check_frobenius_witnesses(const Entwining& e, const LinMap& theta0, const LinMap& z0) {
    ValidationReport r{"Frobenius witnesses (theta, z)", {}};
    auto theta = as_theta(e, theta0);
    auto z = as_z(e, z0);
    for (const auto& x : theta_residual(e, theta))
        expect_equal(r, "theta in V1", x, LinMap::zero(e.field(), x.domain(), x.codomain()));
    for (const auto& x : z_residual(e, z))
        expect_equal(r, "z in W1", x, LinMap::zero(e.field(), x.domain(), x.codomain()));
    auto n = normalizations(e, theta, z);
    expect_equal(r, "sum a_l theta(c_l (x) d) = epsilon(d)1", n[0], unit_counit(e));
    expect_equal(r, "sum a_l_psi theta(d^psi (x) c_l) = epsilon(d)1", n[1], unit_counit(e));
    return r;
}

ConstraintSet comparison_constraints() {
    ConstraintSet cs;
    cs.left_action = true;
    cs.right_action = true;
    cs.right_coaction = true;
    return cs;
}

LinMap theta_to_phibar(const Entwining& e, const LinMap& theta0) {
    auto theta = as_theta(e, theta0);
    require_zero(theta_residual(e, theta), "theta");
    const Field& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto h = e.a.mult * tensor(id(f, na), theta) * tensor(e.psi, id(f, nc)); // {C,A,C} -> {A}
    return LinMap::from_entries(f, {na, nc}, {nc, na}, [&](std::size_t out, std::size_t in) {
        const std::size_t i = out / na, x = out % na;
        return h.coeff(x, i * na * nc + in);
    });
}

LinMap phibar_to_theta(const Entwining& e, const LinMap& phibar) {
    const Field& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    if (total(phibar.domain()) != na * nc || total(phibar.codomain()) != nc * na)
        throw ContractViolation("phibar must be a map A (x) C -> C* (x) A");
    return LinMap::from_entries(f, {nc, nc}, {na}, [&](std::size_t x, std::size_t in) {
        const std::size_t d = in / nc, c = in % nc;
        Scalar s = f.zero();
        for (std::size_t a = 0; a < na; ++a) {
            auto u = e.a.unit_coeff(a);
            if (!u.is_zero()) s += u * phibar.coeff(d * na + x, a * nc + c);
        }
        return s;
    });
}

LinMap z_to_phi(const Entwining& e, const LinMap& z0) {
    auto z = as_z(e, z0);
    require_zero(z_residual(e, z), "z");
    const Field& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    // Y(e_k^*) = sum_l a_l (x) <e_k^*, c_l(2)> c_l(1)
    auto y3 = tensor(id(f, na), e.c.comult) * z; // {} -> {A, C, C}
    auto y = LinMap::from_entries(f, {nc}, {na, nc}, [&](std::size_t out, std::size_t k) { return y3.coeff(out * nc + k, 0); });
    return tensor(e.a.mult, id(f, nc)) * tensor(id(f, na), e.psi) * tensor(y, id(f, na));
}

LinMap phi_to_z(const Entwining& e, const LinMap& phi) {
    const std::size_t na = e.na(), nc = e.nc();
    if (total(phi.domain()) != nc * na || total(phi.codomain()) != na * nc)
        throw ContractViolation("phi must be a map C* (x) A -> A (x) C");
    auto eps = LinMap::element(e.field(), {nc}, e.c.counit.matrix().row(0));
    return phi.reshaped({nc, na}, {na, nc}) * tensor(eps, e.a.unit);
}

Verdict FG_frobenius(const Entwining& e, Route route, const SearchBudget& budget) {
    Verdict v;
    LinMap theta, z;
    if (route == Route::witnesses) {
        auto w1 = compute_W1(e);
        auto v1 = compute_V1(e);
        auto target = unit_counit(e);
        auto problem = bilinear_problem(
            w1, v1, [&](const LinMap& zz, const LinMap& tt) { return normalizations(e, as_theta(e, tt), as_z(e, zz)); },
            {target, target});
        auto res = solve_bilinear(problem, budget);
        v.answer = res.answer;
        v.reason = res.reason;
        v.examined = res.examined;
        if (res.answer != Answer::yes) return v;
        z = w1.combine(res.s);
        theta = v1.combine(res.t);
    } else {
        auto iso = iso_exists(std_object_AC(e), std_object_CstarA(e), comparison_constraints(), budget);
        v.examined = iso.examined;
        v.reason = iso.reason;
        if (iso.kind != IsoKind::yes) {
            v.answer = iso.kind == IsoKind::no ? Answer::no : Answer::unknown;
            return v;
        }
        v.answer = Answer::yes;
        theta = phibar_to_theta(e, *iso.forward);
        z = phi_to_z(e, *iso.backward);
    }
    auto report = check_frobenius_witnesses(e, theta, z);
    if (!report.valid()) throw std::logic_error("FG_frobenius: extracted witnesses fail: " + report.summary());
    auto phi = z_to_phi(e, z);
    auto phibar = theta_to_phibar(e, theta);
    const Field& f = e.field();
    const std::size_t n = e.na() * e.nc();
    if (phibar.reshaped({n}, {n}) * phi.reshaped({n}, {n}) != LinMap::identity(f, {n}) ||
        phi.reshaped({n}, {n}) * phibar.reshaped({n}, {n}) != LinMap::identity(f, {n}))
        throw std::logic_error("FG_frobenius: phi and phibar are not mutually inverse");
    v.witnesses = {{"theta", theta}, {"z", z}, {"phi", phi}, {"phibar", phibar}};
    return v;
}

DualBasis dual_basis_AC(const Entwining& e, const LinMap& theta0, const LinMap& z0) {
    auto theta = as_theta(e, theta0);
    auto z = as_z(e, z0);
    auto report = check_frobenius_witnesses(e, theta, z);
    if (!report.valid()) throw ContractViolation(report.summary());
    const Field& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto ia = id(f, na), ic = id(f, nc);
    auto y3 = tensor(ia, e.c.comult) * z; // {} -> {A, C, C}
    auto pair = e.a.mult * tensor(ia, theta) * tensor(e.psi, ic); // d (x) a (x) c -> a_psi theta(d^psi (x) c)
    DualBasis db;
    for (std::size_t k = 0; k < nc; ++k) {
        Vector yk(na * nc, f.zero());
        for (std::size_t j = 0; j < na * nc; ++j) yk[j] = y3.coeff(j * nc + k, 0);
        auto g = pair * tensor(ic, LinMap::element(f, {na, nc}, yk)); // C -> A
        db.functionals.push_back(e.a.mult * tensor(ia, g));
        Vector elem(na * nc, f.zero());
        for (std::size_t a = 0; a < na; ++a) elem[a * nc + k] = e.a.unit_coeff(a);
        db.elements.push_back(std::move(elem));
    }
    return db;
}

ValidationReport check_dual_basis_AC(const Entwining& e, const DualBasis& db) {
    ValidationReport r{"dual basis of A (x) C over A", {}};
    const Field& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto act = tensor(e.a.mult, id(f, nc)); // left A-action on A (x) C
    LinMap sum = LinMap::zero(f, {na, nc}, {na, nc});
    for (std::size_t k = 0; k < db.size(); ++k) {
        auto elem = LinMap::element(f, {na, nc}, db.elements[k]);
        sum = sum + act * tensor(db.functionals[k].reshaped({na, nc}, {na}), elem);
    }
    expect_equal(r, "resolution of identity", sum, LinMap::identity(f, {na, nc}));
    return r;
}

} // namespace entwine::coforget
