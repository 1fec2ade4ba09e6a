#include "entwine/actforget.hpp"

namespace entwine::actforget {

namespace {

LinMap id(const Field& f, std::size_t n) { return LinMap::identity(f, {n}); }

LinMap unit_counit(const Entwining& en) { return en.a.unit * en.c.counit; }

void require_zero(const std::vector<LinMap>& residual, const char* what) {
    for (const auto& r : residual)
        if (!r.is_zero()) throw ContractViolation(std::string(what) + " violates its defining conditions");
}

LinMap as_vartheta(const Entwining& en, const LinMap& t) {
    if (total(t.domain()) != en.nc() * en.na() || total(t.codomain()) != 1)
        throw ContractViolation("vartheta must be a functional on C (x) A");
    return t.reshaped({en.nc(), en.na()}, {});
}

LinMap as_e(const Entwining& en, const LinMap& e) {
    if (total(e.domain()) != en.nc() || total(e.codomain()) != en.na() * en.na())
        throw ContractViolation("e must be a map C -> A (x) A");
    return e.reshaped({en.nc()}, {en.na(), en.na()});
}

std::vector<LinMap> normalizations(const Entwining& en, const LinMap& vartheta, const LinMap& e) {
    const Field& f = en.field();
    auto ia = id(f, en.na()), ic = id(f, en.nc());
    auto spread = tensor(ic, e) * en.c.comult; // c -> c_(1) (x) e^1(c_(2)) (x) e^2(c_(2))
    return {tensor(vartheta, ia) * spread, tensor(ia, vartheta) * tensor(en.psi, ia) * spread};
}

} // namespace

std::vector<LinMap> vartheta_residual(const Entwining& en, const LinMap& t0) {
    const Field& f = en.field();
    auto t = as_vartheta(en, t0);
    auto ia = id(f, en.na()), ic = id(f, en.nc());
    auto split = tensor(en.c.comult, ia);
    return {tensor(t, ic) * tensor(ic, en.psi) * split - tensor(ic, t) * split};
}

std::vector<LinMap> e_residual(const Entwining& en, const LinMap& e0) {
    const Field& f = en.field();
    auto e = as_e(en, e0);
    auto ia = id(f, en.na()), ic = id(f, en.nc());
    const auto& psi = en.psi;
    return {
        tensor_then(e, ic, en.c.comult) - tensor_then(ia, psi, tensor_then(psi, ia, tensor_then(ic, e, en.c.comult))),
        then_tensor(tensor(ia, en.a.mult), e, ia) - tensor_then(en.a.mult, ia, tensor_then(ia, e, psi)),
    };
}

SolutionSpace compute_V1prime(const Entwining& en) {
    return solve_homogeneous(en.field(), {en.nc(), en.na()}, {}, [en](const LinMap& t) { return vartheta_residual(en, t); });
}

SolutionSpace compute_W1prime(const Entwining& en) {
    return solve_homogeneous(en.field(), {en.nc()}, {en.na(), en.na()}, [en](const LinMap& e) { return e_residual(en, e); });
}

Verdict Fprime_separable(const Entwining& en) {
    auto with_one = tensor(id(en.field(), en.nc()), en.a.unit);
    auto v = affine_verdict(compute_V1prime(en), [&](const LinMap& t) { return t * with_one; }, en.c.counit, "vartheta");
    if (v.yes()) require_zero(vartheta_residual(en, v.at("vartheta")), "vartheta");
    return v;
}

Verdict Gprime_separable(const Entwining& en) {
    auto v = affine_verdict(compute_W1prime(en), [&](const LinMap& e) { return en.a.mult * e; }, unit_counit(en), "e");
    if (v.yes()) require_zero(e_residual(en, v.at("e")), "e");
    return v;
}

ValidationReport check_frobenius_witnesses(const Entwining& en, const LinMap& t0, const LinMap& e0) {
    ValidationReport r{"Frobenius witnesses (vartheta, e)", {}};
    auto t = as_vartheta(en, t0);
    auto e = as_e(en, e0);
    for (const auto& x : vartheta_residual(en, t))
        expect_equal(r, "vartheta in V1'", x, LinMap::zero(en.field(), x.domain(), x.codomain()));
    for (const auto& x : e_residual(en, e)) expect_equal(r, "e in W1'", x, LinMap::zero(en.field(), x.domain(), x.codomain()));
    auto n = normalizations(en, t, e);
    expect_equal(r, "vartheta(c_(1) (x) e^1(c_(2))) e^2(c_(2)) = epsilon(c)1", n[0], unit_counit(en));
    expect_equal(r, "vartheta(c_(1)^psi (x) e^2(c_(2))) e^1(c_(2))_psi = epsilon(c)1", n[1], unit_counit(en));
    return r;
}

ConstraintSet comparison_constraints() {
    ConstraintSet cs;
    cs.left_coaction = true;
    cs.right_coaction = true;
    cs.right_action = true;
    return cs;
}

LinMap e_to_Omega(const Entwining& en, const LinMap& e0) {
    auto e = as_e(en, e0);
    require_zero(e_residual(en, e), "e");
    const Field& f = en.field();
    const std::size_t na = en.na(), nc = en.nc();
    auto h = tensor(en.psi, id(f, na)) * tensor(id(f, nc), e) * en.c.comult; // {C} -> {A, C, A}
    return LinMap::from_entries(f, {na, nc}, {nc, na}, [&](std::size_t out, std::size_t in) {
        const std::size_t k = in / nc, c = in % nc;
        return h.coeff(k * nc * na + out, c);
    });
}

LinMap Omega_to_e(const Entwining& en, const LinMap& omega) {
    const Field& f = en.field();
    const std::size_t na = en.na(), nc = en.nc();
    if (total(omega.domain()) != na * nc || total(omega.codomain()) != nc * na)
        throw ContractViolation("Omega must be a map A* (x) C -> C (x) A");
    return LinMap::from_entries(f, {nc}, {na, na}, [&](std::size_t out, std::size_t c) {
        const std::size_t i = out / na, b = out % na;
        Scalar s = f.zero();
        for (std::size_t g = 0; g < nc; ++g) {
            auto eps = en.c.counit_coeff(g);
            if (!eps.is_zero()) s += eps * omega.coeff(g * na + b, i * nc + c);
        }
        return s;
    });
}

LinMap vartheta_to_Omegabar(const Entwining& en, const LinMap& t0) {
    auto t = as_vartheta(en, t0);
    require_zero(vartheta_residual(en, t), "vartheta");
    const Field& f = en.field();
    const std::size_t na = en.na(), nc = en.nc();
    auto ia = id(f, na), ic = id(f, nc);
    auto g = tensor(ic, en.psi) * tensor(en.c.comult, ia); // c (x) a -> c_(1) (x) a_psi (x) c_(2)^psi
    auto k = t * tensor(ic, en.a.mult);
    auto h = tensor(k, ic) * LinMap::permutation(f, {nc, na, nc, na}, {0, 1, 3, 2}) * tensor(g, ia); // {C,A,A} -> {C}
    return LinMap::from_entries(f, {nc, na}, {na, nc}, [&](std::size_t out, std::size_t in) {
        const std::size_t i = out / nc, c2 = out % nc;
        return h.coeff(c2, in * na + i);
    });
}

LinMap Omegabar_to_vartheta(const Entwining& en, const LinMap& omegabar) {
    const Field& f = en.field();
    const std::size_t na = en.na(), nc = en.nc();
    if (total(omegabar.domain()) != nc * na || total(omegabar.codomain()) != na * nc)
        throw ContractViolation("Omegabar must be a map C (x) A -> A* (x) C");
    auto pairing = LinMap::functional(f, {na, nc}, [&] {
        Vector v(na * nc, f.zero());
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t c = 0; c < nc; ++c) v[i * nc + c] = en.a.unit_coeff(i) * en.c.counit_coeff(c);
        return v;
    }());
    return pairing * omegabar.reshaped({nc, na}, {na, nc});
}

Verdict FprimeGprime_frobenius(const Entwining& en, Route route, const SearchBudget& budget) {
    Verdict v;
    LinMap t, e;
    if (route == Route::witnesses) {
        auto w1 = compute_W1prime(en);
        auto v1 = compute_V1prime(en);
        auto target = unit_counit(en);
        auto problem = bilinear_problem(
            w1, v1, [&](const LinMap& ee, const LinMap& tt) { return normalizations(en, as_vartheta(en, tt), as_e(en, ee)); },
            {target, target});
        auto res = solve_bilinear(problem, budget);
        v.answer = res.answer;
        v.reason = res.reason;
        v.examined = res.examined;
        if (res.answer != Answer::yes) return v;
        e = w1.combine(res.s);
        t = v1.combine(res.t);
    } else {
        auto iso = iso_exists(std_object_AstarC(en), std_object_CA(en), comparison_constraints(), budget);
        v.examined = iso.examined;
        v.reason = iso.reason;
        if (iso.kind != IsoKind::yes) {
            v.answer = iso.kind == IsoKind::no ? Answer::no : Answer::unknown;
            return v;
        }
        v.answer = Answer::yes;
        e = Omega_to_e(en, *iso.forward);
        t = Omegabar_to_vartheta(en, *iso.backward);
    }
    auto report = check_frobenius_witnesses(en, t, e);
    if (!report.valid()) throw std::logic_error("FprimeGprime_frobenius: extracted witnesses fail: " + report.summary());
    auto omega = e_to_Omega(en, e);
    auto omegabar = vartheta_to_Omegabar(en, t);
    const Field& f = en.field();
    const std::size_t n = en.na() * en.nc();
    if (omegabar.reshaped({n}, {n}) * omega.reshaped({n}, {n}) != LinMap::identity(f, {n}) ||
        omega.reshaped({n}, {n}) * omegabar.reshaped({n}, {n}) != LinMap::identity(f, {n}))
        throw std::logic_error("FprimeGprime_frobenius: Omega and Omegabar are not mutually inverse");
    v.witnesses = {{"vartheta", t}, {"e", e}, {"Omega", omega}, {"Omegabar", omegabar}};
    return v;
}

DualBasis dual_basis_A(const Entwining& en, const LinMap& t0, const LinMap& e0) {
    auto t = as_vartheta(en, t0);
    auto e = as_e(en, e0);
    auto report = check_frobenius_witnesses(en, t, e);
    if (!report.valid()) throw ContractViolation(report.summary());
    auto inv = invert_psi(en);
    if (!inv.phi) throw ContractViolation("dual_basis_A needs an invertible psi (rank " + std::to_string(inv.rank) + ")");
    const Field& f = en.field();
    const std::size_t na = en.na(), nc = en.nc();

    // an element with epsilon(c) = 1
    Vector c(nc, f.zero());
    for (std::size_t k = 0; k < nc; ++k)
        if (!en.c.counit_coeff(k).is_zero()) {
            c[k] = en.c.counit_coeff(k).inverse();
            break;
        }
    auto terms = (tensor(id(f, nc), e) * en.c.comult).apply(c); // (gamma, beta, alpha)
    auto q = t * tensor(id(f, nc), en.a.mult) * tensor(*inv.phi, id(f, na)); // a (x) c_i (x) b_i -> vartheta(c_i^phi (x) a_phi b_i)

    DualBasis db;
    for (std::size_t alpha = 0; alpha < na; ++alpha) {
        Vector fn(na, f.zero());
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t g = 0; g < nc; ++g)
                for (std::size_t b = 0; b < na; ++b) {
                    const auto& w = terms[(g * na + b) * na + alpha];
                    if (!w.is_zero()) fn[a] += w * q.coeff(0, (a * nc + g) * na + b);
                }
        Vector elem(na, f.zero());
        elem[alpha] = f.one();
        db.elements.push_back(std::move(elem));
        db.functionals.push_back(LinMap::functional(f, {na}, fn));
    }
    return db;
}

ValidationReport check_dual_basis_A(const Entwining& en, const DualBasis& db) {
    ValidationReport r{"dual basis of A", {}};
    const Field& f = en.field();
    const std::size_t na = en.na();
    LinMap sum = LinMap::zero(f, {na}, {na});
    for (std::size_t i = 0; i < db.size(); ++i)
        sum = sum + LinMap::element(f, {na}, db.elements[i]) * db.functionals[i].reshaped({na}, {});
    expect_equal(r, "resolution of identity", sum, LinMap::identity(f, {na}));
    return r;
}

} // namespace entwine::actforget
