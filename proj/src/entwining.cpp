#include "entwine/entwining.hpp"

namespace entwine {

namespace {

LinMap id(const Field& f, std::size_t n) { return LinMap::identity(f, {n}); }

// acting dimension of an action/coaction whose other side is the object itself
std::size_t acting_dim(const LinMap& map, std::size_t object_dim, bool action) {
    const std::size_t big = action ? total(map.domain()) : total(map.codomain());
    if (object_dim == 0 || big % object_dim != 0) throw ContractViolation("structure map does not match the object");
    return big / object_dim;
}

} // namespace

Entwining::Entwining(AlgebraData a_, CoalgebraData c_, LinMap psi_) : a(std::move(a_)), c(std::move(c_)), psi(std::move(psi_)) {
    if (a.field() != c.field() || psi.field() != a.field()) throw ContractViolation("entwining data over different fields");
    if (total(psi.domain()) != nc() * na() || total(psi.codomain()) != na() * nc())
        throw ContractViolation("psi must be a map C (x) A -> A (x) C");
    psi = psi.reshaped({nc(), na()}, {na(), nc()});
}

Entwining flip_entwining(const AlgebraData& a, const CoalgebraData& c) {
    return Entwining(a, c, LinMap::swap(a.field(), {c.dim()}, {a.dim()}));
}

ValidationReport check_entwining(const Entwining& e) {
    ValidationReport r{"entwining", {}};
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    const auto& psi = e.psi;
    auto ia = id(f, na), ic = id(f, nc);
    expect_equal(r, "multiplicativity", psi * tensor(ic, e.a.mult), tensor(e.a.mult, ic) * tensor(ia, psi) * tensor(psi, ia));
    expect_equal(r, "counit compatibility", tensor(ia, e.c.counit) * psi, tensor(e.c.counit, ia));
    expect_equal(r, "comultiplication compatibility", tensor(ia, e.c.comult) * psi,
                 tensor(psi, ic) * tensor(ic, psi) * tensor(e.c.comult, ia));
    expect_equal(r, "unit compatibility", psi * tensor(ic, e.a.unit), tensor(e.a.unit, ic));
    return r;
}

ValidationReport check_doi_hopf(const DoiHopfDatum& d) {
    ValidationReport r{"Doi-Hopf datum", {}};
    r.absorb(check_bialgebra(d.h), "H");
    r.absorb(check_comodule_algebra(d.h, d.a, {Side::right, d.coaction}), "A");
    r.absorb(check_module_coalgebra(d.h, d.c, {Side::right, d.action}), "C");
    return r;
}

Entwining from_doi_hopf(const DoiHopfDatum& d) {
    require_valid(check_doi_hopf(d));
    const auto& f = d.h.field();
    const std::size_t na = d.a.dim(), nc = d.c.dim(), nh = d.h.dim();
    auto rho = d.coaction.reshaped({na}, {na, nh});
    auto act = d.action.reshaped({nc, nh}, {nc});
    // c (x) a -> c (x) a0 (x) h -> a0 (x) c (x) h -> a0 (x) c.h
    auto psi = tensor(id(f, na), act) * LinMap::permutation(f, {nc, na, nh}, {1, 0, 2}) * tensor(id(f, nc), rho);
    return Entwining(d.a, d.c, psi);
}

ValidationReport check_entwined_object(const Entwining& e, const EntwinedObject& m) {
    ValidationReport r{"entwined module " + m.name, {}};
    if (!m.right_action || !m.right_coaction) throw ContractViolation("entwined module needs a right action and a right coaction");
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc(), n = m.dim();
    auto im = id(f, n), ia = id(f, na), ic = id(f, nc);
    auto act = m.right_action->reshaped({n, na}, {n});
    auto rho = m.right_coaction->reshaped({n}, {n, nc});
    r.absorb(check_action(e.a, {n}, {Side::right, act}));
    r.absorb(check_coaction(e.c, {n}, {Side::right, rho}));
    expect_equal(r, "entwined compatibility", rho * act, compose_tensored({{act, ic}, {im, e.psi}, {rho, ia}}));
    if (m.left_action) {
        auto lam = m.left_action->reshaped({na, n}, {n});
        r.absorb(check_action(e.a, {n}, {Side::left, lam}), "left");
        expect_equal(r, "left and right actions commute", then_tensor(lam, ia, act), then_tensor(act, lam, ia));
        expect_equal(r, "left action colinear", rho * lam, compose_tensored({{lam, ic}, {ia, rho}}));
    }
    if (m.left_coaction) {
        auto lc = m.left_coaction->reshaped({n}, {nc, n});
        r.absorb(check_coaction(e.c, {n}, {Side::left, lc}), "left");
        expect_equal(r, "left coaction right linear", lc * act, compose_tensored({{ic, act}, {lc, ia}}));
        expect_equal(r, "left and right coactions commute", tensor_then(ic, rho, lc), tensor_then(lc, ic, rho));
    }
    return r;
}

EntwinedObject std_object_AC(const Entwining& e) {
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto ia = id(f, na), ic = id(f, nc);
    EntwinedObject m;
    m.name = "A(x)C";
    m.shape = {na, nc};
    m.right_action = tensor(e.a.mult, ic) * tensor(ia, e.psi);
    m.right_coaction = tensor(ia, e.c.comult);
    m.left_action = tensor(e.a.mult, ic);
    require_valid(check_entwined_object(e, m));
    return m;
}

EntwinedObject std_object_CA(const Entwining& e) {
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto ia = id(f, na), ic = id(f, nc);
    EntwinedObject m;
    m.name = "C(x)A";
    m.shape = {nc, na};
    m.right_action = tensor(ic, e.a.mult);
    m.right_coaction = tensor(ic, e.psi) * tensor(e.c.comult, ia);
    m.left_coaction = tensor(e.c.comult, ia);
    require_valid(check_entwined_object(e, m));
    return m;
}

LinMap cstar_twist(const Entwining& e) {
    const std::size_t na = e.na(), nc = e.nc();
    // b (x) e_k^* -> sum_{i,a2} psi[i][b][a2][k] e_i^* (x) e_a2
    return LinMap::from_entries(e.field(), {na, nc}, {nc, na}, [&](std::size_t out, std::size_t in) {
        const std::size_t i = out / na, a2 = out % na, b = in / nc, k = in % nc;
        return e.psi_coeff(i, b, a2, k);
    });
}

EntwinedObject std_object_CstarA(const Entwining& e) {
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto ia = id(f, na), ic = id(f, nc);
    EntwinedObject m;
    m.name = "C*(x)A";
    m.shape = {nc, na};
    m.right_action = tensor(ic, e.a.mult);
    m.left_action = tensor(ic, e.a.mult) * tensor(cstar_twist(e), ia);
    // e_k^* (x) e_a -> sum_i (e_i^* * e_k^*) (x) psi(e_i (x) e_a)
    m.right_coaction = LinMap::from_entries(f, {nc, na}, {nc, na, nc}, [&](std::size_t out, std::size_t in) {
        const std::size_t j = out / (na * nc), a2 = (out / nc) % na, c2 = out % nc;
        const std::size_t k = in / na, a = in % na;
        Scalar s = f.zero();
        for (std::size_t i = 0; i < nc; ++i) {
            auto d = e.c.comult_coeff(j, i, k);
            if (!d.is_zero()) s += d * e.psi_coeff(i, a, a2, c2);
        }
        return s;
    });
    require_valid(check_entwined_object(e, m));
    return m;
}

EntwinedObject std_object_AstarC(const Entwining& e) {
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto ic = id(f, nc);
    // e_k^* (x) x -> sum_i <e_k^*, x e_i> e_i^*
    auto dual_act = LinMap::from_entries(f, {na, na}, {na}, [&](std::size_t i, std::size_t in) {
        return e.a.mult_coeff(in % na, i, in / na);
    });
    // e_k^* (x) e_c -> sum_i <e_k^*, (e_i)_psi> e_c^psi (x) e_i^*
    auto twist = LinMap::from_entries(f, {na, nc}, {nc, na}, [&](std::size_t out, std::size_t in) {
        const std::size_t c2 = out / na, i = out % na, k = in / nc, c = in % nc;
        return e.psi_coeff(c, i, k, c2);
    });
    EntwinedObject m;
    m.name = "A*(x)C";
    m.shape = {na, nc};
    m.right_action = tensor(dual_act, ic) * tensor(id(f, na), e.psi);
    m.right_coaction = tensor(id(f, na), e.c.comult);
    m.left_coaction = tensor(twist, ic) * tensor(id(f, na), e.c.comult);
    require_valid(check_entwined_object(e, m));
    return m;
}

ValidationReport check_psi_morphism(const Entwining& e) {
    ValidationReport r{"psi as morphism C(x)A -> A(x)C", {}};
    const auto& f = e.field();
    auto ca = std_object_CA(e);
    auto ac = std_object_AC(e);
    auto ia = id(f, e.na()), ic = id(f, e.nc());
    expect_equal(r, "right A-linear", e.psi * *ca.right_action, *ac.right_action * tensor(e.psi, ia));
    expect_equal(r, "right C-colinear", *ac.right_coaction * e.psi, tensor(e.psi, ic) * *ca.right_coaction);
    return r;
}

ValidationReport check_cstar_functional_form(const Entwining& e) {
    ValidationReport r{"C*(x)A as Hom(C,A)", {}};
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto obj = std_object_CstarA(e);
    // evaluation (e_k^* (x) e_a) (x) e_c -> delta_{kc} e_a
    auto eval = LinMap::from_entries(f, {nc, na, nc}, {na}, [&](std::size_t out, std::size_t in) {
        const std::size_t k = in / (na * nc), a = (in / nc) % na, c = in % nc;
        return (k == c && a == out) ? f.one() : f.zero();
    });
    auto ia = id(f, na), ic = id(f, nc);

    // (b f)(c) = b_psi f(c^psi), both sides on b (x) f (x) c with shape {A, C, A, C}
    auto lhs_left = eval * tensor(obj.left_action->reshaped({na, nc, na}, {nc, na}), ic);
    auto eval_cf = LinMap::from_entries(f, {nc, nc, na}, {na}, [&](std::size_t out, std::size_t in) {
        const std::size_t c = in / (nc * na), k = (in / na) % nc, a = in % na;
        return (k == c && a == out) ? f.one() : f.zero();
    });
    auto reorder = LinMap::permutation(f, {na, nc, na, nc}, {3, 0, 1, 2}); // (b,k,a,c) -> (c,b,k,a)
    auto rhs_left = e.a.mult * tensor(ia, eval_cf) * tensor(e.psi, LinMap::identity(f, {nc, na})) * reorder;
    expect_equal(r, "left action as twisted composition", lhs_left, rhs_left);

    // f_[0](c) (x) f_[1] = psi(c_(1) (x) f(c_(2)))
    auto eval_mid = LinMap::from_entries(f, {nc, na, nc, nc}, {na, nc}, [&](std::size_t out, std::size_t in) {
        auto idx = unflatten({nc, na, nc, nc}, in); // k, a, c'', c
        const std::size_t a_out = out / nc, c_out = out % nc;
        return (idx[0] == idx[3] && idx[1] == a_out && idx[2] == c_out) ? f.one() : f.zero();
    });
    auto lhs_co = eval_mid * tensor(*obj.right_coaction, ic);
    // (k, a, c) -> (c1, c2, k, a) -> (c1, f(c2)) -> psi
    auto split = tensor(e.c.comult, LinMap::identity(f, {nc, na})) * LinMap::permutation(f, {nc, na, nc}, {2, 0, 1});
    auto rhs_co = e.psi * tensor(ic, eval_cf) * split;
    expect_equal(r, "coaction as psi of comultiplication", lhs_co, rhs_co);
    return r;
}

PsiInverse invert_psi(const Entwining& e) {
    PsiInverse out;
    out.laws.subject = "inverse of psi";
    out.rank = e.psi.matrix().rank();
    auto inv = e.psi.matrix().inverse();
    if (!inv) return out;
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    LinMap phi({na, nc}, {nc, na}, *inv);
    auto ia = id(f, na), ic = id(f, nc);
    expect_equal(out.laws, "left counit law", tensor(e.c.counit, ia) * phi, tensor(ia, e.c.counit));
    expect_equal(out.laws, "left comultiplication law", tensor(e.c.comult, ia) * phi,
                 tensor(ic, phi) * tensor(phi, ic) * tensor(ia, e.c.comult));
    out.phi = std::move(phi);
    return out;
}

ValidationReport adjunction_check(const Entwining& e, const std::vector<EntwinedObject>& samples) {
    ValidationReport r{"adjunctions", {}};
    const auto& f = e.field();
    const std::size_t na = e.na(), nc = e.nc();
    auto ia = id(f, na), ic = id(f, nc);
    for (const auto& m : samples) {
        if (!m.right_action || !m.right_coaction) throw ContractViolation("adjunction sample lacks structure");
        const std::size_t n = m.dim();
        if (acting_dim(*m.right_action, n, true) != na || acting_dim(*m.right_coaction, n, false) != nc)
            throw ContractViolation("adjunction sample does not match the entwining");
        const std::string tag = m.name + ": ";
        auto im = id(f, n);
        auto act = m.right_action->reshaped({n, na}, {n});
        auto rho = m.right_coaction->reshaped({n}, {n, nc});

        // (F, G): unit rho_M : M -> M (x) C, counit eps_N : N (x) C -> N
        // G(N) = N (x) C with (m (x) c) a = m a_psi (x) c^psi and coaction id (x) Delta
        auto g_co = tensor(im, e.c.comult);
        auto counit = tensor(im, e.c.counit);
        expect_equal(r, tag + "(F,G) triangle on F(M)", counit * rho, im);
        expect_equal(r, tag + "(F,G) triangle on G(N)", tensor_then(counit, ic, g_co), LinMap::identity(f, {n, nc}));
        expect_equal(r, tag + "(F,G) unit A-linear", rho * act, compose_tensored({{act, ic}, {im, e.psi}, {rho, ia}}));
        expect_equal(r, tag + "(F,G) unit C-colinear", tensor_then(im, e.c.comult, rho), tensor_then(rho, ic, rho));
        expect_equal(r, tag + "(F,G) counit A-linear", compose_tensored({{counit}, {act, ic}, {im, e.psi}}),
                     then_tensor(act, counit, ia));

        // (F', G'): unit eta_N : N -> N (x) A, counit mu_M : M (x) A -> M
        auto eta = tensor(im, e.a.unit);
        auto fp_co = compose_tensored({{im, e.psi}, {rho, ia}}); // n (x) a -> n_[0] (x) a_psi (x) n_[1]^psi
        expect_equal(r, tag + "(F',G') triangle on F'(N)", compose_tensored({{im, e.a.mult}, {eta, ia}}), LinMap::identity(f, {n, na}));
        expect_equal(r, tag + "(F',G') triangle on G'(M)", act * eta, im);
        expect_equal(r, tag + "(F',G') unit C-colinear", fp_co * eta, compose_tensored({{eta, ic}, {rho}}));
        expect_equal(r, tag + "(F',G') counit A-linear", then_tensor(act, im, e.a.mult), then_tensor(act, act, ia));
        expect_equal(r, tag + "(F',G') counit C-colinear", rho * act, tensor_then(act, ic, fp_co));

        // left structures carried along F'G' and G'F'
        if (m.left_action || m.left_coaction) {
            EntwinedObject fg;
            fg.name = "F'G'(" + m.name + ")";
            fg.shape = {n, na};
            fg.right_action = tensor(im, e.a.mult);
            fg.right_coaction = fp_co;
            if (m.left_action) {
                auto lam = m.left_action->reshaped({na, n}, {n});
                fg.left_action = tensor(lam, ia);
                expect_equal(r, tag + "(F',G') counit left A-linear", then_tensor(act, lam, ia), then_tensor(lam, ia, act));
            }
            if (m.left_coaction) {
                auto lc = m.left_coaction->reshaped({n}, {nc, n});
                fg.left_coaction = tensor(lc, ia);
                expect_equal(r, tag + "(F',G') unit left C-colinear", tensor_then(lc, ia, eta), tensor_then(ic, eta, lc));
            }
            r.absorb(check_entwined_object(e, fg), tag + "left structure on F'G'");
        }
    }
    return r;
}

} // namespace entwine
