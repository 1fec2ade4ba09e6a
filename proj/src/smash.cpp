#include "entwine/smash.hpp"

#include "entwine/coforget.hpp"

#include <memory>

namespace entwine::smash {

namespace {

LinMap id(const Field& f, std::size_t n) { return LinMap::identity(f, {n}); }

void require_zero(const std::vector<LinMap>& residual, const char* what) {
    for (const auto& r : residual)
        if (!r.is_zero()) throw ContractViolation(std::string(what) + " violates its defining conditions");
}

LinMap as_kappa(const Factorization& f, const LinMap& k) {
    if (total(k.domain()) != f.nb() || total(k.codomain()) != f.na()) throw ContractViolation("kappa must be a map B -> A");
    return k.reshaped({f.nb()}, {f.na()});
}

LinMap as_e(const Factorization& f, const LinMap& e) {
    if (total(e.domain()) != 1 || total(e.codomain()) != f.nb() * f.nb() * f.na())
        throw ContractViolation("e must be an element of B (x) B (x) A");
    return e.reshaped({}, {f.nb(), f.nb(), f.na()});
}

LinMap unit_BA(const Factorization& f) { return tensor(f.b.unit, f.a.unit); }

std::vector<LinMap> normalizations(const Factorization& f, const LinMap& kappa0, const LinMap& e0) {
    const Field& fd = f.field();
    auto kappa = as_kappa(f, kappa0);
    auto e = as_e(f, e0);
    auto ib = id(fd, f.nb()), ia = id(fd, f.na());
    return {tensor(ib, f.a.mult) * tensor(f.rmap, ia) * tensor({kappa, ib, ia}) * e,
            tensor(ib, f.a.mult) * tensor({ib, kappa, ia}) * e};
}

bool compatible(Answer x, Answer y) { return x == y || x == Answer::unknown || y == Answer::unknown; }

void verify(const Verdict& v, const std::function<void()>& check) {
    if (v.yes()) check();
}

ExtensionReport core_report(const Factorization& f, const SearchBudget& budget) {
    require_valid(check_factorization(f));
    ExtensionReport r;
    auto v3 = compute_V3(f);
    auto w3 = compute_W3(f);
    r.v3_dim = v3.dim();
    r.w3_dim = w3.dim();
    const Field& fd = f.field();
    auto ia = id(fd, f.na());

    r.split = affine_verdict(v3, [&](const LinMap& k) { return k * f.b.unit; }, f.a.unit, "kappa");
    verify(r.split, [&] { require_zero(kappa_residual(f, r.split.at("kappa")), "kappa"); });

    r.separable = affine_verdict(w3, [&](const LinMap& e) { return tensor(f.b.mult, ia) * e; }, unit_BA(f), "e");
    verify(r.separable, [&] {
        const auto& e = r.separable.at("e");
        require_zero(w3_residual(f, e), "e");
        if (tensor(f.b.mult, ia) * e != unit_BA(f)) throw std::logic_error("separability witness fails its normalization");
    });

    auto target = unit_BA(f);
    auto problem = bilinear_problem(w3, v3, [&](const LinMap& e, const LinMap& k) { return normalizations(f, k, e); },
                                    {target, target});
    auto res = solve_bilinear(problem, budget);
    r.frobenius.answer = res.answer;
    r.frobenius.reason = res.reason;
    r.frobenius.examined = res.examined;
    if (res.answer == Answer::yes) {
        auto kappa = v3.combine(res.t);
        auto e = w3.combine(res.s);
        auto rep = check_frobenius_witnesses(f, kappa, e);
        if (!rep.valid()) throw std::logic_error("smash Frobenius witnesses fail: " + rep.summary());
        r.frobenius.witnesses = {{"kappa", kappa}, {"e", e}};
    }
    return r;
}

void fill_ringext(ExtensionReport& r, const ringext::RingExtension& x, const SearchBudget& budget) {
    r.ringext_split = ringext::split_check(x);
    r.ringext_separable = ringext::separable_check(x);
    r.ringext_frobenius = ringext::frobenius_check(x, Route::witnesses, budget);
    r.v1_dim = ringext::conditional_expectations(x).dim();
    r.w1_dim = ringext::casimir_elements(x).dim();
    r.consistent = compatible(r.split.answer, r.ringext_split.answer) &&
                   compatible(r.separable.answer, r.ringext_separable.answer) &&
                   compatible(r.frobenius.answer, r.ringext_frobenius.answer) && r.v1_dim == r.v3_dim &&
                   r.w1_dim == r.w3_dim;
}

} // namespace

Factorization::Factorization(AlgebraData b_, AlgebraData a_, LinMap r_) : b(std::move(b_)), a(std::move(a_)), rmap(std::move(r_)) {
    if (b.field() != a.field() || rmap.field() != a.field()) throw ContractViolation("factorization over different fields");
    if (total(rmap.domain()) != na() * nb() || total(rmap.codomain()) != nb() * na())
        throw ContractViolation("R must be a map A (x) B -> B (x) A");
    rmap = rmap.reshaped({na(), nb()}, {nb(), na()});
}

ValidationReport check_factorization(const Factorization& f) {
    ValidationReport r{"factorization structure", {}};
    r.absorb(check_algebra(f.b), "B");
    r.absorb(check_algebra(f.a), "A");
    if (!r.valid()) return r;
    const Field& fd = f.field();
    auto ia = id(fd, f.na()), ib = id(fd, f.nb());
    const auto& R = f.rmap;
    expect_equal(r, "R(ac (x) b) = b_Rr (x) a_r c_R", R * tensor(f.a.mult, ib),
                 tensor(ib, f.a.mult) * tensor(R, ia) * tensor(ia, R));
    expect_equal(r, "R(a (x) bd) = b_R d_r (x) a_Rr", R * tensor(ia, f.b.mult),
                 tensor(f.b.mult, ia) * tensor(ib, R) * tensor(R, ib));
    expect_equal(r, "R(a (x) 1) = 1 (x) a", R * tensor(ia, f.b.unit), tensor(f.b.unit, ia));
    expect_equal(r, "R(1 (x) b) = b (x) 1", R * tensor(f.a.unit, ib), tensor(ib, f.a.unit));
    return r;
}

AlgebraData smash_multiplication(const Factorization& f) {
    const Field& fd = f.field();
    const std::size_t n = f.nb() * f.na();
    auto m = tensor(f.b.mult, f.a.mult) * tensor({id(fd, f.nb()), f.rmap, id(fd, f.na())});
    return AlgebraData(m.reshaped({n, n}, {n}), unit_BA(f).reshaped({}, {n}));
}

AlgebraData smash_product(const Factorization& f) {
    require_valid(check_factorization(f));
    auto s = smash_multiplication(f);
    auto rep = check_algebra(s);
    if (!rep.valid()) throw std::logic_error("smash product of a factorization structure is not an algebra: " + rep.summary());
    return s;
}

std::vector<LinMap> kappa_residual(const Factorization& f, const LinMap& k0) {
    auto kappa = as_kappa(f, k0);
    auto ia = id(f.field(), f.na());
    return {f.a.mult * tensor(ia, kappa) - f.a.mult * tensor(kappa, ia) * f.rmap};
}

namespace {

// The constant factors of the two W3 identities, composed once.
struct W3Maps {
    LinMap left_b, right_b, left_a, right_a;

    explicit W3Maps(const Factorization& f) {
        const Field& fd = f.field();
        auto ia = id(fd, f.na()), ib = id(fd, f.nb());
        const auto& R = f.rmap;
        left_b = tensor({f.b.mult, ib, ia});
        right_b = tensor({ib, f.b.mult, ia}) * tensor({ib, ib, R});
        right_a = tensor({ib, ib, f.a.mult});
        left_a = right_a * tensor({ib, R, ia}) * tensor({R, ib, ia});
    }

    std::vector<LinMap> residual(const Factorization& f, const LinMap& e0) const {
        const Field& fd = f.field();
        auto e = as_e(f, e0);
        auto ia = id(fd, f.na()), ib = id(fd, f.nb());
        return {then_tensor(left_b, ib, e) - then_tensor(right_b, e, ib), then_tensor(left_a, ia, e) - then_tensor(right_a, e, ia)};
    }
};

} // namespace

std::vector<LinMap> w3_residual(const Factorization& f, const LinMap& e0) { return W3Maps(f).residual(f, e0); }

SolutionSpace compute_V3(const Factorization& f) {
    return solve_homogeneous(f.field(), {f.nb()}, {f.na()}, [f](const LinMap& k) { return kappa_residual(f, k); });
}

SolutionSpace compute_W3(const Factorization& f) {
    auto maps = std::make_shared<const W3Maps>(f);
    return solve_homogeneous(f.field(), {}, {f.nb(), f.nb(), f.na()},
                             [f, maps](const LinMap& e) { return maps->residual(f, e); });
}

ringext::RingExtension over_A_extension(const Factorization& f) {
    const std::size_t n = f.nb() * f.na();
    return {f.a, smash_product(f), tensor(f.b.unit, id(f.field(), f.na())).reshaped({f.na()}, {n})};
}

ringext::RingExtension over_B_extension(const Factorization& f) {
    const std::size_t n = f.nb() * f.na();
    return {f.b, smash_product(f), tensor(id(f.field(), f.nb()), f.a.unit).reshaped({f.nb()}, {n})};
}

ValidationReport check_frobenius_witnesses(const Factorization& f, const LinMap& kappa, const LinMap& e) {
    ValidationReport r{"Frobenius witnesses (kappa, e)", {}};
    for (const auto& d : kappa_residual(f, kappa)) expect_equal(r, "kappa in V3", d, LinMap::zero(f.field(), d.domain(), d.codomain()));
    for (const auto& d : w3_residual(f, e)) expect_equal(r, "e in W3", d, LinMap::zero(f.field(), d.domain(), d.codomain()));
    auto n = normalizations(f, kappa, e);
    expect_equal(r, "(b^2)^R (x) kappa(b^1)_R a^2 = 1 (x) 1", n[0], unit_BA(f));
    expect_equal(r, "b^1 (x) kappa(b^2) a^2 = 1 (x) 1", n[1], unit_BA(f));
    return r;
}

LinMap gamma(const Factorization& f, const ringext::TensorOverR& q) {
    const Field& fd = f.field();
    const std::size_t nb = f.nb(), na = f.na(), n = nb * na;
    auto ib = id(fd, nb), ia = id(fd, na);
    auto full = tensor({ib, ib, f.a.mult}) * tensor({ib, f.rmap, ia});
    auto g = full.reshaped({n, n}, {nb, nb, na}) * q.section;
    if (g * q.projection != full.reshaped({n, n}, {nb, nb, na}))
        throw std::logic_error("gamma does not factor through the tensor product over A");
    return g;
}

LinMap gamma_inverse(const Factorization& f, const ringext::TensorOverR& q) {
    const Field& fd = f.field();
    const std::size_t nb = f.nb(), na = f.na(), n = nb * na;
    auto lift = tensor({id(fd, nb), f.a.unit, id(fd, nb), id(fd, na)});
    return q.projection * lift.reshaped({nb, nb, na}, {n, n});
}

ValidationReport check_gamma_bridge(const Factorization& f) {
    ValidationReport r{"gamma bridge", {}};
    const Field& fd = f.field();
    const std::size_t nb = f.nb(), na = f.na(), n = nb * na;
    auto x = over_A_extension(f);
    auto q = ringext::tensor_over_R(x);
    auto g = gamma(f, q);
    auto gi = gamma_inverse(f, q);
    expect_equal(r, "gamma gamma^-1 = id", g * gi, LinMap::identity(fd, {nb, nb, na}));
    expect_equal(r, "gamma^-1 gamma = id", gi * g, LinMap::identity(fd, {q.dim}));

    auto w1 = ringext::casimir_elements(x, q);
    auto w3 = compute_W3(f);
    auto dims = [&](const char* law, std::size_t a, std::size_t b) {
        r.failures.push_back(Failure{law, {}, {}, std::to_string(a), std::to_string(b)});
    };
    if (w1.dim() != w3.dim()) dims("dim W1 = dim W3", w1.dim(), w3.dim());
    for (const auto& w : w1.basis())
        if (!w3.satisfied_by(g * w)) expect_equal(r, "gamma(W1) in W3", w3_residual(f, g * w)[0], LinMap::zero(fd, {nb}, {nb, nb, na}));

    auto v1 = ringext::conditional_expectations(x);
    auto v3 = compute_V3(f);
    if (v1.dim() != v3.dim()) dims("dim V1 = dim V3", v1.dim(), v3.dim());
    auto embed_b = tensor(id(fd, nb), f.a.unit).reshaped({nb}, {n});
    for (const auto& nu : v1.basis()) {
        auto kappa = nu * embed_b;
        for (const auto& d : kappa_residual(f, kappa)) expect_equal(r, "nu(- # 1) in V3", d, LinMap::zero(fd, d.domain(), d.codomain()));
        expect_equal(r, "nu(b # a) = kappa(b) a", nu, (f.a.mult * tensor(kappa, id(fd, na))).reshaped({n}, {na}));
    }
    return r;
}

ExtensionReport smash_over_A_report(const Factorization& f, const SearchBudget& budget) {
    auto r = core_report(f, budget);
    r.extension = "B#A/A";
    fill_ringext(r, over_A_extension(f), budget);
    return r;
}

ExtensionReport smash_over_B_report(const Factorization& f, const SearchBudget& budget) {
    require_valid(check_factorization(f));
    auto iso = check_op_dual_isomorphism(f);
    if (!iso.valid()) throw std::logic_error("op-dual isomorphism fails: " + iso.summary());
    auto r = core_report(op_dual(f), budget);
    r.extension = "B#A/B";
    fill_ringext(r, over_B_extension(f), budget);
    return r;
}

Factorization op_dual(const Factorization& f) {
    const Field& fd = f.field();
    auto sw = LinMap::swap(fd, {f.nb()}, {f.na()});
    return Factorization(f.a.opposite(), f.b.opposite(), sw * f.rmap * sw);
}

ValidationReport check_op_dual_isomorphism(const Factorization& f) {
    ValidationReport r{"op-dual algebra isomorphism", {}};
    auto dual = op_dual(f);
    r.absorb(check_factorization(dual), "op dual");
    if (!r.valid()) return r;
    const Field& fd = f.field();
    const std::size_t n = f.nb() * f.na();
    auto lhs = smash_multiplication(dual).opposite();
    auto rhs = smash_multiplication(f);
    auto flip = LinMap::swap(fd, {f.na()}, {f.nb()}).reshaped({n}, {n});
    expect_equal(r, "flip is multiplicative", flip * lhs.mult, rhs.mult * tensor(flip, flip));
    expect_equal(r, "flip is unital", flip * lhs.unit, rhs.unit);
    return r;
}

Factorization entwining_to_factorization(const Entwining& e) {
    const std::size_t na = e.na(), nc = e.nc();
    auto b = dual_algebra(e.c, true);
    // R[(i, a2)][(a, k)] = coefficient of e_a2 (x) e_k in psi(c_i (x) e_a)
    auto r = LinMap::from_entries(e.field(), {na, nc}, {nc, na}, [&](std::size_t out, std::size_t in) {
        return e.psi_coeff(out / na, in / nc, out % na, in % nc);
    });
    Factorization f(std::move(b), e.a, std::move(r));
    require_valid(check_factorization(f));
    return f;
}

Entwining factorization_to_entwining(const Factorization& f, const CoalgebraData& c) {
    if (c.field() != f.field() || c.dim() != f.nb() || !(f.b == dual_algebra(c, true)))
        throw ContractViolation("B is not (C*)^op for the declared coalgebra C");
    const std::size_t na = f.na(), nc = c.dim();
    auto psi = LinMap::from_entries(f.field(), {nc, na}, {na, nc}, [&](std::size_t out, std::size_t in) {
        const std::size_t g = in / na, a = in % na, a2 = out / nc, i = out % nc;
        return f.rmap.coeff(g * na + a2, a * nc + i);
    });
    return Entwining(f.a, c, std::move(psi));
}

CrossCheck cross_check_frobenius(const Entwining& e, const SearchBudget& budget) {
    return cross_check_frobenius(e, coforget::FG_frobenius(e, Route::witnesses, budget), budget);
}

CrossCheck cross_check_frobenius(const Entwining& e, const Verdict& coforget, const SearchBudget& budget) {
    CrossCheck c;
    c.coforget = coforget;
    c.smash = core_report(entwining_to_factorization(e), budget).frobenius;
    c.agree = c.coforget.answer == c.smash.answer;
    return c;
}

} // namespace entwine::smash
