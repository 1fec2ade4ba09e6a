#include "entwine/structures.hpp"

namespace entwine {

AlgebraData::AlgebraData(LinMap m, LinMap u) : mult(std::move(m)), unit(std::move(u)) {
    if (unit.codomain().size() != 1 || !unit.domain().empty())
        throw ContractViolation("algebra unit must be a map k -> A");
    const std::size_t n = unit.codomain()[0];
    if (n == 0) throw ContractViolation("algebra of dimension 0");
    if (mult.domain() != Shape{n, n} || mult.codomain() != Shape{n})
        throw ContractViolation("algebra multiplication must be A (x) A -> A");
    if (mult.field() != unit.field()) throw ContractViolation("algebra data over different fields");
}

AlgebraData AlgebraData::from_table(const Field& f, std::size_t n, const Table3& m, const Vector& unit) {
    if (n == 0) throw ContractViolation("algebra of dimension 0");
    auto mult = LinMap::from_entries(f, {n, n}, {n}, [&](std::size_t k, std::size_t ij) { return m(ij / n, ij % n, k); });
    return AlgebraData(std::move(mult), LinMap::element(f, {n}, unit));
}

Vector AlgebraData::multiply(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    Vector xy(n * n, field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!y[j].is_zero()) xy[i * n + j] = x[i] * y[j];
    }
    return mult.apply(xy);
}

AlgebraData AlgebraData::opposite() const {
    const std::size_t n = dim();
    return AlgebraData(mult * LinMap::swap(field(), {n}, {n}), unit);
}

CoalgebraData::CoalgebraData(LinMap d, LinMap e) : comult(std::move(d)), counit(std::move(e)) {
    if (counit.domain().size() != 1 || !counit.codomain().empty())
        throw ContractViolation("coalgebra counit must be a map C -> k");
    const std::size_t n = counit.domain()[0];
    if (n == 0) throw ContractViolation("coalgebra of dimension 0");
    if (comult.domain() != Shape{n} || comult.codomain() != Shape{n, n})
        throw ContractViolation("comultiplication must be C -> C (x) C");
    if (comult.field() != counit.field()) throw ContractViolation("coalgebra data over different fields");
}

CoalgebraData CoalgebraData::from_table(const Field& f, std::size_t n, const Table3& d, const Vector& counit) {
    if (n == 0) throw ContractViolation("coalgebra of dimension 0");
    auto comult = LinMap::from_entries(f, {n}, {n, n}, [&](std::size_t jk, std::size_t i) { return d(i, jk / n, jk % n); });
    return CoalgebraData(std::move(comult), LinMap::functional(f, {n}, counit));
}

CoalgebraData CoalgebraData::coopposite() const {
    const std::size_t n = dim();
    return CoalgebraData(LinMap::swap(field(), {n}, {n}) * comult, counit);
}

BialgebraData::BialgebraData(AlgebraData a, CoalgebraData c) : algebra(std::move(a)), coalgebra(std::move(c)) {
    if (algebra.dim() != coalgebra.dim()) throw ContractViolation("bialgebra: algebra and coalgebra dimensions differ");
    if (algebra.field() != coalgebra.field()) throw ContractViolation("bialgebra: fields differ");
}

ValidationReport check_algebra(const AlgebraData& a) {
    ValidationReport r{"algebra", {}};
    auto id = a.id();
    expect_equal(r, "associativity", a.mult * tensor(a.mult, id), a.mult * tensor(id, a.mult));
    expect_equal(r, "left unit", a.mult * tensor(a.unit, id), id);
    expect_equal(r, "right unit", a.mult * tensor(id, a.unit), id);
    return r;
}

ValidationReport check_coalgebra(const CoalgebraData& c) {
    ValidationReport r{"coalgebra", {}};
    auto id = c.id();
    expect_equal(r, "coassociativity", tensor(c.comult, id) * c.comult, tensor(id, c.comult) * c.comult);
    expect_equal(r, "left counit", tensor(c.counit, id) * c.comult, id);
    expect_equal(r, "right counit", tensor(id, c.counit) * c.comult, id);
    return r;
}

ValidationReport check_bialgebra(const BialgebraData& h) {
    ValidationReport r{"bialgebra", {}};
    r.absorb(check_algebra(h.algebra), "algebra");
    r.absorb(check_coalgebra(h.coalgebra), "coalgebra");
    const auto& f = h.field();
    const std::size_t n = h.dim();
    const auto& m = h.algebra.mult;
    const auto& u = h.algebra.unit;
    const auto& d = h.coalgebra.comult;
    const auto& e = h.coalgebra.counit;
    auto middle = LinMap::permutation(f, {n, n, n, n}, {0, 2, 1, 3});
    expect_equal(r, "comultiplication multiplicative", d * m, tensor(m, m) * middle * tensor(d, d));
    expect_equal(r, "comultiplication unital", d * u, tensor(u, u));
    expect_equal(r, "counit multiplicative", e * m, tensor(e, e));
    expect_equal(r, "counit unital", e * u, LinMap::identity(f, {}));
    return r;
}

ValidationReport check_action(const AlgebraData& a, const Shape& m, const ActionData& act) {
    ValidationReport r{act.side == Side::right ? "right module" : "left module", {}};
    const auto& f = a.field();
    auto id_m = LinMap::identity(f, m);
    auto id_a = a.id();
    const Shape expected = act.side == Side::right ? concat(m, {a.dim()}) : concat({a.dim()}, m);
    if (total(act.map.domain()) != total(expected) || total(act.map.codomain()) != total(m))
        throw ContractViolation("action has the wrong shape");
    LinMap mu = act.map.reshaped(expected, m);
    if (act.side == Side::right) {
        expect_equal(r, "action associativity", then_tensor(mu, mu, id_a), then_tensor(mu, id_m, a.mult));
        expect_equal(r, "action unit", then_tensor(mu, id_m, a.unit), id_m);
    } else {
        expect_equal(r, "action associativity", then_tensor(mu, id_a, mu), then_tensor(mu, a.mult, id_m));
        expect_equal(r, "action unit", then_tensor(mu, a.unit, id_m), id_m);
    }
    return r;
}

ValidationReport check_coaction(const CoalgebraData& c, const Shape& m, const CoactionData& co) {
    ValidationReport r{co.side == Side::right ? "right comodule" : "left comodule", {}};
    const auto& f = c.field();
    auto id_m = LinMap::identity(f, m);
    auto id_c = c.id();
    const Shape expected = co.side == Side::right ? concat(m, {c.dim()}) : concat({c.dim()}, m);
    if (total(co.map.codomain()) != total(expected) || total(co.map.domain()) != total(m))
        throw ContractViolation("coaction has the wrong shape");
    LinMap rho = co.map.reshaped(m, expected);
    if (co.side == Side::right) {
        expect_equal(r, "coaction coassociativity", tensor_then(rho, id_c, rho), tensor_then(id_m, c.comult, rho));
        expect_equal(r, "coaction counit", tensor_then(id_m, c.counit, rho), id_m);
    } else {
        expect_equal(r, "coaction coassociativity", tensor_then(id_c, rho, rho), tensor_then(c.comult, id_m, rho));
        expect_equal(r, "coaction counit", tensor_then(c.counit, id_m, rho), id_m);
    }
    return r;
}

ValidationReport check_comodule_algebra(const BialgebraData& h, const AlgebraData& a, const CoactionData& rho) {
    if (rho.side != Side::right) throw ContractViolation("comodule algebra expects a right coaction");
    if (a.field() != h.field()) throw ContractViolation("comodule algebra: fields differ");
    ValidationReport r{"comodule algebra", {}};
    r.absorb(check_algebra(a), "algebra");
    const std::size_t na = a.dim(), nh = h.dim();
    LinMap co = rho.map.reshaped({na}, {na, nh});
    r.absorb(check_coaction(h.coalgebra, {na}, {Side::right, co}));
    auto middle = LinMap::permutation(a.field(), {na, nh, na, nh}, {0, 2, 1, 3});
    expect_equal(r, "coaction multiplicative", co * a.mult, tensor(a.mult, h.algebra.mult) * middle * tensor(co, co));
    expect_equal(r, "coaction unital", co * a.unit, tensor(a.unit, h.algebra.unit));
    return r;
}

ValidationReport check_module_coalgebra(const BialgebraData& h, const CoalgebraData& c, const ActionData& act) {
    if (act.side != Side::right) throw ContractViolation("module coalgebra expects a right action");
    if (c.field() != h.field()) throw ContractViolation("module coalgebra: fields differ");
    ValidationReport r{"module coalgebra", {}};
    r.absorb(check_coalgebra(c), "coalgebra");
    const std::size_t nc = c.dim(), nh = h.dim();
    LinMap mu = act.map.reshaped({nc, nh}, {nc});
    r.absorb(check_action(h.algebra, {nc}, {Side::right, mu}));
    auto middle = LinMap::permutation(c.field(), {nc, nc, nh, nh}, {0, 2, 1, 3});
    expect_equal(r, "action comultiplicative", c.comult * mu,
                 tensor(mu, mu) * middle * tensor(c.comult, h.coalgebra.comult));
    expect_equal(r, "action counital", c.counit * mu, tensor(c.counit, h.coalgebra.counit));
    return r;
}

ValidationReport check_algebra_map(const AlgebraData& r_alg, const AlgebraData& s, const LinMap& i) {
    ValidationReport r{"algebra map", {}};
    if (i.domain() != Shape{r_alg.dim()} || i.codomain() != Shape{s.dim()})
        throw ContractViolation("algebra map has the wrong shape");
    expect_equal(r, "multiplicative", i * r_alg.mult, s.mult * tensor(i, i));
    expect_equal(r, "unital", i * r_alg.unit, s.unit);
    return r;
}

AlgebraData dual_algebra(const CoalgebraData& c, bool opposite) {
    const std::size_t n = c.dim();
    // (e_i^* e_j^*)(e_k) = Delta coefficient of e_i (x) e_j in Delta(e_k)
    AlgebraData conv(c.comult.transpose().reshaped({n, n}, {n}), c.counit.transpose().reshaped({}, {n}));
    return opposite ? conv.opposite() : conv;
}

ValidationReport check_coalgebra_dual_basis_identity(const CoalgebraData& c) {
    ValidationReport r{"coalgebra dual basis", {}};
    const auto& f = c.field();
    const std::size_t n = c.dim();
    auto conv = dual_algebra(c);
    // both sides as elements of C (x) C (x) C*, i.e. maps k -> {n,n,n}
    auto lhs = LinMap::from_entries(f, {}, {n, n, n}, [&](std::size_t out, std::size_t) {
        auto idx = unflatten({n, n, n}, out);
        return c.comult_coeff(idx[2], idx[0], idx[1]);
    });
    auto rhs = LinMap::from_entries(f, {}, {n, n, n}, [&](std::size_t out, std::size_t) {
        auto idx = unflatten({n, n, n}, out);
        return conv.mult_coeff(idx[0], idx[1], idx[2]);
    });
    expect_equal(r, "dual basis identity", lhs, rhs);
    return r;
}

} // namespace entwine
