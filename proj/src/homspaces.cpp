#include "entwine/homspaces.hpp"

namespace entwine {

namespace {

std::size_t factor(std::size_t big, std::size_t object_dim, const char* what) {
    if (big % object_dim != 0) throw ContractViolation(std::string(what) + " does not match its object");
    return big / object_dim;
}

struct Prepared {
    std::size_t nx = 0, ny = 0;
    std::optional<std::pair<LinMap, LinMap>> right_action, left_action, right_coaction, left_coaction;
};

const LinMap& need(const std::optional<LinMap>& m, const char* what, const std::string& name) {
    if (!m) throw ContractViolation(std::string("constraint needs a ") + what + " on " + name);
    return *m;
}

Prepared prepare(const EntwinedObject& x, const EntwinedObject& y, const ConstraintSet& cs) {
    Prepared p;
    p.nx = x.dim();
    p.ny = y.dim();
    if (p.nx == 0 || p.ny == 0) throw ContractViolation("hom space between zero objects");
    auto acting = [&](const LinMap& mx, const LinMap& my, bool action, const char* what) {
        std::size_t kx = factor(action ? total(mx.domain()) : total(mx.codomain()), p.nx, what);
        std::size_t ky = factor(action ? total(my.domain()) : total(my.codomain()), p.ny, what);
        if (kx != ky) throw ContractViolation(std::string(what) + "s act through spaces of different dimension");
        return kx;
    };
    if (cs.right_action) {
        const auto& mx = need(x.right_action, "right action", x.name);
        const auto& my = need(y.right_action, "right action", y.name);
        auto k = acting(mx, my, true, "right action");
        p.right_action.emplace(mx.reshaped({p.nx, k}, {p.nx}), my.reshaped({p.ny, k}, {p.ny}));
    }
    if (cs.left_action) {
        const auto& mx = need(x.left_action, "left action", x.name);
        const auto& my = need(y.left_action, "left action", y.name);
        auto k = acting(mx, my, true, "left action");
        p.left_action.emplace(mx.reshaped({k, p.nx}, {p.nx}), my.reshaped({k, p.ny}, {p.ny}));
    }
    if (cs.right_coaction) {
        const auto& mx = need(x.right_coaction, "right coaction", x.name);
        const auto& my = need(y.right_coaction, "right coaction", y.name);
        auto k = acting(mx, my, false, "right coaction");
        p.right_coaction.emplace(mx.reshaped({p.nx}, {p.nx, k}), my.reshaped({p.ny}, {p.ny, k}));
    }
    if (cs.left_coaction) {
        const auto& mx = need(x.left_coaction, "left coaction", x.name);
        const auto& my = need(y.left_coaction, "left coaction", y.name);
        auto k = acting(mx, my, false, "left coaction");
        p.left_coaction.emplace(mx.reshaped({p.nx}, {k, p.nx}), my.reshaped({p.ny}, {k, p.ny}));
    }
    return p;
}

const Field& object_field(const EntwinedObject& x) {
    for (const auto* m : {&x.right_action, &x.left_action, &x.right_coaction, &x.left_coaction})
        if (*m) return (*m)->field();
    throw ContractViolation("object " + x.name + " carries no structure");
}

Residual hom_residual(const Prepared& p) {
    return [p](const LinMap& f0) {
        std::vector<LinMap> out;
        const Field& fld = f0.field();
        LinMap f = f0.reshaped({p.nx}, {p.ny});
        if (p.right_action) {
            const auto& [ax, ay] = *p.right_action;
            out.push_back(f * ax - then_tensor(ay, f, LinMap::identity(fld, {ax.domain()[1]})));
        }
        if (p.left_action) {
            const auto& [ax, ay] = *p.left_action;
            out.push_back(f * ax - then_tensor(ay, LinMap::identity(fld, {ax.domain()[0]}), f));
        }
        if (p.right_coaction) {
            const auto& [cx, cy] = *p.right_coaction;
            out.push_back(cy * f - tensor_then(f, LinMap::identity(fld, {cx.codomain()[1]}), cx));
        }
        if (p.left_coaction) {
            const auto& [cx, cy] = *p.left_coaction;
            out.push_back(cy * f - tensor_then(LinMap::identity(fld, {cx.codomain()[0]}), f, cx));
        }
        return out;
    };
}

} // namespace

std::string ConstraintSet::describe() const {
    std::string s;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += ", ";
        s += name;
    };
    add(left_action, "left linear");
    add(right_action, "right linear");
    add(left_coaction, "left colinear");
    add(right_coaction, "right colinear");
    return s.empty() ? "linear" : s;
}

SolutionSpace hom_basis(const EntwinedObject& x, const EntwinedObject& y, const ConstraintSet& cs) {
    auto p = prepare(x, y, cs);
    return solve_homogeneous(object_field(x), {p.nx}, {p.ny}, hom_residual(p));
}

std::string to_string(IsoKind k) {
    switch (k) {
    case IsoKind::yes: return "yes";
    case IsoKind::no: return "no";
    case IsoKind::probably_no: return "probably_no";
    }
    return "probably_no";
}

IsoVerdict iso_exists(const EntwinedObject& x, const EntwinedObject& y, const ConstraintSet& cs,
                      const SearchBudget& budget) {
    IsoVerdict v;
    v.seed = budget.seed;
    if (x.dim() != y.dim()) {
        v.kind = IsoKind::no;
        v.reason = "dimension mismatch (" + std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) + ")";
        return v;
    }
    auto hom = hom_basis(x, y, cs);
    const Field& f = hom.field();
    const std::size_t n = x.dim();
    v.hom_dim = hom.dim();
    if (hom.dim() == 0) {
        v.kind = IsoKind::no;
        v.reason = "Hom space is zero";
        return v;
    }

    // rank certificate: a common kernel or a proper joint image rules out invertible combinations
    {
        std::vector<Vector> cols, rows;
        for (const auto& b : hom.basis()) {
            for (std::size_t j = 0; j < n; ++j) cols.push_back(b.matrix().column(j));
            for (std::size_t i = 0; i < n; ++i) rows.push_back(b.matrix().row(i));
        }
        if (Matrix::from_columns(f, cols, n).rank() < n) {
            v.kind = IsoKind::no;
            v.reason = "zero-determinant certificate: images of Hom span a proper subspace";
            return v;
        }
        if (Matrix::from_rows(f, rows, n).rank() < n) {
            v.kind = IsoKind::no;
            v.reason = "zero-determinant certificate: Hom has a common kernel";
            return v;
        }
    }

    using Pair = std::pair<LinMap, LinMap>;
    auto outcome = search<Pair>(f, hom.dim(), budget, [&](const Vector& c) -> std::optional<Pair> {
        auto m = hom.combine(c).reshaped({n}, {n});
        auto inv = m.matrix().inverse();
        if (!inv) return std::nullopt;
        return Pair{m, LinMap({n}, {n}, *inv)};
    });
    v.examined = outcome.examined;
    if (outcome.witness) {
        auto [fw, bw] = *outcome.witness;
        auto back = hom_residual(prepare(y, x, cs));
        bool ok = hom.satisfied_by(fw) && fw * bw == LinMap::identity(f, {n}) && bw * fw == LinMap::identity(f, {n});
        for (const auto& r : back(bw)) ok = ok && r.is_zero();
        if (!ok) throw std::logic_error("iso_exists: witness failed verification");
        v.kind = IsoKind::yes;
        v.reason = "invertible morphism found";
        v.forward = std::move(fw);
        v.backward = std::move(bw);
    } else if (outcome.exhaustive) {
        v.kind = IsoKind::no;
        v.reason = f.is_prime() && hom.dim() > 1 ? "exhaustive enumeration of Hom found no invertible element"
                                                 : "Hom is spanned by one singular map";
    } else {
        v.kind = IsoKind::probably_no;
        v.reason = "no invertible element among " + std::to_string(outcome.examined) + " candidates (seed " +
                   std::to_string(budget.seed) + ")";
    }
    return v;
}

} // namespace entwine
