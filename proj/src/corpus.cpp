#include "entwine/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace entwine::corpus {

namespace {

Vector basis_vector(const Field& f, std::size_t n, std::size_t k) {
    Vector v(n, f.zero());
    v[k] = f.one();
    return v;
}

Vector all_ones(const Field& f, std::size_t n) { return Vector(n, f.one()); }

LinMap id(const Field& f, std::size_t n) { return LinMap::identity(f, {n}); }

// coaction e_i -> e_i (x) g^deg[i] on a kC_h-graded algebra
LinMap grading_coaction(const Field& f, const std::vector<std::size_t>& deg, std::size_t h) {
    const std::size_t n = deg.size();
    return LinMap::from_entries(f, {n}, {n, h}, [&](std::size_t out, std::size_t in) {
        return out == in * h + deg[in] ? f.one() : f.zero();
    });
}

// e_i . g^k = e_{perm^k(i)}
LinMap permutation_action(const Field& f, const std::vector<std::size_t>& perm, std::size_t h) {
    const std::size_t n = perm.size();
    std::vector<std::vector<std::size_t>> powers(h, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) powers[0][i] = i;
    for (std::size_t k = 1; k < h; ++k)
        for (std::size_t i = 0; i < n; ++i) powers[k][i] = perm[powers[k - 1][i]];
    return LinMap::from_entries(f, {n, h}, {n}, [&](std::size_t out, std::size_t in) {
        return powers[in % h][in / h] == out ? f.one() : f.zero();
    });
}

// a (x) h -> a h on H itself, and h -> h (x) h on grouplikes
DoiHopfDatum self_datum(const BialgebraData& h) {
    return {h, h.algebra, h.coalgebra.comult, h.coalgebra, h.algebra.mult};
}

LinMap algebra_map(const Field& f, std::size_t nr, std::size_t ns, const std::vector<Vector>& images) {
    return LinMap::from_entries(f, {nr}, {ns}, [&](std::size_t out, std::size_t in) { return images[in][out]; });
}

Vector m2(const Field& f, std::initializer_list<std::size_t> entries) {
    Vector v(4, f.zero());
    for (auto k : entries) v[k] = f.one();
    return v;
}

CorpusEntry make(std::string name, const Field& f, Payload p, std::string note) {
    CorpusEntry e{std::move(name), f, std::move(p), std::move(note), std::nullopt};
    return e;
}

using Builder = std::function<CorpusEntry(const Field&)>;

const std::map<std::string, Builder>& registry() {
    static const std::map<std::string, Builder> r = [] {
        std::map<std::string, Builder> m;
        m["k"] = [](const Field& f) { return make("k", f, trivial_algebra(f), "ground field"); };
        m["kC2"] = [](const Field& f) { return make("kC2", f, cyclic_group_algebra(f, 2), "group algebra of C2, basis 1, g"); };
        m["kC3"] = [](const Field& f) { return make("kC3", f, cyclic_group_algebra(f, 3), "group algebra of C3"); };
        m["M2"] = [](const Field& f) { return make("M2", f, matrix_algebra(f, 2), "2x2 matrices, basis e11, e12, e21, e22"); };
        m["kxk"] = [](const Field& f) { return make("kxk", f, diagonal_algebra(f, 2), "k x k, orthogonal idempotents"); };
        m["kDN"] = [](const Field& f) { return make("kDN", f, truncated_polynomials(f, 2), "dual numbers k[x]/(x^2)"); };

        m["coalg-k"] = [](const Field& f) { return make("coalg-k", f, grouplike_coalgebra(f, 1), "ground field coalgebra"); };
        m["GL2"] = [](const Field& f) { return make("GL2", f, grouplike_coalgebra(f, 2), "two grouplikes"); };
        m["GL3"] = [](const Field& f) { return make("GL3", f, grouplike_coalgebra(f, 3), "three grouplikes"); };
        m["DN"] = [](const Field& f) {
            return make("DN", f, divided_power_coalgebra(f, 2), "basis g, x with g grouplike and x (g, g)-primitive");
        };
        m["Mc2"] = [](const Field& f) { return make("Mc2", f, matrix_coalgebra(f, 2), "2x2 matrix coalgebra"); };

        m["bialg-kC2"] = [](const Field& f) { return make("bialg-kC2", f, cyclic_group_bialgebra(f, 2), "group bialgebra of C2"); };
        m["sweedler"] = [](const Field& f) { return make("sweedler", f, sweedler_bialgebra(f), "Sweedler's 4-dimensional bialgebra"); };

        m["doihopf-kC2"] = [](const Field& f) {
            return make("doihopf-kC2", f, self_datum(cyclic_group_bialgebra(f, 2)), "H = A = C = kC2");
        };
        m["doihopf-kC3"] = [](const Field& f) {
            return make("doihopf-kC3", f, self_datum(cyclic_group_bialgebra(f, 3)), "H = A = C = kC3");
        };
        m["doihopf-M2-graded"] = [](const Field& f) {
            auto h = cyclic_group_bialgebra(f, 2);
            DoiHopfDatum d{h, matrix_algebra(f, 2), grading_coaction(f, {0, 1, 1, 0}, 2), h.coalgebra, h.algebra.mult};
            return make("doihopf-M2-graded", f, d, "H = C = kC2, A = M2 with the checkerboard grading");
        };
        m["doihopf-kC2-DN"] = [](const Field& f) {
            auto h = cyclic_group_bialgebra(f, 2);
            auto c = divided_power_coalgebra(f, 2);
            // g . g = g, x . g = -x
            auto act = LinMap::from_entries(f, {2, 2}, {2}, [&](std::size_t out, std::size_t in) {
                const std::size_t ci = in / 2, hi = in % 2;
                if (out != ci) return f.zero();
                return (ci == 1 && hi == 1) ? -f.one() : f.one();
            });
            DoiHopfDatum d{h, h.algebra, h.coalgebra.comult, c, act};
            return make("doihopf-kC2-DN", f, d, "H = A = kC2, C = DN with x . g = -x");
        };
        m["doihopf-sweedler"] = [](const Field& f) {
            return make("doihopf-sweedler", f, self_datum(sweedler_bialgebra(f)), "H = A = C = Sweedler's bialgebra");
        };

        m["flip-k-GL2"] = [](const Field& f) {
            return make("flip-k-GL2", f, flip_entwining(trivial_algebra(f), grouplike_coalgebra(f, 2)), "A = k, C = GL2");
        };
        m["flip-k-DN"] = [](const Field& f) {
            return make("flip-k-DN", f, flip_entwining(trivial_algebra(f), divided_power_coalgebra(f, 2)), "A = k, C = DN");
        };
        m["flip-kC2-GL2"] = [](const Field& f) {
            return make("flip-kC2-GL2", f, flip_entwining(cyclic_group_algebra(f, 2), grouplike_coalgebra(f, 2)), "A = kC2, C = GL2");
        };
        m["flip-kDN-DN"] = [](const Field& f) {
            return make("flip-kDN-DN", f, flip_entwining(truncated_polynomials(f, 2), divided_power_coalgebra(f, 2)),
                        "A = k[x]/(x^2), C = DN");
        };
        m["flip-M2-Mc2"] = [](const Field& f) {
            return make("flip-M2-Mc2", f, flip_entwining(matrix_algebra(f, 2), matrix_coalgebra(f, 2)), "A = M2, C = Mc2");
        };

        m["fact-flip-kC2-kC2"] = [](const Field& f) {
            auto a = cyclic_group_algebra(f, 2);
            return make("fact-flip-kC2-kC2", f, smash::Factorization(a, a, LinMap::swap(f, {2}, {2})), "B = A = kC2, R = flip");
        };
        m["fact-flip-M2-k"] = [](const Field& f) {
            return make("fact-flip-M2-k", f, smash::Factorization(matrix_algebra(f, 2), trivial_algebra(f), LinMap::identity(f, {4})),
                        "B = M2, A = k, R = flip");
        };
        m["fact-flip-kC2-k"] = [](const Field& f) {
            return make("fact-flip-kC2-k", f,
                        smash::Factorization(cyclic_group_algebra(f, 2), trivial_algebra(f), LinMap::identity(f, {2})),
                        "B = kC2, A = k, R = flip");
        };
        m["fact-doihopf-kC2"] = [](const Field& f) {
            auto h = cyclic_group_bialgebra(f, 2);
            auto e = from_doi_hopf(self_datum(h));
            auto entry = make("fact-doihopf-kC2", f, smash::entwining_to_factorization(e), "(C^*)^op # A for doihopf-kC2");
            entry.dual_of = h.coalgebra;
            return entry;
        };

        m["ext-k-kC2"] = [](const Field& f) {
            return make("ext-k-kC2", f, ringext::RingExtension(trivial_algebra(f), cyclic_group_algebra(f, 2), algebra_map(f, 1, 2, {basis_vector(f, 2, 0)})),
                        "k -> kC2");
        };
        m["ext-k-kC3"] = [](const Field& f) {
            return make("ext-k-kC3", f, ringext::RingExtension(trivial_algebra(f), cyclic_group_algebra(f, 3), algebra_map(f, 1, 3, {basis_vector(f, 3, 0)})),
                        "k -> kC3");
        };
        m["ext-k-M2"] = [](const Field& f) {
            return make("ext-k-M2", f, ringext::RingExtension(trivial_algebra(f), matrix_algebra(f, 2), algebra_map(f, 1, 4, {m2(f, {0, 3})})),
                        "k -> M2");
        };
        m["ext-id-kC2"] = [](const Field& f) {
            return make("ext-id-kC2", f, ringext::RingExtension(cyclic_group_algebra(f, 2), cyclic_group_algebra(f, 2), id(f, 2)),
                        "identity of kC2");
        };
        m["ext-id-M2"] = [](const Field& f) {
            return make("ext-id-M2", f, ringext::RingExtension(matrix_algebra(f, 2), matrix_algebra(f, 2), id(f, 4)), "identity of M2");
        };
        m["ext-kC2-M2"] = [](const Field& f) {
            return make("ext-kC2-M2", f,
                        ringext::RingExtension(cyclic_group_algebra(f, 2), matrix_algebra(f, 2),
                                               algebra_map(f, 2, 4, {m2(f, {0, 3}), m2(f, {1, 2})})),
                        "kC2 -> M2, g -> e12 + e21");
        };
        m["ext-kxk-M2"] = [](const Field& f) {
            return make("ext-kxk-M2", f,
                        ringext::RingExtension(diagonal_algebra(f, 2), matrix_algebra(f, 2), algebra_map(f, 2, 4, {m2(f, {0}), m2(f, {3})})),
                        "diagonal matrices in M2");
        };
        m["ext-kDN-k"] = [](const Field& f) {
            return make("ext-kDN-k", f,
                        ringext::RingExtension(truncated_polynomials(f, 2), trivial_algebra(f),
                                               algebra_map(f, 2, 1, {basis_vector(f, 1, 0), Vector{f.zero()}})),
                        "k[x]/(x^2) -> k, x -> 0; k is not projective over the dual numbers");
        };
        return m;
    }();
    return r;
}

} // namespace

std::string to_string(Kind k) {
    switch (k) {
    case Kind::algebra: return "algebra";
    case Kind::coalgebra: return "coalgebra";
    case Kind::bialgebra: return "bialgebra";
    case Kind::doi_hopf: return "doi_hopf";
    case Kind::entwining: return "entwining";
    case Kind::factorization: return "factorization";
    case Kind::ring_extension: return "ring_extension";
    }
    return "?";
}

std::optional<Entwining> CorpusEntry::entwining() const {
    if (const auto* e = std::get_if<Entwining>(&payload)) return *e;
    if (const auto* d = std::get_if<DoiHopfDatum>(&payload)) return from_doi_hopf(*d);
    return std::nullopt;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

CorpusEntry builtin(const std::string& name, const Field& f) {
    auto it = registry().find(name);
    if (it == registry().end()) throw ContractViolation("unknown corpus entry '" + name + "'");
    return it->second(f);
}

std::vector<CorpusEntry> all_builtins(const Field& f) {
    std::vector<CorpusEntry> out;
    for (const auto& n : builtin_names()) out.push_back(builtin(n, f));
    return out;
}

std::vector<std::pair<std::string, Entwining>> builtin_entwinings(const Field& f) {
    std::vector<std::pair<std::string, Entwining>> out;
    for (const auto& e : all_builtins(f))
        if (auto en = e.entwining()) out.emplace_back(e.name, std::move(*en));
    return out;
}

std::vector<std::pair<std::string, ringext::RingExtension>> builtin_extensions(const Field& f) {
    std::vector<std::pair<std::string, ringext::RingExtension>> out;
    for (const auto& e : all_builtins(f))
        if (const auto* x = std::get_if<ringext::RingExtension>(&e.payload)) out.emplace_back(e.name, *x);
    return out;
}

ValidationReport validate(const Payload& p) {
    return std::visit(
        [](const auto& v) -> ValidationReport {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AlgebraData>) {
                return check_algebra(v);
            } else if constexpr (std::is_same_v<T, CoalgebraData>) {
                return check_coalgebra(v);
            } else if constexpr (std::is_same_v<T, BialgebraData>) {
                return check_bialgebra(v);
            } else if constexpr (std::is_same_v<T, DoiHopfDatum>) {
                auto r = check_doi_hopf(v);
                if (r.valid()) r.absorb(check_entwining(from_doi_hopf(v)), "induced");
                return r;
            } else if constexpr (std::is_same_v<T, Entwining>) {
                ValidationReport r{"entwining structure", {}};
                r.absorb(check_algebra(v.a), "A");
                r.absorb(check_coalgebra(v.c), "C");
                if (r.valid()) r.absorb(check_entwining(v));
                return r;
            } else if constexpr (std::is_same_v<T, smash::Factorization>) {
                return smash::check_factorization(v);
            } else {
                ValidationReport r{"ring extension", {}};
                r.absorb(check_algebra(v.r), "R");
                r.absorb(check_algebra(v.s), "S");
                if (r.valid()) r.absorb(check_algebra_map(v.r, v.s, v.i), "i");
                return r;
            }
        },
        p);
}

ValidationReport validate(const CorpusEntry& e) {
    auto r = validate(e.payload);
    if (e.dual_of) {
        const auto* f = std::get_if<smash::Factorization>(&e.payload);
        if (!f) throw ContractViolation("dual_of is only meaningful for factorizations");
        r.absorb(check_coalgebra(*e.dual_of), "C");
        if (r.valid() && !(f->b == dual_algebra(*e.dual_of, true)))
            r.failures.push_back(Failure{"B = (C*)^op", {}, {}, "B", "(C*)^op"});
    }
    return r;
}

std::vector<std::pair<std::string, LinMap>> components(const Payload& p) {
    return std::visit(
        [](const auto& v) -> std::vector<std::pair<std::string, LinMap>> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AlgebraData>) {
                return {{"mult", v.mult}, {"unit", v.unit}};
            } else if constexpr (std::is_same_v<T, CoalgebraData>) {
                return {{"comult", v.comult}, {"counit", v.counit}};
            } else if constexpr (std::is_same_v<T, BialgebraData>) {
                return {{"mult", v.algebra.mult}, {"unit", v.algebra.unit}, {"comult", v.coalgebra.comult}, {"counit", v.coalgebra.counit}};
            } else if constexpr (std::is_same_v<T, DoiHopfDatum>) {
                return {{"H.mult", v.h.algebra.mult}, {"H.unit", v.h.algebra.unit},   {"H.comult", v.h.coalgebra.comult},
                        {"H.counit", v.h.coalgebra.counit}, {"A.mult", v.a.mult},   {"A.unit", v.a.unit},
                        {"coaction", v.coaction},          {"C.comult", v.c.comult}, {"C.counit", v.c.counit},
                        {"action", v.action}};
            } else if constexpr (std::is_same_v<T, Entwining>) {
                return {{"A.mult", v.a.mult}, {"A.unit", v.a.unit}, {"C.comult", v.c.comult}, {"C.counit", v.c.counit}, {"psi", v.psi}};
            } else if constexpr (std::is_same_v<T, smash::Factorization>) {
                return {{"B.mult", v.b.mult}, {"B.unit", v.b.unit}, {"A.mult", v.a.mult}, {"A.unit", v.a.unit}, {"R", v.rmap}};
            } else {
                return {{"R.mult", v.r.mult}, {"R.unit", v.r.unit}, {"S.mult", v.s.mult}, {"S.unit", v.s.unit}, {"i", v.i}};
            }
        },
        p);
}

Payload with_component(const Payload& p, const std::string& name, const LinMap& x) {
    Payload out = p;
    bool found = false;
    auto set = [&](const char* n, LinMap& slot) {
        if (name == n) {
            if (slot.domain() != x.domain() || slot.codomain() != x.codomain())
                throw ContractViolation("component '" + name + "' has the wrong shape");
            slot = x;
            found = true;
        }
    };
    std::visit(
        [&](auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AlgebraData>) {
                set("mult", v.mult), set("unit", v.unit);
            } else if constexpr (std::is_same_v<T, CoalgebraData>) {
                set("comult", v.comult), set("counit", v.counit);
            } else if constexpr (std::is_same_v<T, BialgebraData>) {
                set("mult", v.algebra.mult), set("unit", v.algebra.unit);
                set("comult", v.coalgebra.comult), set("counit", v.coalgebra.counit);
            } else if constexpr (std::is_same_v<T, DoiHopfDatum>) {
                set("H.mult", v.h.algebra.mult), set("H.unit", v.h.algebra.unit);
                set("H.comult", v.h.coalgebra.comult), set("H.counit", v.h.coalgebra.counit);
                set("A.mult", v.a.mult), set("A.unit", v.a.unit), set("coaction", v.coaction);
                set("C.comult", v.c.comult), set("C.counit", v.c.counit), set("action", v.action);
            } else if constexpr (std::is_same_v<T, Entwining>) {
                set("A.mult", v.a.mult), set("A.unit", v.a.unit), set("C.comult", v.c.comult), set("C.counit", v.c.counit);
                set("psi", v.psi);
            } else if constexpr (std::is_same_v<T, smash::Factorization>) {
                set("B.mult", v.b.mult), set("B.unit", v.b.unit), set("A.mult", v.a.mult), set("A.unit", v.a.unit);
                set("R", v.rmap);
            } else {
                set("R.mult", v.r.mult), set("R.unit", v.r.unit), set("S.mult", v.s.mult), set("S.unit", v.s.unit);
                set("i", v.i);
            }
        },
        out);
    if (!found) throw ContractViolation("no component named '" + name + "'");
    return out;
}

std::vector<Mutation> standard_mutations(const Field& f, std::size_t count, std::uint64_t seed) {
    const auto& names = builtin_names();
    std::map<std::string, std::vector<std::pair<std::string, LinMap>>> cache;
    std::mt19937_64 rng(seed);
    std::vector<Mutation> out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& name = names[i % names.size()];
        auto it = cache.find(name);
        if (it == cache.end()) it = cache.emplace(name, components(builtin(name, f).payload)).first;
        const auto& comps = it->second;
        const auto& [cname, map] = comps[rng() % comps.size()];
        Mutation m{name, cname, 0, 0};
        m.row = rng() % map.matrix().rows();
        m.col = rng() % map.matrix().cols();
        out.push_back(m);
    }
    return out;
}

Payload apply_mutation(const Payload& p, const Mutation& m) {
    for (const auto& [name, map] : components(p)) {
        if (name != m.component) continue;
        Matrix mat = map.matrix();
        mat.add_to(m.row, m.col, mat.field().one());
        return with_component(p, name, LinMap(map.domain(), map.codomain(), std::move(mat)));
    }
    throw ContractViolation("no component named '" + m.component + "'");
}

AlgebraData trivial_algebra(const Field& f) { return cyclic_group_algebra(f, 1); }

AlgebraData cyclic_group_algebra(const Field& f, std::size_t n) {
    return AlgebraData::from_table(
        f, n, [&](std::size_t i, std::size_t j, std::size_t k) { return (i + j) % n == k ? f.one() : f.zero(); },
        basis_vector(f, n, 0));
}

AlgebraData matrix_algebra(const Field& f, std::size_t n) {
    // e_ij e_kl = delta_jk e_il, index i * n + j
    Vector unit(n * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
    return AlgebraData::from_table(
        f, n * n,
        [&](std::size_t x, std::size_t y, std::size_t z) {
            return (x % n == y / n && z == (x / n) * n + y % n) ? f.one() : f.zero();
        },
        unit);
}

AlgebraData diagonal_algebra(const Field& f, std::size_t n) {
    return AlgebraData::from_table(
        f, n, [&](std::size_t i, std::size_t j, std::size_t k) { return i == j && j == k ? f.one() : f.zero(); },
        all_ones(f, n));
}

AlgebraData truncated_polynomials(const Field& f, std::size_t n) {
    return AlgebraData::from_table(
        f, n, [&](std::size_t i, std::size_t j, std::size_t k) { return i + j == k ? f.one() : f.zero(); },
        basis_vector(f, n, 0));
}

CoalgebraData grouplike_coalgebra(const Field& f, std::size_t n) {
    return CoalgebraData::from_table(
        f, n, [&](std::size_t i, std::size_t j, std::size_t k) { return i == j && j == k ? f.one() : f.zero(); },
        all_ones(f, n));
}

CoalgebraData divided_power_coalgebra(const Field& f, std::size_t n) {
    return CoalgebraData::from_table(
        f, n, [&](std::size_t i, std::size_t j, std::size_t k) { return j + k == i ? f.one() : f.zero(); },
        basis_vector(f, n, 0));
}

CoalgebraData matrix_coalgebra(const Field& f, std::size_t n) {
    // Delta(e_ij) = sum_k e_ik (x) e_kj
    Vector counit(n * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) counit[i * n + i] = f.one();
    return CoalgebraData::from_table(
        f, n * n,
        [&](std::size_t x, std::size_t y, std::size_t z) {
            return (y / n == x / n && z % n == x % n && y % n == z / n) ? f.one() : f.zero();
        },
        counit);
}

BialgebraData cyclic_group_bialgebra(const Field& f, std::size_t n) {
    return BialgebraData(cyclic_group_algebra(f, n), grouplike_coalgebra(f, n));
}

BialgebraData sweedler_bialgebra(const Field& f) {
    // g^a x^b has index a + 2b
    auto mult = [&](std::size_t i, std::size_t j, std::size_t k) {
        const std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
        if (b + d > 1) return f.zero();
        if (k != (a + c) % 2 + 2 * (b + d)) return f.zero();
        return (b * c) % 2 ? -f.one() : f.one();
    };
    auto comult = [&](std::size_t i, std::size_t j, std::size_t k) {
        const std::size_t a = i % 2, b = i / 2;
        if (b == 0) return j == a && k == a ? f.one() : f.zero();
        // g^a x -> g^a x (x) g^a + g^(a+1) (x) g^a x
        if (j == a + 2 && k == a) return f.one();
        if (j == (a + 1) % 2 && k == a + 2) return f.one();
        return f.zero();
    };
    Vector counit{f.one(), f.one(), f.zero(), f.zero()};
    return BialgebraData(AlgebraData::from_table(f, 4, mult, basis_vector(f, 4, 0)), CoalgebraData::from_table(f, 4, comult, counit));
}

std::optional<DoiHopfDatum> random_doi_hopf(std::array<std::size_t, 3> dims, const Field& f, std::uint64_t seed,
                                            std::size_t attempts) {
    const auto [nh, na, nc] = dims;
    if (nh == 0 || na == 0 || nc == 0) throw ContractViolation("random_doi_hopf: dimensions must be positive");
    auto h = cyclic_group_bialgebra(f, nh);

    std::vector<AlgebraData> algebras{cyclic_group_algebra(f, na), diagonal_algebra(f, na), truncated_polynomials(f, na)};
    if (na == 4) algebras.push_back(matrix_algebra(f, 2));
    std::vector<CoalgebraData> coalgebras{grouplike_coalgebra(f, nc), divided_power_coalgebra(f, nc)};
    if (nc == 4) coalgebras.push_back(matrix_coalgebra(f, 2));

    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        const auto& a = algebras[rng() % algebras.size()];
        const auto& c = coalgebras[rng() % coalgebras.size()];
        std::vector<std::size_t> deg(na);
        for (auto& d : deg) d = rng() % nh;
        std::vector<std::size_t> perm(nc);
        for (std::size_t i = 0; i < nc; ++i) perm[i] = i;
        for (std::size_t i = nc; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
        DoiHopfDatum d{h, a, grading_coaction(f, deg, nh), c, permutation_action(f, perm, nh)};
        if (check_doi_hopf(d).valid()) return d;
    }
    return std::nullopt;
}

} // namespace entwine::corpus
