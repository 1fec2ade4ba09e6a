#include "entwine/io.hpp"

#include <set>

namespace entwine::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
    return *it;
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail(path, "unexpected key \"" + it.key() + "\"");
}

Scalar read_scalar(const json& j, const Field& f, const std::string& path) {
    try {
        if (j.is_string()) return f.parse(j.get<std::string>());
        if (j.is_number_integer()) return f.parse(j.dump());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
    fail(path, "expected a scalar string");
}

void read_level(const json& j, const Field& f, const Shape& dims, std::size_t level, const std::string& path,
                std::vector<Scalar>& out) {
    if (level == dims.size()) {
        out.push_back(read_scalar(j, f, path));
        return;
    }
    if (!j.is_array()) fail(path, "expected an array");
    if (j.size() != dims[level])
        fail(path, "expected " + std::to_string(dims[level]) + " entries, found " + std::to_string(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) read_level(j[k], f, dims, level + 1, path + "/" + std::to_string(k), out);
}

std::size_t leading_size(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array");
    return j.size();
}

// Tensor with axes `dims` read as a map from the `in` axes to the `out` axes.
LinMap read_map(const json& j, const Field& f, const Shape& dims, const std::vector<std::size_t>& in,
                const std::vector<std::size_t>& out, const std::string& path) {
    std::vector<Scalar> data;
    data.reserve(total(dims));
    read_level(j, f, dims, 0, path, data);
    Shape dom, cod;
    for (auto a : in) dom.push_back(dims[a]);
    for (auto a : out) cod.push_back(dims[a]);
    return LinMap::from_entries(f, dom, cod, [&](std::size_t o, std::size_t i) {
        std::vector<std::size_t> idx(dims.size());
        auto iv = unflatten(dom, i), ov = unflatten(cod, o);
        for (std::size_t k = 0; k < in.size(); ++k) idx[in[k]] = iv[k];
        for (std::size_t k = 0; k < out.size(); ++k) idx[out[k]] = ov[k];
        return data[flatten(dims, idx)];
    });
}

json write_level(const LinMap& m, const Shape& dims, const std::vector<std::size_t>& in, const std::vector<std::size_t>& out,
                 std::vector<std::size_t>& idx, std::size_t level) {
    if (level == dims.size()) {
        Shape dom, cod;
        std::vector<std::size_t> iv, ov;
        for (auto a : in) dom.push_back(dims[a]), iv.push_back(idx[a]);
        for (auto a : out) cod.push_back(dims[a]), ov.push_back(idx[a]);
        return scalar_to_json(m.coeff(flatten(cod, ov), flatten(dom, iv)));
    }
    json arr = json::array();
    for (std::size_t k = 0; k < dims[level]; ++k) {
        idx[level] = k;
        arr.push_back(write_level(m, dims, in, out, idx, level + 1));
    }
    return arr;
}

json write_map(const LinMap& m, const Shape& dims, const std::vector<std::size_t>& in, const std::vector<std::size_t>& out) {
    std::vector<std::size_t> idx(dims.size());
    return write_level(m, dims, in, out, idx, 0);
}

AlgebraData read_algebra(const json& j, const Field& f, const std::string& path) {
    only_keys(j, {"mult", "unit"}, path);
    const std::size_t n = leading_size(member(j, "mult", path), path + "/mult");
    auto mult = read_map(j["mult"], f, {n, n, n}, {0, 1}, {2}, path + "/mult");
    auto unit = read_map(member(j, "unit", path), f, {n}, {}, {0}, path + "/unit");
    return AlgebraData(mult, unit);
}

CoalgebraData read_coalgebra(const json& j, const Field& f, const std::string& path) {
    only_keys(j, {"comult", "counit"}, path);
    const std::size_t n = leading_size(member(j, "comult", path), path + "/comult");
    auto comult = read_map(j["comult"], f, {n, n, n}, {0}, {1, 2}, path + "/comult");
    auto counit = read_map(member(j, "counit", path), f, {n}, {0}, {}, path + "/counit");
    return CoalgebraData(comult, counit);
}

BialgebraData read_bialgebra(const json& j, const Field& f, const std::string& path) {
    only_keys(j, {"mult", "unit", "comult", "counit"}, path);
    json a = {{"mult", member(j, "mult", path)}, {"unit", member(j, "unit", path)}};
    json c = {{"comult", member(j, "comult", path)}, {"counit", member(j, "counit", path)}};
    auto alg = read_algebra(a, f, path);
    auto coalg = read_coalgebra(c, f, path);
    if (alg.dim() != coalg.dim()) fail(path, "algebra and coalgebra dimensions differ");
    return BialgebraData(alg, coalg);
}

json algebra_json(const AlgebraData& a) {
    const std::size_t n = a.dim();
    return {{"mult", write_map(a.mult, {n, n, n}, {0, 1}, {2})}, {"unit", write_map(a.unit, {n}, {}, {0})}};
}

json coalgebra_json(const CoalgebraData& c) {
    const std::size_t n = c.dim();
    return {{"comult", write_map(c.comult, {n, n, n}, {0}, {1, 2})}, {"counit", write_map(c.counit, {n}, {0}, {})}};
}

corpus::Payload read_payload(const std::string& key, const json& j, const Field& f, std::optional<CoalgebraData>& dual_of) {
    const std::string path = "/" + key;
    if (key == "algebra") return read_algebra(j, f, path);
    if (key == "coalgebra") return read_coalgebra(j, f, path);
    if (key == "bialgebra") return read_bialgebra(j, f, path);
    if (key == "entwining") {
        only_keys(j, {"algebra", "coalgebra", "psi"}, path);
        auto a = read_algebra(member(j, "algebra", path), f, path + "/algebra");
        auto c = read_coalgebra(member(j, "coalgebra", path), f, path + "/coalgebra");
        auto psi = read_map(member(j, "psi", path), f, {c.dim(), a.dim(), a.dim(), c.dim()}, {0, 1}, {2, 3}, path + "/psi");
        return Entwining(a, c, psi);
    }
    if (key == "doi_hopf") {
        only_keys(j, {"bialgebra", "algebra", "coaction", "coalgebra", "action"}, path);
        auto h = read_bialgebra(member(j, "bialgebra", path), f, path + "/bialgebra");
        auto a = read_algebra(member(j, "algebra", path), f, path + "/algebra");
        auto c = read_coalgebra(member(j, "coalgebra", path), f, path + "/coalgebra");
        const std::size_t nh = h.dim(), na = a.dim(), nc = c.dim();
        auto rho = read_map(member(j, "coaction", path), f, {na, na, nh}, {0}, {1, 2}, path + "/coaction");
        auto act = read_map(member(j, "action", path), f, {nc, nh, nc}, {0, 1}, {2}, path + "/action");
        return DoiHopfDatum{h, a, rho, c, act};
    }
    if (key == "factorization") {
        only_keys(j, {"b", "a", "r", "dual_of"}, path);
        auto b = read_algebra(member(j, "b", path), f, path + "/b");
        auto a = read_algebra(member(j, "a", path), f, path + "/a");
        auto r = read_map(member(j, "r", path), f, {a.dim(), b.dim(), b.dim(), a.dim()}, {0, 1}, {2, 3}, path + "/r");
        if (j.contains("dual_of")) dual_of = read_coalgebra(j["dual_of"], f, path + "/dual_of");
        return smash::Factorization(b, a, r);
    }
    if (key == "ring_extension") {
        only_keys(j, {"r", "s", "i"}, path);
        ringext::RingExtension x;
        x.r = read_algebra(member(j, "r", path), f, path + "/r");
        x.s = read_algebra(member(j, "s", path), f, path + "/s");
        x.i = read_map(member(j, "i", path), f, {x.r.dim(), x.s.dim()}, {0}, {1}, path + "/i");
        return x;
    }
    fail(path, "unknown payload");
}

} // namespace

Field parse_field(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    const auto& kind = member(j, "kind", path);
    if (kind == "Q") {
        only_keys(j, {"kind"}, path);
        return Field::rationals();
    }
    if (kind == "Fp") {
        only_keys(j, {"kind", "p"}, path);
        const auto& p = member(j, "p", path);
        if (!p.is_number_unsigned()) fail(path + "/p", "expected a positive integer");
        try {
            return Field::prime(p.get<std::uint64_t>());
        } catch (const ContractViolation& e) {
            fail(path + "/p", e.what());
        }
    }
    fail(path + "/kind", "expected \"Q\" or \"Fp\"");
}

json field_to_json(const Field& f) {
    if (f.is_rational()) return {{"kind", "Q"}};
    return {{"kind", "Fp"}, {"p", f.characteristic()}};
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

json linmap_to_json(const LinMap& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.matrix().rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.matrix().cols(); ++c) row.push_back(scalar_to_json(m.coeff(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"domain", m.domain()}, {"codomain", m.codomain()}, {"matrix", rows}};
}

std::string payload_key(corpus::Kind k) { return corpus::to_string(k); }

StructureFile parse_structure(const json& doc) {
    static const std::set<std::string> payload_keys{"algebra", "coalgebra", "bialgebra", "entwining", "doi_hopf", "factorization", "ring_extension"};
    if (!doc.is_object()) fail("", "expected a JSON object");
    StructureFile out;
    out.field = parse_field(member(doc, "field", ""));
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "field" || it.key() == "name" || it.key() == "note") continue;
        if (!payload_keys.count(it.key())) fail("", "unexpected key \"" + it.key() + "\"");
        try {
            out.payloads.emplace_back(it.key(), read_payload(it.key(), it.value(), out.field, out.dual_of));
        } catch (const ContractViolation& e) {
            fail("/" + it.key(), e.what());
        }
    }
    if (out.payloads.empty()) fail("", "no structure in file");
    return out;
}

StructureFile parse_structure_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    return parse_structure(doc);
}

json payload_to_json(const corpus::Payload& p) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AlgebraData>) {
                return algebra_json(v);
            } else if constexpr (std::is_same_v<T, CoalgebraData>) {
                return coalgebra_json(v);
            } else if constexpr (std::is_same_v<T, BialgebraData>) {
                auto j = algebra_json(v.algebra);
                j.update(coalgebra_json(v.coalgebra));
                return j;
            } else if constexpr (std::is_same_v<T, DoiHopfDatum>) {
                auto h = algebra_json(v.h.algebra);
                h.update(coalgebra_json(v.h.coalgebra));
                const std::size_t nh = v.h.dim(), na = v.a.dim(), nc = v.c.dim();
                return {{"bialgebra", h},
                        {"algebra", algebra_json(v.a)},
                        {"coaction", write_map(v.coaction.reshaped({na}, {na, nh}), {na, na, nh}, {0}, {1, 2})},
                        {"coalgebra", coalgebra_json(v.c)},
                        {"action", write_map(v.action.reshaped({nc, nh}, {nc}), {nc, nh, nc}, {0, 1}, {2})}};
            } else if constexpr (std::is_same_v<T, Entwining>) {
                const std::size_t na = v.na(), nc = v.nc();
                return {{"algebra", algebra_json(v.a)},
                        {"coalgebra", coalgebra_json(v.c)},
                        {"psi", write_map(v.psi, {nc, na, na, nc}, {0, 1}, {2, 3})}};
            } else if constexpr (std::is_same_v<T, smash::Factorization>) {
                const std::size_t na = v.na(), nb = v.nb();
                return {{"b", algebra_json(v.b)}, {"a", algebra_json(v.a)}, {"r", write_map(v.rmap, {na, nb, nb, na}, {0, 1}, {2, 3})}};
            } else {
                return {{"r", algebra_json(v.r)}, {"s", algebra_json(v.s)}, {"i", write_map(v.i, {v.nr(), v.ns()}, {0}, {1})}};
            }
        },
        p);
}

json entry_to_json(const corpus::CorpusEntry& e) {
    json j;
    j["name"] = e.name;
    j["note"] = e.note;
    j["field"] = field_to_json(e.field);
    auto payload = payload_to_json(e.payload);
    if (e.dual_of) payload["dual_of"] = coalgebra_json(*e.dual_of);
    j[payload_key(e.kind())] = std::move(payload);
    return j;
}

} // namespace entwine::io
