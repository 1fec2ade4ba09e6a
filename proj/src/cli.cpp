#include "entwine/cli.hpp"

#include "entwine/actforget.hpp"
#include "entwine/coforget.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

namespace entwine::cli {

using io::json;

namespace {

LinMap id(const Field& f, std::size_t n) { return LinMap::identity(f, {n}); }

bool all_zero(const std::vector<LinMap>& maps) {
    for (const auto& m : maps)
        if (!m.is_zero()) return false;
    return true;
}

int exit_for(Answer a) {
    switch (a) {
    case Answer::yes: return exit_yes;
    case Answer::no: return exit_no;
    case Answer::unknown: return exit_unknown;
    }
    return exit_unknown;
}

json verdict_json(const Verdict& v) {
    json w = json::object();
    for (const auto& [name, map] : v.witnesses) w[name] = io::linmap_to_json(map);
    return {{"verdict", to_string(v.answer)}, {"reason", v.reason}, {"examined", v.examined}, {"witnesses", w}};
}

json report_json(const ValidationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"law", f.law}, {"input", f.input}, {"output", f.output}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return {{"subject", r.subject}, {"valid", r.valid()}, {"failures", failures}};
}

json budget_json(const SearchBudget& b) {
    return {{"enum_budget", b.enum_budget}, {"trials", b.trials}, {"seed", b.seed}};
}

// Re-checks of yes-witnesses by direct evaluation of the defining identities.
bool reverify_entwining(const std::string& q, const Entwining& e, const Verdict& v) {
    if (!v.yes()) return true;
    const Field& f = e.field();
    auto uc = e.a.unit * e.c.counit;
    if (q == "F-sep") {
        const auto& t = v.at("theta");
        return all_zero(coforget::theta_residual(e, t)) && t.reshaped({e.nc(), e.nc()}, {e.na()}) * e.c.comult == uc;
    }
    if (q == "G-sep") {
        const auto& z = v.at("z");
        return all_zero(coforget::z_residual(e, z)) && tensor(id(f, e.na()), e.c.counit) * z.reshaped({}, {e.na(), e.nc()}) == e.a.unit;
    }
    if (q == "FG-frob") return coforget::check_frobenius_witnesses(e, v.at("theta"), v.at("z")).valid();
    if (q == "Fp-sep") {
        const auto& t = v.at("vartheta");
        return all_zero(actforget::vartheta_residual(e, t)) &&
               t.reshaped({e.nc(), e.na()}, {}) * tensor(id(f, e.nc()), e.a.unit) == e.c.counit;
    }
    if (q == "Gp-sep") {
        const auto& x = v.at("e");
        return all_zero(actforget::e_residual(e, x)) && e.a.mult * x.reshaped({e.nc()}, {e.na(), e.na()}) == uc;
    }
    if (q == "FpGp-frob") return actforget::check_frobenius_witnesses(e, v.at("vartheta"), v.at("e")).valid();
    return false;
}

bool reverify_extension(const std::string& q, const ringext::RingExtension& x, const Verdict& v) {
    if (!v.yes()) return true;
    auto tq = ringext::tensor_over_R(x);
    if (q == "ext-split") {
        const auto& nu = v.at("nu");
        return all_zero(ringext::conditional_expectations(x).residual()(nu)) && nu * x.s.unit == x.r.unit;
    }
    if (q == "ext-sep") {
        const auto& e = v.at("e");
        return all_zero(ringext::casimir_elements(x, tq).residual()(e)) && x.s.mult * tq.section * e == x.s.unit;
    }
    if (q == "ext-frob") return ringext::check_frobenius_witnesses(x, tq, v.at("nu"), v.at("e")).valid();
    return false;
}

bool reverify_smash(const smash::Factorization& f, const smash::ExtensionReport& r) {
    bool ok = true;
    if (r.split.yes()) {
        const auto& k = r.split.at("kappa");
        ok = ok && all_zero(smash::kappa_residual(f, k)) && k * f.b.unit == f.a.unit;
    }
    if (r.separable.yes()) {
        const auto& e = r.separable.at("e");
        ok = ok && all_zero(smash::w3_residual(f, e)) &&
             tensor(f.b.mult, id(f.field(), f.na())) * e.reshaped({}, {f.nb(), f.nb(), f.na()}) == tensor(f.b.unit, f.a.unit);
    }
    if (r.frobenius.yes()) ok = ok && smash::check_frobenius_witnesses(f, r.frobenius.at("kappa"), r.frobenius.at("e")).valid();
    return ok;
}

const std::map<std::string, std::string>& criteria() {
    static const std::map<std::string, std::string> c{
        {"F-sep", "induction - (x) C is separable: theta in V1 with theta(c(1) (x) c(2)) = epsilon(c)1"},
        {"G-sep", "forgetting the coaction is separable: z in W1 with (id (x) epsilon)z = 1"},
        {"FG-frob", "forgetting the coaction and - (x) C form a Frobenius pair: theta in V1, z in W1 normalized"},
        {"Fp-sep", "- (x) A is separable: vartheta with vartheta(c (x) 1) = epsilon(c)"},
        {"Gp-sep", "forgetting the action is separable: e with e^1(c)e^2(c) = epsilon(c)1"},
        {"FpGp-frob", "- (x) A and forgetting the action form a Frobenius pair: vartheta, e normalized"},
        {"ext-split", "S/R is split: conditional expectation nu with nu(1) = 1"},
        {"ext-sep", "S/R is separable: Casimir element e with e^1 e^2 = 1"},
        {"ext-frob", "S/R is Frobenius: nu(e^1)e^2 = e^1 nu(e^2) = 1"},
        {"smash-over-A", "B #_R A over A: split, separable and Frobenius, cross-checked against the ring extension"},
        {"smash-over-B", "B #_R A over B through (A^op #_R~ B^op)/B^op, cross-checked against the ring extension"},
        {"cross-check", "Frobenius pair for forgetting the coaction against (C*)^op #_R A / A Frobenius"},
    };
    return c;
}

template <class T>
const T* find_payload(const io::StructureFile& file) {
    for (const auto& [_, p] : file.payloads)
        if (const auto* x = std::get_if<T>(&p)) return x;
    return nullptr;
}

std::optional<Entwining> find_entwining(const io::StructureFile& file) {
    if (const auto* e = find_payload<Entwining>(file)) return *e;
    if (const auto* d = find_payload<DoiHopfDatum>(file)) return from_doi_hopf(*d);
    return std::nullopt;
}

bool is_entwining_question(const std::string& q) {
    return q == "F-sep" || q == "G-sep" || q == "FG-frob" || q == "Fp-sep" || q == "Gp-sep" || q == "FpGp-frob" || q == "cross-check";
}

// one suite cell
struct Cell {
    bool pass = false;
    std::string detail;
};

template <class Fn>
Cell run_cell(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {false, std::string("error: ") + e.what()};
    }
}

Cell cell_of(bool ok, std::string detail = {}) { return {ok, std::move(detail)}; }

std::string answers(Answer a, Answer b) { return to_string(a) + "/" + to_string(b); }

// A verdict shared by several cells; an exception fails every cell using it.
struct Shared {
    std::optional<Verdict> verdict;
    std::string error;
};

template <class Fn>
Shared shared(Fn&& fn) {
    Shared s;
    try {
        s.verdict = fn();
    } catch (const std::exception& e) {
        s.error = std::string("error: ") + e.what();
    }
    return s;
}

template <class Fn>
Cell with(const Shared& a, const Shared& b, Fn&& fn) {
    if (!a.verdict) return {false, a.error};
    if (!b.verdict) return {false, b.error};
    return run_cell([&] { return fn(*a.verdict, *b.verdict); });
}

Cell routes_cell(const Shared& w, const Shared& i) {
    return with(w, i, [](const Verdict& a, const Verdict& b) {
        return cell_of(a.answer == b.answer && a.answer != Answer::unknown, answers(a.answer, b.answer));
    });
}

std::map<std::string, Cell> entwining_cells(const Entwining& e, const SearchBudget& budget) {
    std::map<std::string, Cell> c;
    auto fg_w = shared([&] { return coforget::FG_frobenius(e, Route::witnesses, budget); });
    auto fg_i = shared([&] { return coforget::FG_frobenius(e, Route::isomorphism, budget); });
    auto fp_w = shared([&] { return actforget::FprimeGprime_frobenius(e, Route::witnesses, budget); });
    auto fp_i = shared([&] { return actforget::FprimeGprime_frobenius(e, Route::isomorphism, budget); });
    c["FG-routes"] = routes_cell(fg_w, fg_i);
    c["FpGp-routes"] = routes_cell(fp_w, fp_i);
    c["cross-check"] = with(fg_w, fg_w, [&](const Verdict& fg, const Verdict&) {
        auto x = smash::cross_check_frobenius(e, fg, budget);
        return cell_of(x.agree, answers(x.coforget.answer, x.smash.answer));
    });
    c["dictionary"] = run_cell([&] {
        auto f = smash::entwining_to_factorization(e);
        auto back = smash::factorization_to_entwining(f, e.c);
        auto again = smash::entwining_to_factorization(back);
        return cell_of(back.psi == e.psi && again.rmap == f.rmap);
    });
    c["adjunction"] = run_cell([&] {
        auto r = adjunction_check(e, {std_object_AC(e), std_object_CA(e), std_object_CstarA(e), std_object_AstarC(e)});
        return cell_of(r.valid(), r.valid() ? "" : r.summary());
    });
    c["dual-bases"] = with(fg_w, fp_w, [&](const Verdict& fg, const Verdict& fpgp) {
        bool ok = true;
        if (fg.yes()) ok = ok && coforget::check_dual_basis_AC(e, coforget::dual_basis_AC(e, fg.at("theta"), fg.at("z"))).valid();
        if (fpgp.yes() && invert_psi(e).phi)
            ok = ok && actforget::check_dual_basis_A(e, actforget::dual_basis_A(e, fpgp.at("vartheta"), fpgp.at("e"))).valid();
        return cell_of(ok);
    });
    return c;
}

std::map<std::string, Cell> extension_cells(const ringext::RingExtension& x, const SearchBudget& budget) {
    std::map<std::string, Cell> c;
    auto w = shared([&] { return ringext::frobenius_check(x, Route::witnesses, budget); });
    auto i = shared([&] { return ringext::frobenius_check(x, Route::isomorphism, budget); });
    c["ext-routes"] = routes_cell(w, i);
    c["dual-bases"] = with(w, w, [&](const Verdict& v, const Verdict&) {
        if (!v.yes()) return cell_of(true, "not Frobenius");
        auto q = ringext::tensor_over_R(x);
        return cell_of(ringext::check_dual_basis_S(x, ringext::dual_basis_S(x, q, v.at("nu"), v.at("e"))).valid());
    });
    return c;
}

std::map<std::string, Cell> factorization_cells(const smash::Factorization& f, const SearchBudget& budget) {
    std::map<std::string, Cell> c;
    c["smash-A"] = run_cell([&] {
        auto r = smash::smash_over_A_report(f, budget);
        return cell_of(r.consistent && reverify_smash(f, r));
    });
    c["smash-B"] = run_cell([&] {
        auto r = smash::smash_over_B_report(f, budget);
        return cell_of(r.consistent && reverify_smash(smash::op_dual(f), r));
    });
    c["op-dual"] = run_cell([&] {
        auto d = smash::op_dual(smash::op_dual(f));
        return cell_of(smash::check_op_dual_isomorphism(f).valid() && d.rmap == f.rmap && d.a == f.a && d.b == f.b);
    });
    c["gamma"] = run_cell([&] { return cell_of(smash::check_gamma_bridge(f).valid()); });
    c["smash-assoc"] = run_cell([&] {
        return cell_of(check_algebra(smash::smash_multiplication(f)).valid() == smash::check_factorization(f).valid());
    });
    return c;
}

json cells_json(const std::map<std::string, Cell>& cells) {
    json j = json::object();
    for (const auto& [k, c] : cells) {
        json cell = {{"result", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty()) cell["detail"] = c.detail;
        j[k] = cell;
    }
    return j;
}

void render(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object()) {
            os << pad << it.key() << ":\n";
            render(os, v, indent + 1);
        } else if (v.is_array() && !v.empty() && v.front().is_array()) {
            os << pad << it.key() << ":\n";
            for (const auto& row : v) os << pad << "  " << row.dump() << "\n";
        } else if (v.is_string()) {
            os << pad << it.key() << ": " << v.get<std::string>() << "\n";
        } else {
            os << pad << it.key() << ": " << v.dump() << "\n";
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

const std::vector<std::string>& questions() {
    static const std::vector<std::string> q{"F-sep",     "G-sep",   "FG-frob", "Fp-sep",       "Gp-sep",       "FpGp-frob",
                                            "ext-split", "ext-sep", "ext-frob", "smash-over-A", "smash-over-B", "cross-check"};
    return q;
}

Field parse_field_name(const std::string& s) {
    if (s == "Q") return Field::rationals();
    std::string digits;
    if (s.rfind("Fp:", 0) == 0)
        digits = s.substr(3);
    else if (s.size() > 1 && s[0] == 'F')
        digits = s.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("field must be Q, F<p> or Fp:<p>, got \"" + s + "\"");
    try {
        return Field::prime(std::stoull(digits));
    } catch (const ContractViolation& e) {
        throw ParseError(e.what());
    } catch (const std::out_of_range&) {
        throw ParseError("field characteristic out of range: " + s);
    }
}

Outcome validate_file(const io::StructureFile& file) {
    Outcome o;
    json reports = json::object();
    bool ok = true;
    for (const auto& [key, payload] : file.payloads) {
        corpus::CorpusEntry entry{key, file.field, payload, {}, std::nullopt};
        if (key == "factorization") entry.dual_of = file.dual_of;
        auto r = corpus::validate(entry);
        ok = ok && r.valid();
        reports[key] = report_json(r);
    }
    o.report = {{"command", "validate"}, {"field", file.field.name()}, {"valid", ok}, {"reports", reports}, {"version", version}};
    o.exit_code = ok ? exit_yes : exit_no;
    return o;
}

Outcome analyze(const io::StructureFile& file, const AnalyzeOptions& opts) {
    const auto& q = opts.question;
    if (!criteria().count(q)) throw ContractViolation("unknown question '" + q + "'");
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    json r = {{"question", q},
              {"criterion", criteria().at(q)},
              {"field", file.field.name()},
              {"search", budget_json(opts.budget)},
              {"version", version}};
    auto require_valid_payload = [&](const corpus::Payload& p) { require_valid(corpus::validate(p)); };

    if (is_entwining_question(q)) {
        auto e = find_entwining(file);
        if (!e) throw ContractViolation("question " + q + " needs an entwining or doi_hopf payload");
        require_valid_payload(*e);
        if (q == "cross-check") {
            auto x = smash::cross_check_frobenius(*e, opts.budget);
            bool reverified = reverify_entwining("FG-frob", *e, x.coforget);
            if (x.smash.yes()) reverified = reverified && smash::check_frobenius_witnesses(smash::entwining_to_factorization(*e), x.smash.at("kappa"), x.smash.at("e")).valid();
            r["coforget"] = verdict_json(x.coforget);
            r["smash"] = verdict_json(x.smash);
            r["agree"] = x.agree;
            r["reverified"] = reverified;
            o.exit_code = x.agree && reverified ? exit_yes : exit_no;
        } else {
            Verdict v;
            if (q == "F-sep") v = coforget::F_separable(*e);
            if (q == "G-sep") v = coforget::G_separable(*e);
            if (q == "FG-frob") v = coforget::FG_frobenius(*e, opts.route, opts.budget);
            if (q == "Fp-sep") v = actforget::Fprime_separable(*e);
            if (q == "Gp-sep") v = actforget::Gprime_separable(*e);
            if (q == "FpGp-frob") v = actforget::FprimeGprime_frobenius(*e, opts.route, opts.budget);
            bool reverified = reverify_entwining(q, *e, v);
            r.update(verdict_json(v));
            r["reverified"] = reverified;
            if (q == "FG-frob" || q == "FpGp-frob") r["route"] = to_string(opts.route);
            o.exit_code = reverified ? exit_for(v.answer) : exit_no;
        }
    } else if (q.rfind("ext-", 0) == 0) {
        const auto* x = find_payload<ringext::RingExtension>(file);
        if (!x) throw ContractViolation("question " + q + " needs a ring_extension payload");
        require_valid_payload(*x);
        Verdict v;
        if (q == "ext-split") v = ringext::split_check(*x);
        if (q == "ext-sep") v = ringext::separable_check(*x);
        if (q == "ext-frob") v = ringext::frobenius_check(*x, opts.route, opts.budget);
        bool reverified = reverify_extension(q, *x, v);
        r.update(verdict_json(v));
        r["reverified"] = reverified;
        if (q == "ext-frob") r["route"] = to_string(opts.route);
        o.exit_code = reverified ? exit_for(v.answer) : exit_no;
    } else {
        const auto* f = find_payload<smash::Factorization>(file);
        if (!f) throw ContractViolation("question " + q + " needs a factorization payload");
        require_valid_payload(*f);
        auto rep = q == "smash-over-A" ? smash::smash_over_A_report(*f, opts.budget) : smash::smash_over_B_report(*f, opts.budget);
        bool reverified = reverify_smash(q == "smash-over-A" ? *f : smash::op_dual(*f), rep);
        r["extension"] = rep.extension;
        r["split"] = verdict_json(rep.split);
        r["separable"] = verdict_json(rep.separable);
        r["frobenius"] = verdict_json(rep.frobenius);
        r["ring_extension"] = {{"split", verdict_json(rep.ringext_split)},
                               {"separable", verdict_json(rep.ringext_separable)},
                               {"frobenius", verdict_json(rep.ringext_frobenius)}};
        r["dimensions"] = {{"V1", rep.v1_dim}, {"V3", rep.v3_dim}, {"W1", rep.w1_dim}, {"W3", rep.w3_dim}};
        r["consistent"] = rep.consistent;
        r["reverified"] = reverified;
        o.exit_code = rep.consistent && reverified ? exit_yes : exit_no;
    }
    if (opts.timing)
        r["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    o.report = std::move(r);
    return o;
}

json corpus_list() {
    json entries = json::array();
    const Field q = Field::rationals();
    for (const auto& name : corpus::builtin_names()) {
        auto e = corpus::builtin(name, q);
        entries.push_back({{"name", name}, {"kind", corpus::to_string(e.kind())}, {"note", e.note}});
    }
    return {{"command", "corpus list"}, {"entries", entries}, {"count", entries.size()}, {"version", version}};
}

Outcome corpus_run(const SuiteOptions& opts) {
    Outcome o;
    json fields = json::object();
    std::size_t passed = 0, failed = 0;
    for (const auto& f : opts.fields) {
        json rows = json::object();
        for (const auto& name : corpus::builtin_names()) {
            auto entry = corpus::builtin(name, f);
            if (opts.inject_mutation && *opts.inject_mutation == name) {
                const auto comps = corpus::components(entry.payload);
                entry.payload = corpus::apply_mutation(entry.payload, {name, comps.back().first, 0, 0});
            }
            std::map<std::string, Cell> cells;
            cells["valid"] = run_cell([&] {
                auto r = corpus::validate(entry);
                return cell_of(r.valid(), r.valid() ? "" : r.failures.front().law);
            });
            if (auto e = std::get_if<Entwining>(&entry.payload)) {
                cells.merge(entwining_cells(*e, opts.budget));
            } else if (auto d = std::get_if<DoiHopfDatum>(&entry.payload)) {
                auto c = run_cell([&] { return cell_of(check_entwining(from_doi_hopf(*d)).valid()); });
                if (c.pass)
                    cells.merge(entwining_cells(from_doi_hopf(*d), opts.budget));
                else
                    cells["induced"] = c;
            } else if (auto x = std::get_if<ringext::RingExtension>(&entry.payload)) {
                cells.merge(extension_cells(*x, opts.budget));
            } else if (auto fa = std::get_if<smash::Factorization>(&entry.payload)) {
                cells.merge(factorization_cells(*fa, opts.budget));
            }
            for (const auto& [_, c] : cells) (c.pass ? passed : failed)++;
            rows[name] = cells_json(cells);
        }
        fields[f.name()] = rows;
    }
    o.report = {{"command", "corpus run"},
                {"fields", fields},
                {"summary", {{"pass", passed}, {"fail", failed}}},
                {"search", budget_json(opts.budget)},
                {"version", version}};
    if (opts.inject_mutation) o.report["injected_mutation"] = *opts.inject_mutation;
    o.exit_code = failed == 0 ? exit_yes : exit_no;
    return o;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    if (report.value("command", "") == "corpus run") {
        // pass/fail matrix per field
        for (const auto& [fname, rows] : report["fields"].items()) {
            std::vector<std::string> cols;
            for (const auto& [_, cells] : rows.items())
                for (const auto& [k, __] : cells.items())
                    if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
            std::sort(cols.begin(), cols.end());
            os << "field " << fname << "\n";
            os << std::string(20, ' ');
            for (const auto& c : cols) os << " " << c;
            os << "\n";
            for (const auto& [name, cells] : rows.items()) {
                std::string label = name;
                label.resize(20, ' ');
                os << label;
                for (const auto& c : cols) {
                    std::string v = cells.contains(c) ? (cells[c]["result"] == "pass" ? "pass" : "FAIL") : "-";
                    v.resize(c.size(), ' ');
                    os << " " << v;
                }
                os << "\n";
            }
        }
        os << "pass " << report["summary"]["pass"].get<std::size_t>() << ", fail " << report["summary"]["fail"].get<std::size_t>()
           << "\n";
        return os.str();
    }
    render(os, report, 0);
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Separability and Frobenius properties of entwining structures, by exact linear algebra"};
    app.require_subcommand(1);
    std::string format = "text";
    app.set_version_flag("--version", version);

    std::string path;
    AnalyzeOptions opts;
    std::string route = "witnesses";
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--seed", opts.budget.seed, "seed for the randomized search phase");
        sub->add_option("--enum-budget", opts.budget.enum_budget, "maximum number of enumerated candidates");
        sub->add_option("--trials", opts.budget.trials, "random candidates after enumeration");
    };

    auto* validate = app.add_subcommand("validate", "run every applicable validator on a structure file");
    validate->add_option("path", path, "structure file")->required();
    validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* analyze_cmd = app.add_subcommand("analyze", "answer one question about a structure file");
    analyze_cmd->add_option("path", path, "structure file")->required();
    analyze_cmd->add_option("--question", opts.question)->required()->check(CLI::IsMember(questions()));
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_option("--route", route, "witnesses or isomorphism")->check(CLI::IsMember({"witnesses", "isomorphism"}));
    analyze_cmd->add_flag("--timing", opts.timing, "include the elapsed time in the report");
    add_budget(analyze_cmd);

    auto* corpus_cmd = app.add_subcommand("corpus", "builtin examples");
    corpus_cmd->require_subcommand(1);
    auto* list = corpus_cmd->add_subcommand("list", "list builtin entries");
    list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    std::string name, field_name = "Q";
    auto* exp = corpus_cmd->add_subcommand("export", "print a builtin as a structure file");
    exp->add_option("name", name)->required();
    exp->add_option("--field", field_name, "Q, F<p> or Fp:<p>");
    std::string mutation;
    std::vector<std::string> run_fields;
    auto* runc = corpus_cmd->add_subcommand("run", "cross-module equivalence suite over the builtins");
    runc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    runc->add_option("--inject-mutation", mutation, "test mode: perturb one constant of this entry");
    runc->add_option("--fields", run_fields, "fields to run over (default F2 F3)");
    add_budget(runc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_input;
    }

    auto emit = [&](const Outcome& o) {
        out << (format == "json" ? o.report.dump(2) + "\n" : render_text(o.report));
        return o.exit_code;
    };

    try {
        if (*validate) return emit(validate_file(io::parse_structure_text(read_file(path))));
        if (*analyze_cmd) {
            opts.route = route == "isomorphism" ? Route::isomorphism : Route::witnesses;
            auto file = io::parse_structure_text(read_file(path));
            return emit(analyze(file, opts));
        }
        if (*list) {
            auto j = corpus_list();
            if (format == "json") {
                out << j.dump(2) << "\n";
            } else {
                for (const auto& e : j["entries"])
                    out << e["name"].get<std::string>() << "  (" << e["kind"].get<std::string>() << ")  "
                        << e["note"].get<std::string>() << "\n";
            }
            return exit_yes;
        }
        if (*exp) {
            out << io::entry_to_json(corpus::builtin(name, parse_field_name(field_name))).dump(2) << "\n";
            return exit_yes;
        }
        if (*runc) {
            SuiteOptions s;
            s.budget = opts.budget;
            if (!mutation.empty()) {
                const auto& names = corpus::builtin_names();
                if (std::find(names.begin(), names.end(), mutation) == names.end())
                    throw ContractViolation("unknown corpus entry '" + mutation + "'");
                s.inject_mutation = mutation;
            }
            if (!run_fields.empty()) {
                s.fields.clear();
                for (const auto& f : run_fields) s.fields.push_back(parse_field_name(f));
            }
            return emit(corpus_run(s));
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const InvalidStructure& e) {
        err << "invalid structure: " << e.what() << "\n";
        return exit_no;
    } catch (const ContractViolation& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

} // namespace entwine::cli
