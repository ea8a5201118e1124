#include "infhom/cli.hpp"

#include "infhom/document.hpp"
#include "infhom/errors.hpp"
#include "infhom/lqt.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace infhom {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

struct Flags {
    std::string file;
    std::optional<std::size_t> max_weight;
    std::optional<int> max_degree;
    std::optional<std::size_t> max_arity;
    std::string n;
    std::string coinvariants;
    std::string format = "text";
    std::size_t jobs = 1;
};

class Failure : public std::runtime_error {
public:
    Failure(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

AlgebraDocument load(const Flags& f, std::ostream& err) {
    std::ifstream in(f.file, std::ios::binary);
    if (!in) throw Failure(exit_invalid, "cannot read " + f.file);
    std::stringstream buf;
    buf << in.rdbuf();
    ParseResult r = parse_document(buf.str());
    if (!r.ok()) {
        for (const auto& d : r.diagnostics) err << f.file << ":" << d.format() << "\n";
        throw Failure(exit_invalid, std::to_string(r.diagnostics.size()) + " diagnostic(s) in " + f.file);
    }
    if (f.max_arity)
        for (const auto& op : r.document->ops)
            if (op.arity > *f.max_arity)
                throw Failure(exit_invalid, "operation of arity " + std::to_string(op.arity) +
                                                " exceeds --max-arity " + std::to_string(*f.max_arity));
    return *r.document;
}

std::size_t parse_size(const std::string& s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || v == 0) throw Failure(exit_invalid, "invalid matrix size \"" + s + "\"");
    return v;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_size(item));
    if (out.empty()) throw Failure(exit_invalid, "empty --n list");
    return out;
}

ojson inputs_json(const AlgebraDocument& doc) {
    return {{"name", doc.name}, {"kind", to_string(doc.kind)}, {"dim", doc.basis.size()}};
}

ojson cap_json(const WeightCap& c) {
    return {{"max_weight", c.max_weight},
            {"max_degree", c.max_degree >= kUnbounded ? ojson(nullptr) : ojson(c.max_degree)}};
}

ojson payload(const std::string& command, ojson inputs, ojson caps, ojson tables, ojson verdicts) {
    ojson j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["caps"] = std::move(caps);
    j["tables"] = std::move(tables);
    j["verdicts"] = std::move(verdicts);
    return j;
}

/// Weight cap that makes a square-zero check complete: compositions of two
/// structure maps have arity at most 2M - 1.
WeightCap complete_cap(std::size_t max_arity) {
    return WeightCap{std::max<std::size_t>(1, 2 * std::max<std::size_t>(1, max_arity) - 1), kUnbounded};
}

WeightCap check_cap(const Flags& f, const AlgebraDocument& doc, std::size_t max_arity) {
    WeightCap c = complete_cap(max_arity);
    if (doc.caps) c = *doc.caps;
    if (f.max_weight) c.max_weight = *f.max_weight;
    if (f.max_degree) c.max_degree = *f.max_degree;
    return c;
}

WeightCap homology_cap(const Flags& f, const AlgebraDocument& doc, int extra) {
    int d = 4;
    std::optional<std::size_t> w;
    if (doc.caps) {
        d = doc.caps->max_degree;
        w = doc.caps->max_weight;
    }
    if (f.max_degree) d = *f.max_degree;
    if (f.max_weight) w = *f.max_weight;
    if (d < 0) throw Failure(exit_invalid, "negative --max-degree");
    return WeightCap{w.value_or(static_cast<std::size_t>(d + extra)), d};
}

void require_stasheff(const AInftyAlgebra& a) {
    auto r = check_stasheff(a, complete_cap(a.m.max_arity()));
    if (!passed(r)) throw AxiomViolation("not an A-infinity algebra", std::get<Violation>(r).witness);
}

void require_linfty(const LInftyAlgebra& l) {
    auto r = check_linfty(l, complete_cap(l.ell.max_arity()));
    if (!passed(r)) throw AxiomViolation("not an L-infinity algebra", std::get<Violation>(r).witness);
}

std::string table_text(const std::string& title, const std::string& symbol, const BettiTable& t,
                       const std::vector<Index>* primitives = nullptr) {
    std::ostringstream os;
    os << title << " (max weight " << t.cap.max_weight << ", max degree " << t.cap.max_degree << ")\n";
    os << std::left << std::setw(6) << "k" << std::setw(8) << symbol << std::setw(8) << "exact";
    if (primitives) os << "prim";
    os << "\n";
    for (std::size_t k = 0; k < t.dims.size(); ++k) {
        os << std::setw(6) << k << std::setw(8) << t.dims[k] << std::setw(8) << (t.exact[k] ? "yes" : "bound");
        if (primitives) os << (*primitives)[k];
        os << "\n";
    }
    return os.str();
}

int cmd_check(const Flags& f, std::ostream& out, std::ostream& err) {
    const AlgebraDocument doc = load(f, err);
    CheckResult result = Certificate{};
    WeightCap cap;
    try {
        if (doc.kind == AlgebraKind::linfty) {
            LInftyAlgebra l = to_linfty(doc);
            cap = check_cap(f, doc, l.ell.max_arity());
            result = check_linfty(l, cap);
        } else {
            AInftyAlgebra a = to_ainfty(doc);
            cap = check_cap(f, doc, a.m.max_arity());
            result = check_stasheff(a, cap);
        }
    } catch (const AxiomViolation& e) {
        result = Violation{e.what(), {}, {}, e.witness()};
    }
    ojson verdict;
    if (passed(result)) {
        const auto& c = std::get<Certificate>(result);
        verdict = {{"result", "certificate"}, {"words_checked", c.words_checked}};
    } else {
        const auto& v = std::get<Violation>(result);
        verdict = {{"result", "violation"}, {"reason", v.reason}, {"witness", v.witness}};
    }
    if (f.format == "json") {
        out << payload("check", inputs_json(doc), cap_json(cap), ojson::object(), verdict).dump(2) << "\n";
    } else if (passed(result)) {
        out << "certificate: " << doc.name << " squares to zero on " << std::get<Certificate>(result).words_checked
            << " words (max weight " << cap.max_weight << ")\n";
    } else {
        out << "violation: " << std::get<Violation>(result).witness << "\n";
    }
    if (!passed(result)) {
        err << "check failed: " << std::get<Violation>(result).reason << "\n";
        return exit_violation;
    }
    return exit_ok;
}

int cmd_lieify(const Flags& f, std::ostream& out, std::ostream& err) {
    const AlgebraDocument doc = load(f, err);
    if (doc.kind == AlgebraKind::linfty) throw Failure(exit_invalid, "the input is already an linfty document");
    AInftyAlgebra a = to_ainfty(doc);
    require_stasheff(a);
    LInftyAlgebra l = lie_ify(a, true);
    out << serialize_document(from_linfty(l));
    return exit_ok;
}

int cmd_hc(const Flags& f, std::ostream& out, std::ostream& err) {
    const AlgebraDocument doc = load(f, err);
    AInftyAlgebra a = to_ainfty(doc);
    require_stasheff(a);
    const WeightCap cap = homology_cap(f, doc, 2);
    const BettiTable t = cyclic_homology(a, cap);
    if (f.format == "json")
        out << payload("hc", inputs_json(doc), cap_json(cap), {{"cyclic_homology", to_json(t)}}, ojson::object()).dump(2)
            << "\n";
    else
        out << table_text("cyclic homology of " + doc.name, "HC_k", t);
    return exit_ok;
}

int cmd_ce(const Flags& f, std::ostream& out, std::ostream& err) {
    const AlgebraDocument doc = load(f, err);
    const WeightCap cap = homology_cap(f, doc, 1);
    std::optional<GlAlgebra> g;
    ojson inputs = inputs_json(doc);
    const LInftyAlgebra l = [&]() {
        if (!f.n.empty()) {
            if (doc.kind == AlgebraKind::linfty) throw Failure(exit_invalid, "--n needs an A-infinity input");
            AInftyAlgebra a = to_ainfty(doc);
            require_stasheff(a);
            g = gl(a, parse_size(f.n));
            inputs["n"] = g->n;
            return g->lie;
        }
        if (doc.kind == AlgebraKind::linfty) return to_linfty(doc);
        AInftyAlgebra a = to_ainfty(doc);
        require_stasheff(a);
        return lie_ify(a, true);
    }();
    require_linfty(l);
    std::optional<std::vector<SparseVector>> h;
    if (!f.coinvariants.empty()) {
        if (f.coinvariants == "scalars") {
            if (!g) throw Failure(exit_invalid, "--coinvariants scalars needs --n");
            h = g->scalar_subalgebra();
        } else {
            h.emplace();
            std::stringstream ss(f.coinvariants);
            std::string label;
            while (std::getline(ss, label, ',')) {
                auto i = l.space->find(label);
                if (!i) throw Failure(exit_invalid, "unknown label \"" + label + "\" in --coinvariants");
                h->push_back(SparseVector::unit(*i));
            }
        }
        inputs["coinvariants"] = f.coinvariants;
    }
    const LieHomology hom = lie_homology(l, cap, h);
    const HomologyCoproduct cop = homology_coproduct(hom);
    if (f.format == "json") {
        out << payload("ce", inputs, cap_json(cap),
                       {{"lie_homology", to_json(hom.table)}, {"primitive_dims", cop.primitive_dims}}, ojson::object())
                   .dump(2)
            << "\n";
    } else {
        out << table_text("Lie homology of " + l.name + (h ? " modulo " + f.coinvariants : ""), "H_k", hom.table,
                          &cop.primitive_dims);
    }
    return exit_ok;
}

int cmd_lqt(const Flags& f, std::ostream& out, std::ostream& err) {
    const AlgebraDocument doc = load(f, err);
    AInftyAlgebra a = to_ainfty(doc);
    LQTOptions o;
    if (!f.n.empty()) o.sizes = parse_sizes(f.n);
    if (doc.caps) o.max_degree = doc.caps->max_degree;
    if (f.max_degree) o.max_degree = *f.max_degree;
    o.max_weight = f.max_weight;
    o.jobs = f.jobs;
    const LQTReport r = verify_lqt(a, o);
    if (f.format == "json") {
        ojson full = to_json(r);
        ojson inputs = inputs_json(doc);
        inputs["sizes"] = r.options.sizes;
        ojson caps = {{"max_degree", r.options.max_degree},
                      {"ce_max_weight", o.max_weight.value_or(o.max_degree + 1)},
                      {"hc_max_weight", r.hc.cap.max_weight}};
        ojson tables = {{"cyclic_homology", full["cyclic_homology"]},
                        {"exterior", full["exterior"]},
                        {"results", full["results"]}};
        out << payload("lqt", inputs, caps, tables, full["verdicts"]).dump(2) << "\n";
    } else {
        out << to_text(r);
    }
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homology of A-infinity and L-infinity algebras given by structure constants", "infhom"};
    app.require_subcommand(1);
    Flags f;
    auto common = [&f](CLI::App* sub, bool homology) {
        sub->add_option("file", f.file, "algebra document (JSON)")->required();
        sub->add_option("--max-weight", f.max_weight, "largest tensor/exterior weight");
        sub->add_option("--max-degree", f.max_degree, "largest homological degree");
        sub->add_option("--max-arity", f.max_arity, "reject structure maps of larger arity");
        sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json"}));
        if (homology) sub->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto* check = app.add_subcommand("check", "verify the A-infinity / L-infinity identities");
    common(check, false);
    auto* lieify = app.add_subcommand("lieify", "emit the L-infinity document of an A-infinity input");
    common(lieify, false);
    auto* hc = app.add_subcommand("hc", "cyclic homology");
    common(hc, false);
    auto* ce = app.add_subcommand("ce", "Chevalley-Eilenberg homology");
    common(ce, false);
    ce->add_option("--n", f.n, "use gl_n of the input");
    ce->add_option("--coinvariants", f.coinvariants, "comma list of labels, or 'scalars' for gl_n(K)");
    auto* lqt = app.add_subcommand("lqt", "compare H(gl_n(A)) with the exterior algebra on HC(A)[1]");
    common(lqt, true);
    lqt->add_option("--n", f.n, "comma list of matrix sizes (default 3,4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_invalid;
    }

    try {
        if (*check) return cmd_check(f, out, err);
        if (*lieify) return cmd_lieify(f, out, err);
        if (*hc) return cmd_hc(f, out, err);
        if (*ce) return cmd_ce(f, out, err);
        if (*lqt) return cmd_lqt(f, out, err);
    } catch (const Failure& e) {
        err << "error: " << e.what() << "\n";
        return e.code();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const AxiomViolation& e) {
        err << "violation: " << e.what() << "\n";
        return exit_violation;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return exit_cap;
    } catch (const ResourceExceeded& e) {
        err << "resource budget exceeded: " << e.what() << "\n";
        return exit_cap;
    }
    return exit_invalid;
}

}  // namespace infhom
