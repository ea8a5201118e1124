// Acceptance suite: one PASS/FAIL line per criterion on stdout, details on
// stderr. All comparisons are exact (integer dimensions, rational entries).
// Usage: acceptance [criterion...]; no arguments runs all nine.

#include "infhom/cli.hpp"
#include "infhom/document.hpp"
#include "infhom/lqt.hpp"

#include "classical.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace infhom;
using json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(INFHOM_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraDocument load(const std::string& name) {
    auto r = parse_document(slurp(fixture(name)));
    if (!r.ok()) throw std::runtime_error("fixture " + name + " does not parse");
    return *r.document;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "infhom");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string dims_string(const std::vector<Index>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

struct Outcome {
    bool pass;
    std::string detail;
};

// --- 1 ------------------------------------------------------------------------

/// Sign-flip mutants in a fixed order: every single output coefficient in
/// document order, then every pair, then larger sets; the first five.
std::vector<AlgebraDocument> mutants(const AlgebraDocument& doc) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < doc.ops.size(); ++i)
        for (std::size_t j = 0; j < doc.ops[i].output.size(); ++j) slots.emplace_back(i, j);
    std::vector<AlgebraDocument> out;
    for (std::size_t size = 1; size <= slots.size() && out.size() < 5; ++size)
        for (const auto& subset : subsets(slots.size(), size)) {
            if (out.size() == 5) break;
            AlgebraDocument m = doc;
            for (auto s : subset) {
                auto& c = m.ops[slots[s].first].output[slots[s].second].first;
                c = -c;
            }
            out.push_back(std::move(m));
        }
    return out;
}

/// Basis signs s with s_unit = +1 that carry the fixture onto the mutant:
/// each coefficient c of op(x_1..x_k) -> o becomes s_o s_x1 .. s_xk c.
std::optional<std::string> gauge_equivalence(const AlgebraDocument& doc, const AlgebraDocument& mutant) {
    const std::size_t n = doc.basis.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[doc.basis[i].label] = i;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        auto sign = [&](const std::string& l) { return (mask >> index.at(l)) & 1 ? -1 : 1; };
        if (doc.unit && sign(*doc.unit) == -1) continue;
        bool same = true;
        for (std::size_t i = 0; i < doc.ops.size() && same; ++i) {
            int in = 1;
            for (const auto& l : doc.ops[i].inputs) in *= sign(l);
            for (std::size_t j = 0; j < doc.ops[i].output.size() && same; ++j) {
                const auto& [c, l] = doc.ops[i].output[j];
                same = mutant.ops[i].output[j].first == c * in * sign(l);
            }
        }
        if (!same) continue;
        std::string flipped;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) flipped += (flipped.empty() ? "" : ",") + doc.basis[i].label;
        return flipped;
    }
    return std::nullopt;
}

Outcome criterion1() {
    const std::vector<std::string> names{"K.alg", "dual.alg", "upper2.alg", "sl2.alg", "dga.alg", "m3only.alg"};
    bool ok = true;
    std::string summary;
    const auto dir = std::filesystem::temp_directory_path() / "infhom_acceptance";
    std::filesystem::create_directories(dir);
    for (const auto& name : names) {
        auto base = cli({"check", fixture(name)});
        if (base.code != exit_ok) {
            ok = false;
            std::cerr << "  " << name << ": check did not pass: " << base.err;
        }
        const auto doc = load(name);
        const auto ms = mutants(doc);
        std::size_t rejected = 0;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const auto path = (dir / (name + ".mutant" + std::to_string(i))).string();
            std::ofstream(path) << serialize_document(ms[i]);
            auto r = cli({"check", path, "--format", "json"});
            bool witnessed = false;
            if (r.code == exit_violation) {
                auto j = json::parse(r.out, nullptr, false);
                witnessed = !j.is_discarded() && j["verdicts"].contains("witness") &&
                            !j["verdicts"]["witness"].get<std::string>().empty();
            }
            rejected += witnessed;
            std::cerr << "  " << name << " mutant " << i << ": ";
            if (witnessed) {
                std::cerr << "rejected: " << json::parse(r.out)["verdicts"]["witness"].get<std::string>() << "\n";
            } else {
                auto g = gauge_equivalence(doc, ms[i]);
                std::cerr << "accepted (exit " << r.code << ")"
                          << (g ? "; isomorphic to the fixture by negating " + *g : "; not a basis sign change") << "\n";
            }
        }
        if (ms.size() < 5) std::cerr << "  " << name << ": only " << ms.size() << " sign patterns exist\n";
        if (ms.size() < 5 || rejected < 5) ok = false;
        summary += " " + name + "=" + std::to_string(rejected) + "/" + std::to_string(ms.size());
    }
    return {ok, "fixtures pass; mutants rejected (of 5 required):" + summary};
}

// --- 2 ------------------------------------------------------------------------

std::size_t coderivation_violations(const Coderivation& d, std::size_t max_weight, std::size_t& words) {
    std::size_t bad = 0;
    const auto& s = d.space();
    for (std::size_t k = 0; k <= max_weight; ++k)
        for (const Word& w : enumerate_words(s, d.flavor(), k)) {
            ++words;
            const Element dw = d.apply(w);
            if (coproduct(dw, d.flavor(), s) != apply_on_tensor(d, coproduct(Element::single(w), d.flavor(), s))) ++bad;
            if (!d.apply(dw).is_zero()) ++bad;
        }
    return bad;
}

Outcome criterion2() {
    std::size_t words = 0, bad = 0;
    for (const char* name : {"K.alg", "dual.alg", "upper2.alg", "dga.alg", "m3only.alg"}) {
        auto a = to_ainfty(load(name));
        bad += coderivation_violations(a.coderivation(), 4, words);
        bad += coderivation_violations(lie_ify(a).coderivation(), 4, words);
    }
    bad += coderivation_violations(to_linfty(load("sl2.alg")).coderivation(), 4, words);
    return {bad == 0, std::to_string(words) + " basis words (tensor and symmetric, weight <= 4), " +
                          std::to_string(bad) + " failures; sl2 has only the symmetric flavor"};
}

// --- 3 ------------------------------------------------------------------------

oracle::Algebra to_oracle(const AssociativeTable& t) {
    oracle::Algebra o;
    o.dim = t.space->dim();
    o.c.assign(o.dim, std::vector<std::vector<mpq_class>>(o.dim, std::vector<mpq_class>(o.dim, 0)));
    for (const auto& [ij, v] : t.product)
        for (const auto& [k, c] : v.entries) o.c[ij.first][ij.second][k] = c;
    return o;
}

Outcome criterion3() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"K.alg", "dual.alg", "upper2.alg"}) {
        const auto doc = load(name);
        const auto lib = cyclic_homology(to_ainfty(doc), WeightCap{5, 3}).dims;
        const auto ora = oracle::cyclic_homology(to_oracle(to_associative_table(doc)), 3);
        const std::vector<Index> expected(ora.begin(), ora.end());
        ok = ok && lib == expected;
        detail += std::string(" ") + name + " " + dims_string(lib) + (lib == expected ? "=" : "!=") + dims_string(expected);
    }
    const auto k = cyclic_homology(to_ainfty(load("K.alg")), WeightCap{5, 3}).dims;
    ok = ok && k == std::vector<Index>{1, 0, 1, 0};
    return {ok, "HC_0..3 library vs Connes oracle:" + detail};
}

// --- 4 ------------------------------------------------------------------------

Outcome criterion4() {
    bool ok = true;
    std::string detail;
    auto k = to_ainfty(load("K.alg"));
    std::vector<std::tuple<std::string, LInftyAlgebra, oracle::LieAlgebra>> cases{
        {"sl2", to_linfty(load("sl2.alg")), oracle::sl2()}, {"gl2(K)", gl(k, 2).lie, oracle::gl(2)}};
    for (const auto& [name, l, g] : cases) {
        const auto lib = lie_homology(l, WeightCap{4, 3}).table.dims;
        const auto ora = oracle::lie_homology(g, 3);
        const std::vector<Index> expected(ora.begin(), ora.end());
        ok = ok && lib == expected;
        detail += " " + name + " " + dims_string(lib) + (lib == expected ? "=" : "!=") + dims_string(expected);
        if (name == "sl2") ok = ok && lib == std::vector<Index>{1, 0, 0, 1};
    }
    return {ok, "H_0..3 library vs classical CE oracle:" + detail};
}

// --- 5 ------------------------------------------------------------------------

Outcome criterion5() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_vector = [&](std::size_t dim) {
        std::vector<std::pair<Index, Scalar>> t;
        for (std::size_t i = 0; i < dim; ++i) t.emplace_back(i, Scalar(coeff(rng)));
        return SparseVector::from_unsorted(std::move(t));
    };
    const WeightCap cap{4, 3};
    std::size_t maps = 0, nonzero = 0;
    std::vector<std::pair<std::string, LInftyAlgebra>> algebras{
        {"sl2", to_linfty(load("sl2.alg"))}, {"gl2(K[eps])", gl(to_ainfty(load("dual.alg")), 2).lie}};
    for (const auto& [name, l] : algebras) {
        const auto h = lie_homology(l, cap);
        const std::size_t dim = l.space->dim();
        for (int trial = 0; trial < 10; ++trial) {
            Cochain dp = insertion(l, random_vector(dim));
            if (trial % 2 == 1) {
                dp = Cochain(l.space, Flavor::symmetric, 0);
                for (Index i = 0; i < dim; ++i) dp.set(Word{static_cast<std::uint32_t>(i)}, random_vector(dim));
            }
            for (const auto& [t, m] : inner_action_on_homology(l, h, dp, cap)) {
                ++maps;
                if (!m.entries().empty()) {
                    ++nonzero;
                    std::cerr << "  " << name << " derivation " << trial << " acts on H_" << t << "\n";
                }
            }
        }
    }
    return {nonzero == 0 && maps > 0, "20 random inner derivations (10 sl2, 10 gl2(K[eps])), " + std::to_string(maps) +
                                          " induced maps in degrees <= 3, " + std::to_string(nonzero) + " nonzero"};
}

// --- 6 ------------------------------------------------------------------------

Outcome criterion6() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"K.alg", "dual.alg"}) {
        auto g = gl(to_ainfty(load(name)), 2);
        const auto plain = lie_homology(g.lie, WeightCap{4, 3}).table.dims;
        const auto reduced = lie_homology(g.lie, WeightCap{4, 3}, g.scalar_subalgebra()).table.dims;
        ok = ok && plain == reduced;
        detail += " gl2(" + g.base.name + ") " + dims_string(plain) + (plain == reduced ? "=" : "!=") + dims_string(reduced);
    }
    return {ok, "H vs gl2(K)-coinvariants, degrees 0..3:" + detail};
}

// --- 7 ------------------------------------------------------------------------

bool lqt_case(const std::string& file, const std::string& degree, const std::vector<int>* expected, std::string& detail) {
    auto r = cli({"lqt", fixture(file), "--n", "3,4", "--max-degree", degree, "--format", "json"});
    if (r.code != exit_ok) {
        detail += " " + file + ": exit " + std::to_string(r.code) + " " + r.err;
        return false;
    }
    const auto j = json::parse(r.out);
    const auto hc = j["tables"]["cyclic_homology"]["dims"].get<std::vector<int>>();
    bool ok = true;
    std::vector<int> stable, prims;
    for (const auto& v : j["verdicts"]) {
        const int k = v["degree"];
        ok = ok && v["dims_verdict"] == "MATCH" && v["primitive_verdict"] == "MATCH" && !v["stable_dim"].is_null();
        stable.push_back(v["stable_dim"].is_null() ? -1 : v["stable_dim"].get<int>());
        prims.push_back(v["primitive_dim"].is_null() ? -1 : v["primitive_dim"].get<int>());
        ok = ok && prims.back() == (k == 0 ? 0 : hc.at(k - 1));
        ok = ok && stable.back() == v["exterior_dim"].get<int>();
    }
    if (expected) ok = ok && stable == *expected;
    auto str = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    detail += " " + file + " stable " + str(stable) + " prim " + str(prims) + (ok ? " MATCH" : " FAIL");
    return ok;
}

Outcome criterion7() {
    std::string detail;
    const std::vector<int> k_expected{1, 1, 0, 1, 1};
    bool ok = lqt_case("K.alg", "4", &k_expected, detail);
    ok = lqt_case("dual.alg", "3", nullptr, detail) && ok;
    return {ok, "lqt --n 3,4:" + detail};
}

// --- 8 ------------------------------------------------------------------------

Outcome criterion8() {
    auto r = hopf_product_on_homology(to_ainfty(load("K.alg")), 3, WeightCap{5, 4});
    const bool ok = r.commutative && r.associative && r.pairs_checked > 0 && r.triples_checked > 0;
    return {ok, "gl3(K) degrees <= 4: " + std::to_string(r.pairs_checked) + " pairs " +
                    (r.commutative ? "graded-commutative" : "NOT commutative") + ", " + std::to_string(r.triples_checked) +
                    " triples " + (r.associative ? "associative" : "NOT associative") +
                    (r.unital ? ", unital" : ", NOT unital")};
}

// --- 9 ------------------------------------------------------------------------

std::optional<std::string> run_process(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

Outcome criterion9() {
    const std::string exe = INFHOM_CLI_PATH;
    const std::vector<std::string> commands{
        "check " + fixture("upper2.alg") + " --format json",
        "check " + fixture("nonassoc.alg") + " --format json",
        "lieify " + fixture("m3only.alg"),
        "hc " + fixture("dual.alg") + " --max-degree 3 --format json",
        "ce " + fixture("sl2.alg") + " --max-degree 3 --format json",
        "ce " + fixture("dual.alg") + " --n 2 --coinvariants scalars --max-degree 3 --format json",
        "lqt " + fixture("K.alg") + " --n 3,4 --max-degree 4 --format json --jobs 4"};
    std::size_t identical = 0;
    for (const auto& c : commands) {
        auto a = run_process(exe + " " + c + " 2>/dev/null");
        auto b = run_process(exe + " " + c + " 2>/dev/null");
        const bool same = a && b && !a->empty() && *a == *b && !json::parse(*a, nullptr, false).is_discarded();
        identical += same;
        if (!same) std::cerr << "  differs: " << c << "\n";
    }
    return {identical == commands.size(), std::to_string(identical) + "/" + std::to_string(commands.size()) +
                                             " commands byte-identical over two separate processes"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"structure validity", criterion1},       {"coderivation laws", criterion2},
        {"cyclic homology vs oracle", criterion3}, {"CE homology vs oracle", criterion4},
        {"inner derivations act by zero", criterion5}, {"coinvariant reduction", criterion6},
        {"LQT comparison", criterion7},            {"Hopf structure", criterion8},
        {"determinism", criterion9}};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
    if (selected.empty())
        for (int i = 1; i <= 9; ++i) selected.push_back(i);
    int failures = 0;
    for (int c : selected) {
        if (c < 1 || c > 9) {
            std::cerr << "unknown criterion " << c << "\n";
            return 2;
        }
        Outcome o;
        try {
            o = criteria[c - 1].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c << " " << criteria[c - 1].first
                  << " (tolerance: exact): " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
