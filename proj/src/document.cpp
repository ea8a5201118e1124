#include "infhom/document.hpp"

#include "infhom/errors.hpp"

#include "json.hpp"

#include <cctype>
#include <set>

namespace infhom {

using nlohmann::json;

std::string to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::associative: return "associative";
        case AlgebraKind::dga: return "dga";
        case AlgebraKind::ainfty: return "ainfty";
        case AlgebraKind::linfty: return "linfty";
    }
    return "?";
}

std::optional<AlgebraKind> parse_kind(std::string_view s) {
    if (s == "associative") return AlgebraKind::associative;
    if (s == "dga") return AlgebraKind::dga;
    if (s == "ainfty") return AlgebraKind::ainfty;
    if (s == "linfty") return AlgebraKind::linfty;
    return std::nullopt;
}

std::string Diagnostic::format() const {
    std::string out;
    if (line) out += std::to_string(line) + ":" + std::to_string(column) + ": ";
    if (!pointer.empty()) out += pointer + ": ";
    return out + message;
}

namespace {

std::string escape_pointer(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

/// Start positions of every value of an already validated JSON text, keyed
/// by JSON pointer.
class Locator {
public:
    explicit Locator(std::string_view text) : s_(text) {
        value("");
    }
    std::pair<std::size_t, std::size_t> at(const std::string& pointer) const {
        auto it = pos_.find(pointer);
        return it == pos_.end() ? std::make_pair<std::size_t, std::size_t>(0, 0) : it->second;
    }

private:
    bool more() const { return i_ < s_.size(); }
    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void skip_ws() {
        while (more() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
    }
    std::string string() {
        advance();
        std::string out;
        while (more() && s_[i_] != '"') {
            if (s_[i_] == '\\') {
                advance();
                if (!more()) break;
                const char c = s_[i_];
                out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
                advance();
                if (c == 'u')
                    for (int k = 0; k < 4 && more(); ++k) advance();
            } else {
                out += s_[i_];
                advance();
            }
        }
        if (more()) advance();
        return out;
    }
    void value(const std::string& ptr) {
        skip_ws();
        if (!more()) return;
        pos_[ptr] = {line_, col_};
        const char c = s_[i_];
        if (c == '{' || c == '[') {
            const bool object = c == '{';
            advance();
            std::size_t index = 0;
            while (true) {
                skip_ws();
                if (!more()) return;
                if (s_[i_] == '}' || s_[i_] == ']') {
                    advance();
                    return;
                }
                if (s_[i_] == ',') {
                    advance();
                    continue;
                }
                if (object) {
                    const std::string key = string();
                    skip_ws();
                    if (more() && s_[i_] == ':') advance();
                    value(ptr + "/" + escape_pointer(key));
                } else {
                    value(ptr + "/" + std::to_string(index++));
                }
            }
        } else if (c == '"') {
            string();
        } else {
            while (more() && std::string_view(",]} \t\r\n").find(s_[i_]) == std::string_view::npos) advance();
        }
    }

    std::string_view s_;
    std::size_t i_ = 0, line_ = 1, col_ = 1;
    std::map<std::string, std::pair<std::size_t, std::size_t>> pos_;
};

class Validator {
public:
    Validator(const Locator& loc, std::vector<Diagnostic>& out) : loc_(loc), out_(out) {}

    void error(const std::string& ptr, const std::string& msg) {
        auto [l, c] = loc_.at(ptr);
        out_.push_back({ptr, l, c, msg});
    }

    const json* field(const json& obj, const std::string& ptr, const char* key, bool required) {
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) error(ptr, std::string("missing field \"") + key + "\"");
            return nullptr;
        }
        return &*it;
    }

    std::optional<std::string> string(const json* v, const std::string& ptr) {
        if (!v) return std::nullopt;
        if (!v->is_string()) {
            error(ptr, "expected a string");
            return std::nullopt;
        }
        return v->get<std::string>();
    }

    std::optional<long long> integer(const json* v, const std::string& ptr, long long min) {
        if (!v) return std::nullopt;
        if (!v->is_number_integer()) {
            error(ptr, "expected an integer");
            return std::nullopt;
        }
        const long long x = v->get<long long>();
        if (x < min) {
            error(ptr, "expected an integer >= " + std::to_string(min));
            return std::nullopt;
        }
        return x;
    }

private:
    const Locator& loc_;
    std::vector<Diagnostic>& out_;
};

}  // namespace

ParseResult parse_document(std::string_view text) {
    ParseResult result;
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        result.diagnostics.push_back({"", line, col, std::string("malformed JSON: ") + e.what()});
        return result;
    }
    const Locator loc(text);
    Validator v(loc, result.diagnostics);
    if (!root.is_object()) {
        v.error("", "the document must be a JSON object");
        return result;
    }
    static const std::set<std::string> known{"name", "kind", "basis", "unit", "ops", "caps"};
    for (const auto& [key, _] : root.items())
        if (!known.count(key)) v.error("/" + escape_pointer(key), "unknown field \"" + key + "\"");

    AlgebraDocument doc;
    doc.name = v.string(v.field(root, "", "name", true), "/name").value_or("");
    if (auto k = v.string(v.field(root, "", "kind", true), "/kind")) {
        if (auto kind = parse_kind(*k)) doc.kind = *kind;
        else v.error("/kind", "unknown kind \"" + *k + "\" (associative, dga, ainfty, linfty)");
    }

    std::map<std::string, int> degree_of;
    if (const json* basis = v.field(root, "", "basis", true)) {
        if (!basis->is_array()) v.error("/basis", "expected an array");
        else
            for (std::size_t i = 0; i < basis->size(); ++i) {
                const std::string p = "/basis/" + std::to_string(i);
                const json& e = (*basis)[i];
                if (!e.is_object()) {
                    v.error(p, "expected an object with \"label\" and \"degree\"");
                    continue;
                }
                auto label = v.string(v.field(e, p, "label", true), p + "/label");
                auto degree = v.integer(v.field(e, p, "degree", true), p + "/degree", 0);
                if (!label || !degree) continue;
                if (label->empty()) {
                    v.error(p + "/label", "empty label");
                    continue;
                }
                if (!degree_of.emplace(*label, static_cast<int>(*degree)).second) {
                    v.error(p + "/label", "duplicate label \"" + *label + "\"");
                    continue;
                }
                doc.basis.push_back({*label, static_cast<int>(*degree)});
            }
    }

    if (const json* unit = v.field(root, "", "unit", false); unit && !unit->is_null()) {
        if (auto u = v.string(unit, "/unit")) {
            auto it = degree_of.find(*u);
            if (it == degree_of.end()) v.error("/unit", "unknown label \"" + *u + "\"");
            else if (it->second != 0) v.error("/unit", "the unit must have degree 0");
            else doc.unit = *u;
        }
    }

    std::shared_ptr<const GradedSpace> space;
    try {
        space = std::make_shared<const GradedSpace>(doc.basis);
    } catch (const ValidationError& e) {
        v.error("/basis", e.what());
    }

    if (const json* ops = v.field(root, "", "ops", true)) {
        if (!ops->is_array()) v.error("/ops", "expected an array");
        std::set<std::pair<std::size_t, std::vector<std::string>>> seen;
        for (std::size_t i = 0; ops->is_array() && i < ops->size(); ++i) {
            const std::string p = "/ops/" + std::to_string(i);
            const json& e = (*ops)[i];
            if (!e.is_object()) {
                v.error(p, "expected an object with \"arity\", \"inputs\" and \"output\"");
                continue;
            }
            OpEntry op;
            bool good = true;
            auto arity = v.integer(v.field(e, p, "arity", true), p + "/arity", 1);
            if (!arity) good = false;
            else op.arity = static_cast<std::size_t>(*arity);
            if (arity) {
                const bool allowed = doc.kind == AlgebraKind::associative ? *arity == 2
                                     : doc.kind == AlgebraKind::dga       ? (*arity == 1 || *arity == 2)
                                                                          : true;
                if (!allowed) {
                    v.error(p + "/arity", "arity " + std::to_string(*arity) + " is not allowed for kind " +
                                              to_string(doc.kind));
                    good = false;
                }
            }
            long long in_degree = 0;
            if (const json* inputs = v.field(e, p, "inputs", true)) {
                if (!inputs->is_array()) {
                    v.error(p + "/inputs", "expected an array of labels");
                    good = false;
                } else {
                    for (std::size_t j = 0; j < inputs->size(); ++j) {
                        const std::string q = p + "/inputs/" + std::to_string(j);
                        auto l = v.string(&(*inputs)[j], q);
                        if (!l) {
                            good = false;
                            continue;
                        }
                        auto it = degree_of.find(*l);
                        if (it == degree_of.end()) {
                            v.error(q, "unknown label \"" + *l + "\"");
                            good = false;
                            continue;
                        }
                        in_degree += it->second;
                        op.inputs.push_back(*l);
                    }
                    if (arity && good && op.inputs.size() != op.arity) {
                        v.error(p + "/inputs", "expected " + std::to_string(op.arity) + " inputs, got " +
                                                   std::to_string(op.inputs.size()));
                        good = false;
                    }
                }
            } else {
                good = false;
            }
            if (const json* output = v.field(e, p, "output", true)) {
                if (!output->is_array()) {
                    v.error(p + "/output", "expected an array of {\"coeff\", \"label\"}");
                    good = false;
                } else {
                    for (std::size_t j = 0; j < output->size(); ++j) {
                        const std::string q = p + "/output/" + std::to_string(j);
                        const json& t = (*output)[j];
                        if (!t.is_object()) {
                            v.error(q, "expected an object with \"coeff\" and \"label\"");
                            good = false;
                            continue;
                        }
                        auto cs = v.string(v.field(t, q, "coeff", true), q + "/coeff");
                        auto l = v.string(v.field(t, q, "label", true), q + "/label");
                        std::optional<Scalar> c;
                        if (cs) {
                            c = parse_scalar(*cs);
                            if (!c) v.error(q + "/coeff", "\"" + *cs + "\" is not a rational number p/q");
                        }
                        if (!c || !l) {
                            good = false;
                            continue;
                        }
                        auto it = degree_of.find(*l);
                        if (it == degree_of.end()) {
                            v.error(q + "/label", "unknown label \"" + *l + "\"");
                            good = false;
                            continue;
                        }
                        if (good && arity) {
                            const long long expected = in_degree + static_cast<long long>(op.arity) - 2;
                            if (it->second != expected) {
                                v.error(q + "/label", "degree parity: \"" + *l + "\" has degree " +
                                                          std::to_string(it->second) + ", an arity-" +
                                                          std::to_string(op.arity) + " operation on these inputs needs degree " +
                                                          std::to_string(expected));
                                good = false;
                                continue;
                            }
                        }
                        op.output.emplace_back(*c, *l);
                    }
                }
            } else {
                good = false;
            }
            if (!good) continue;
            std::vector<std::string> key = op.inputs;
            if (doc.kind == AlgebraKind::linfty && space) {
                Word w;
                for (const auto& l : op.inputs) w.push_back(static_cast<std::uint32_t>(space->index_of(l)));
                auto nf = symmetric_normal_form(*space, w);
                if (!nf) {
                    v.error(p + "/inputs", "repeated odd input: the bracket vanishes here by antisymmetry");
                    continue;
                }
                key.clear();
                for (auto x : nf->second) key.push_back(space->label(x));
            }
            if (!seen.emplace(op.arity, key).second) {
                v.error(p, "duplicate op entry for these inputs");
                continue;
            }
            doc.ops.push_back(std::move(op));
        }
    }

    if (const json* caps = v.field(root, "", "caps", false); caps && !caps->is_null()) {
        if (!caps->is_object()) v.error("/caps", "expected an object");
        else {
            for (const auto& [key, _] : caps->items())
                if (key != "max_weight" && key != "max_degree") v.error("/caps/" + escape_pointer(key), "unknown cap \"" + key + "\"");
            WeightCap cap;
            if (auto w = v.integer(v.field(*caps, "/caps", "max_weight", false), "/caps/max_weight", 1)) cap.max_weight = *w;
            if (auto d = v.integer(v.field(*caps, "/caps", "max_degree", false), "/caps/max_degree", 0)) cap.max_degree = static_cast<int>(*d);
            doc.caps = cap;
        }
    }

    if (result.diagnostics.empty()) result.document = std::move(doc);
    return result;
}

std::string serialize_document(const AlgebraDocument& doc) {
    nlohmann::ordered_json j;
    j["name"] = doc.name;
    j["kind"] = to_string(doc.kind);
    auto basis = nlohmann::ordered_json::array();
    for (const auto& b : doc.basis) basis.push_back({{"label", b.label}, {"degree", b.degree}});
    j["basis"] = basis;
    if (doc.unit) j["unit"] = *doc.unit;
    auto ops = nlohmann::ordered_json::array();
    for (const auto& op : doc.ops) {
        nlohmann::ordered_json o;
        o["arity"] = op.arity;
        o["inputs"] = op.inputs;
        auto out = nlohmann::ordered_json::array();
        for (const auto& [c, l] : op.output) out.push_back({{"coeff", to_string(c)}, {"label", l}});
        o["output"] = out;
        ops.push_back(o);
    }
    j["ops"] = ops;
    if (doc.caps) j["caps"] = {{"max_weight", doc.caps->max_weight}, {"max_degree", doc.caps->max_degree}};
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

Word input_word(const GradedSpace& sp, const OpEntry& op) {
    Word w;
    for (const auto& l : op.inputs) w.push_back(static_cast<std::uint32_t>(sp.index_of(l)));
    return w;
}

SparseVector output_vector(const GradedSpace& sp, const OpEntry& op) {
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [c, l] : op.output) terms.emplace_back(sp.index_of(l), c);
    return SparseVector::from_unsorted(std::move(terms));
}

std::optional<Index> unit_index(const GradedSpace& sp, const AlgebraDocument& doc) {
    if (!doc.unit) return std::nullopt;
    return sp.index_of(*doc.unit);
}

}  // namespace

std::shared_ptr<const GradedSpace> document_space(const AlgebraDocument& doc) {
    return std::make_shared<const GradedSpace>(doc.basis);
}

AssociativeTable to_associative_table(const AlgebraDocument& doc) {
    if (doc.kind != AlgebraKind::associative && doc.kind != AlgebraKind::dga)
        throw ValidationError("not an associative or dga document");
    auto sp = document_space(doc);
    AssociativeTable t{sp, {}, {}, unit_index(*sp, doc)};
    for (const auto& op : doc.ops) {
        const Word w = input_word(*sp, op);
        const SparseVector out = output_vector(*sp, op);
        if (op.arity == 1) t.differential[w[0]] = axpy(t.differential[w[0]], Scalar(1), out);
        else t.product[{w[0], w[1]}] = axpy(t.product[{w[0], w[1]}], Scalar(1), out);
    }
    return t;
}

AInftyAlgebra to_ainfty(const AlgebraDocument& doc) {
    switch (doc.kind) {
        case AlgebraKind::associative: return from_associative(to_associative_table(doc), doc.name);
        case AlgebraKind::dga: return from_dga(to_associative_table(doc), doc.name);
        case AlgebraKind::ainfty: {
            auto sp = document_space(doc);
            Cochain m(sp, Flavor::tensor, -1);
            for (const auto& op : doc.ops) m.add(input_word(*sp, op), output_vector(*sp, op));
            return AInftyAlgebra{doc.name, sp, std::move(m), unit_index(*sp, doc)};
        }
        case AlgebraKind::linfty: break;
    }
    throw ValidationError("an linfty document does not describe an A-infinity algebra");
}

LInftyAlgebra to_linfty(const AlgebraDocument& doc) {
    if (doc.kind != AlgebraKind::linfty) throw ValidationError("not an linfty document");
    auto sp = document_space(doc);
    Cochain ell(sp, Flavor::symmetric, -1);
    for (const auto& op : doc.ops) ell.add(input_word(*sp, op), output_vector(*sp, op));
    return LInftyAlgebra{doc.name, sp, std::move(ell)};
}

namespace {

AlgebraDocument from_cochain(const std::string& name, AlgebraKind kind, const GradedSpace& sp, const Cochain& c,
                             std::optional<Index> unit) {
    AlgebraDocument doc;
    doc.name = name;
    doc.kind = kind;
    doc.basis = sp.basis();
    if (unit) doc.unit = sp.label(*unit);
    for (const auto& [w, v] : c.values()) {
        OpEntry op;
        op.arity = w.size();
        for (auto x : w) op.inputs.push_back(sp.label(x));
        for (const auto& [i, coeff] : v.entries) op.output.emplace_back(coeff, sp.label(i));
        doc.ops.push_back(std::move(op));
    }
    return doc;
}

}  // namespace

AlgebraDocument from_ainfty(const AInftyAlgebra& a) {
    return from_cochain(a.name, AlgebraKind::ainfty, *a.space, a.m, a.unit);
}

AlgebraDocument from_linfty(const LInftyAlgebra& l) {
    return from_cochain(l.name, AlgebraKind::linfty, *l.space, l.ell, std::nullopt);
}

}  // namespace infhom
