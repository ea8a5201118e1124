#include "infhom/ainfty.hpp"

#include "infhom/errors.hpp"

#include <algorithm>

namespace infhom {

namespace {

std::string vec_string(const GradedSpace& sp, const SparseVector& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : v.entries) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*" + sp.label(i);
    }
    return out;
}

}  // namespace

SparseVector AssociativeTable::multiply(Index a, Index b) const {
    auto it = product.find({a, b});
    return it == product.end() ? SparseVector{} : it->second;
}

SparseVector AssociativeTable::multiply(const SparseVector& x, const SparseVector& y) const {
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [i, a] : x.entries)
        for (const auto& [j, b] : y.entries)
            for (const auto& [k, c] : multiply(i, j).entries) terms.emplace_back(k, a * b * c);
    return SparseVector::from_unsorted(std::move(terms));
}

SparseVector AssociativeTable::d(const SparseVector& x) const {
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [i, a] : x.entries) {
        auto it = differential.find(i);
        if (it == differential.end()) continue;
        for (const auto& [k, c] : it->second.entries) terms.emplace_back(k, a * c);
    }
    return SparseVector::from_unsorted(std::move(terms));
}

std::optional<std::string> associativity_witness(const AssociativeTable& t) {
    const auto& sp = *t.space;
    for (Index a = 0; a < sp.dim(); ++a)
        for (Index b = 0; b < sp.dim(); ++b)
            for (Index c = 0; c < sp.dim(); ++c) {
                auto left = t.multiply(t.multiply(a, b), SparseVector::unit(c));
                auto right = t.multiply(SparseVector::unit(a), t.multiply(b, c));
                if (left != right)
                    return "(" + sp.label(a) + "," + sp.label(b) + "," + sp.label(c) + "): (ab)c = " +
                           vec_string(sp, left) + ", a(bc) = " + vec_string(sp, right);
            }
    return std::nullopt;
}

std::optional<std::string> unit_witness(const AssociativeTable& t) {
    if (!t.unit) return std::nullopt;
    const auto& sp = *t.space;
    const Index u = *t.unit;
    if (sp.degree(u) != 0) return "unit " + sp.label(u) + " is not in degree 0";
    for (Index a = 0; a < sp.dim(); ++a) {
        const auto ea = SparseVector::unit(a);
        if (t.multiply(u, a) != ea) return "(" + sp.label(u) + "," + sp.label(a) + "): u*a = " + vec_string(sp, t.multiply(u, a));
        if (t.multiply(a, u) != ea) return "(" + sp.label(a) + "," + sp.label(u) + "): a*u = " + vec_string(sp, t.multiply(a, u));
    }
    return std::nullopt;
}

std::optional<std::string> leibniz_witness(const AssociativeTable& t) {
    const auto& sp = *t.space;
    for (Index a = 0; a < sp.dim(); ++a)
        for (Index b = 0; b < sp.dim(); ++b) {
            const auto ea = SparseVector::unit(a);
            const auto eb = SparseVector::unit(b);
            auto left = t.d(t.multiply(a, b));
            auto right = axpy(t.multiply(t.d(ea), eb), Scalar(sign_of_parity(sp.degree(a))),
                              t.multiply(ea, t.d(eb)));
            if (left != right)
                return "(" + sp.label(a) + "," + sp.label(b) + "): d(ab) = " + vec_string(sp, left) +
                       ", da*b + (-1)^|a| a*db = " + vec_string(sp, right);
        }
    return std::nullopt;
}

std::optional<std::string> differential_square_witness(const AssociativeTable& t) {
    const auto& sp = *t.space;
    for (Index a = 0; a < sp.dim(); ++a) {
        auto dd = t.d(t.d(SparseVector::unit(a)));
        if (!dd.empty()) return "(" + sp.label(a) + "): d(d a) = " + vec_string(sp, dd);
    }
    return std::nullopt;
}

Cochain suspended_cochain(const AssociativeTable& t) {
    Cochain m(t.space, Flavor::tensor, -1);
    for (const auto& [a, da] : t.differential) m.add({static_cast<std::uint32_t>(a)}, da);
    for (const auto& [ab, prod] : t.product) {
        const int sign = sign_of_parity(t.space->degree(ab.first) + 1);
        m.add({static_cast<std::uint32_t>(ab.first), static_cast<std::uint32_t>(ab.second)},
              prod.scaled(Scalar(sign)));
    }
    return m;
}

AInftyAlgebra from_associative(const AssociativeTable& t, std::string name) {
    if (!t.differential.empty()) throw ValidationError("from_associative: table carries a differential");
    if (auto w = associativity_witness(t)) throw AxiomViolation("not associative", *w);
    if (auto w = unit_witness(t)) throw AxiomViolation("not unital", *w);
    return AInftyAlgebra{std::move(name), t.space, suspended_cochain(t), t.unit};
}

AInftyAlgebra from_dga(const AssociativeTable& t, std::string name) {
    if (auto w = associativity_witness(t)) throw AxiomViolation("not associative", *w);
    if (auto w = unit_witness(t)) throw AxiomViolation("not unital", *w);
    if (auto w = differential_square_witness(t)) throw AxiomViolation("d^2 != 0", *w);
    if (auto w = leibniz_witness(t)) throw AxiomViolation("Leibniz rule fails", *w);
    return AInftyAlgebra{std::move(name), t.space, suspended_cochain(t), t.unit};
}

CheckResult check_strict_unit(const AInftyAlgebra& a) {
    Certificate cert{{2, 0}, 0};
    if (!a.unit) return cert;
    const auto& sp = *a.space;
    const auto u = static_cast<std::uint32_t>(*a.unit);
    if (sp.degree(u) != 0)
        return Violation{"unit is not in degree 0", {u}, {}, "unit " + sp.label(u)};
    for (std::uint32_t x = 0; x < sp.dim(); ++x) {
        ++cert.words_checked;
        SparseVector expect_left = SparseVector::unit(x).scaled(Scalar(-1));
        SparseVector expect_right = SparseVector::unit(x).scaled(Scalar(sign_of_parity(sp.degree(x) + 1)));
        Word ux{u, x};
        Word xu{x, u};
        if (a.m.value(ux) != expect_left)
            return Violation{"strict unitality fails", ux, {}, "m2" + format_word(sp, ux) + " = " + vec_string(sp, a.m.value(ux))};
        if (a.m.value(xu) != expect_right)
            return Violation{"strict unitality fails", xu, {}, "m2" + format_word(sp, xu) + " = " + vec_string(sp, a.m.value(xu))};
    }
    for (const auto& [w, v] : a.m.values()) {
        if (w.size() == 2) continue;
        if (std::find(w.begin(), w.end(), u) != w.end())
            return Violation{"strict unitality fails", w, {}, "m" + std::to_string(w.size()) + format_word(sp, w) + " = " + vec_string(sp, v)};
    }
    return cert;
}

CheckResult check_stasheff(const AInftyAlgebra& a, const WeightCap& cap) {
    auto unit = check_strict_unit(a);
    if (!passed(unit)) return unit;
    return check_square_zero(a.coderivation(), cap);
}

// ---------------------------------------------------------------------------

namespace {

/// Rotation bringing position j to the front, with its Koszul sign.
std::pair<int, Word> rotate_to(const GradedSpace& sp, const Word& w, std::size_t j) {
    long tail = 0;
    long head = 0;
    for (std::size_t s = 0; s < w.size(); ++s)
        (s < j ? head : tail) += sp.suspended_degree(w[s]);
    Word out(w.begin() + j, w.end());
    out.insert(out.end(), w.begin(), w.begin() + j);
    return {sign_of_parity(head * tail), std::move(out)};
}

}  // namespace

Element cyclic_lambda(const GradedSpace& space, const Word& w) {
    if (w.empty()) return {};
    auto [sign, rotated] = rotate_to(space, w, w.size() - 1);
    return Element::single(std::move(rotated), Scalar(sign));
}

std::optional<std::pair<int, Word>> cyclic_normal_form(const GradedSpace& space, const Word& w) {
    if (w.empty()) return std::nullopt;
    std::optional<std::pair<int, Word>> best;
    bool vanishes = false;
    for (std::size_t j = 0; j < w.size(); ++j) {
        auto cand = rotate_to(space, w, j);
        if (!best || cand.second < best->second) {
            best = std::move(cand);
            vanishes = false;
        } else if (cand.second == best->second && cand.first != best->first) {
            vanishes = true;
        }
    }
    if (vanishes) return std::nullopt;
    return best;
}

Element cyclic_b(const AInftyAlgebra& a, const Word& w) {
    const GradedSpace& sp = *a.space;
    const std::size_t n = w.size();
    Element out;
    for (std::size_t k : a.m.arities()) {
        if (k == 0 || k > n) continue;
        long prefix = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) prefix += sp.suspended_degree(w[j - 1]);
            if (j + k <= n) {
                SparseVector val = a.m.value(Word(w.begin() + j, w.begin() + j + k));
                const int sign = sign_of_parity(prefix);
                for (const auto& [o, c] : val.entries) {
                    Word nw(w.begin(), w.begin() + j);
                    nw.push_back(static_cast<std::uint32_t>(o));
                    nw.insert(nw.end(), w.begin() + j + k, w.end());
                    out.add(nw, c * sign);
                }
            } else {
                auto [sign, rotated] = rotate_to(sp, w, j);
                SparseVector val = a.m.value(Word(rotated.begin(), rotated.begin() + k));
                for (const auto& [o, c] : val.entries) {
                    Word nw{static_cast<std::uint32_t>(o)};
                    nw.insert(nw.end(), rotated.begin() + k, rotated.end());
                    out.add(nw, c * sign);
                }
            }
        }
    }
    return out;
}

Element cyclic_b_on_classes(const AInftyAlgebra& a, const Word& w) {
    Element out;
    const Element raw = cyclic_b(a, w);
    for (const auto& [v, c] : raw.terms()) {
        auto nf = cyclic_normal_form(*a.space, v);
        if (nf) out.add(nf->second, c * nf->first);
    }
    return out;
}

int BettiTable::exact_up_to() const {
    int k = -1;
    while (k + 1 < static_cast<int>(exact.size()) && exact[k + 1]) ++k;
    return k;
}

std::vector<Word> cyclic_basis(const GradedSpace& space, int hc_degree, std::size_t max_weight) {
    std::vector<Word> out;
    for (const Word& w : words_of_degree(space, Flavor::tensor, hc_degree + 1, max_weight)) {
        if (w.empty()) continue;
        auto nf = cyclic_normal_form(space, w);
        if (nf && nf->second == w) out.push_back(w);
    }
    return out;
}

std::shared_ptr<QuotientComplex> cyclic_complex(const AInftyAlgebra& a, int max_degree, std::size_t max_weight) {
    std::vector<std::vector<Word>> blocks;
    for (int k = 0; k <= max_degree + 1; ++k) blocks.push_back(cyclic_basis(*a.space, k, max_weight));
    return std::make_shared<QuotientComplex>(
        std::move(blocks), std::vector<Subspace>{},
        [alg = a](const Word& w) { return cyclic_b_on_classes(alg, w); });
}

BettiTable cyclic_homology(const AInftyAlgebra& a, const WeightCap& cap) {
    const int top = cap.max_degree;
    BettiTable table;
    table.cap = cap;
    const int mind = a.space->dim() ? a.space->min_suspended_degree() : 1;
    for (int k = 0; k <= top; ++k) {
        // Chains of HC degree k have total suspended degree k+1; the longest word
        // needed for degrees k and k+1 has (k+2)/mind letters.
        table.exact.push_back(static_cast<std::size_t>((k + 2) / mind) <= cap.max_weight);
    }
    if (table.exact_up_to() < 0) throw CapExceeded("weight cap too small to certify any cyclic homology degree");
    auto complex = cyclic_complex(a, top, cap.max_weight);
    HomologyComputation h(complex, top);
    table.dims = h.betti_numbers();
    return table;
}

}  // namespace infhom
