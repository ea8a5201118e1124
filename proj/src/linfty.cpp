#include "infhom/linfty.hpp"

#include "infhom/errors.hpp"

#include <algorithm>
#include <limits>

namespace infhom {

namespace {

constexpr int kAnyDegree = std::numeric_limits<int>::max() / 4;

/// Enough room for the bracket of two coderivations to be computed exactly.
WeightCap bracket_cap(const Cochain& a, const Cochain& b) {
    return WeightCap{a.max_arity() + b.max_arity(), kAnyDegree};
}

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

SparseVector ell2(const LInftyAlgebra& l, const SparseVector& x, const SparseVector& y) {
    SparseVector out;
    for (const auto& [a, ca] : x.entries)
        for (const auto& [b, cb] : y.entries) {
            SparseVector v = l.ell.value({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
            if (!v.empty()) out = axpy(out, ca * cb, v);
        }
    return out;
}

CheckResult check_linfty(const LInftyAlgebra& l, const WeightCap& cap) {
    return check_square_zero(l.coderivation(), cap);
}

std::optional<std::string> subalgebra_witness(const LInftyAlgebra& l, const std::vector<SparseVector>& h) {
    const GradedSpace& sp = *l.space;
    for (const auto& x : h)
        for (const auto& [i, c] : x.entries) {
            if (i >= sp.dim()) return "index out of range";
            if (sp.degree(i) != 0) return "element " + vec_string(sp, x) + " is not in degree 0";
        }
    Subspace span = Subspace::span(sp.dim(), h);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i; j < h.size(); ++j) {
            SparseVector b = ell2(l, h[i], h[j]);
            if (!span.contains(b))
                return "l2(" + vec_string(sp, h[i]) + ", " + vec_string(sp, h[j]) + ") = " + vec_string(sp, b) +
                       " leaves the span";
        }
    return std::nullopt;
}

CheckResult check_derivation(const LInftyAlgebra& l, const Cochain& d, const WeightCap& cap) {
    const Coderivation dl = l.coderivation();
    const Coderivation dd = extend_coderivation(d, Flavor::symmetric);
    WeightCap c = bracket_cap(l.ell, d);
    c.max_weight = std::min(c.max_weight, cap.max_weight);
    c.max_degree = cap.max_degree;
    const Cochain b = bracket(dl, dd, c);
    if (b.is_zero()) return Certificate{cap, b.values().size()};
    const auto& [w, v] = *b.values().begin();
    Element value;
    for (const auto& [o, co] : v.entries) value.add({static_cast<std::uint32_t>(o)}, co);
    return Violation{"[delta_l, delta_d] != 0", w, value,
                     "[delta_l, delta_d]" + format_word(*l.space, w) + " = " + vec_string(*l.space, v)};
}

Derivation make_inner(const LInftyAlgebra& l, const Cochain& d_prime, const WeightCap& cap) {
    const Coderivation dl = l.coderivation();
    const Coderivation dp = extend_coderivation(d_prime, Flavor::symmetric);
    Cochain inner = bracket(dl, dp, bracket_cap(l.ell, d_prime));
    auto r = check_derivation(l, inner, cap);
    if (!passed(r)) throw AxiomViolation("inner derivation check failed", std::get<Violation>(r).witness);
    return Derivation{std::move(inner)};
}

Cochain insertion(const LInftyAlgebra& l, const SparseVector& x) {
    Cochain c(l.space, Flavor::symmetric, 1);
    c.add({}, x);
    return c;
}

// ---------------------------------------------------------------------------

namespace {

using Weight = std::vector<Scalar>;

Weight word_weight(const std::vector<Weight>& letter, const Word& w, std::size_t rank) {
    Weight out(rank, Scalar(0));
    for (auto x : w)
        for (std::size_t r = 0; r < rank; ++r) out[r] += letter[x][r];
    return out;
}

struct TorusData {
    std::vector<Weight> letter;               // weight of each basis element
    std::vector<std::size_t> others;          // h elements outside the torus
    std::vector<Weight> other_weight;
};

/// Finds the h elements acting diagonally on the basis and checks that the
/// rest of h consists of weight vectors.
std::optional<TorusData> detect_torus(const LInftyAlgebra& l, const std::vector<Cochain>& actions,
                                      const std::vector<SparseVector>& h) {
    const GradedSpace& sp = *l.space;
    std::vector<std::size_t> torus;
    for (std::size_t i = 0; i < actions.size(); ++i) {
        bool diagonal = true;
        for (std::uint32_t j = 0; j < sp.dim() && diagonal; ++j) {
            SparseVector v = actions[i].value({j});
            if (!v.empty() && (v.size() != 1 || v.entries[0].first != j)) diagonal = false;
        }
        if (diagonal) torus.push_back(i);
    }
    if (torus.empty()) return std::nullopt;
    TorusData td;
    td.letter.assign(sp.dim(), Weight(torus.size(), Scalar(0)));
    for (std::size_t r = 0; r < torus.size(); ++r)
        for (std::uint32_t j = 0; j < sp.dim(); ++j) td.letter[j][r] = actions[torus[r]].value({j}).coeff(j);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (std::find(torus.begin(), torus.end(), i) != torus.end()) continue;
        if (h[i].empty()) continue;
        const Weight mu = td.letter[h[i].entries.front().first];
        for (const auto& [j, c] : h[i].entries)
            if (td.letter[j] != mu) return std::nullopt;
        td.others.push_back(i);
        td.other_weight.push_back(mu);
    }
    return td;
}

SparseVector coordinates_in(const std::unordered_map<Word, Index, WordHash>& index, const Element& e) {
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [w, c] : e.terms()) {
        auto it = index.find(w);
        if (it == index.end()) throw std::logic_error("coinvariant move leaves its weight space");
        terms.emplace_back(it->second, c);
    }
    return SparseVector::from_unsorted(std::move(terms));
}

}  // namespace

LieHomology lie_homology(const LInftyAlgebra& l, const WeightCap& cap,
                         const std::optional<std::vector<SparseVector>>& h) {
    const GradedSpace& sp = *l.space;
    LieHomology out;
    out.space = l.space;
    out.table.cap = cap;
    const int mind = sp.dim() ? sp.min_suspended_degree() : 1;
    for (int k = 0; k <= cap.max_degree; ++k)
        out.table.exact.push_back(static_cast<std::size_t>((k + 1) / mind) <= cap.max_weight);
    if (out.table.exact_up_to() < 0) throw CapExceeded("weight cap too small to certify any homology degree");

    const int top = cap.max_degree + 1;
    std::vector<std::vector<Word>> blocks;
    for (int t = 0; t <= top; ++t) blocks.push_back(words_of_degree(sp, Flavor::symmetric, t, cap.max_weight));

    std::vector<Subspace> relations;
    if (h) {
        if (auto w = subalgebra_witness(l, *h)) throw AxiomViolation("not a sub-Lie-algebra", *w);
        out.coinvariants = true;
        std::vector<Cochain> actions;
        for (const auto& x : *h) {
            Cochain a = make_inner(l, insertion(l, x), cap).d;
            if (!a.component(0).is_zero())
                throw ValidationError("coinvariants: l_1 does not vanish on the acting subalgebra");
            actions.push_back(std::move(a));
        }
        auto torus = detect_torus(l, actions, *h);
        if (torus) {
            out.torus_reduced = true;
            const std::size_t rank = torus->letter.front().size();
            const Weight zero(rank, Scalar(0));
            for (int t = 0; t <= top; ++t) {
                std::map<Weight, std::vector<Word>> by_weight;
                for (Word& w : blocks[t]) by_weight[word_weight(torus->letter, w, rank)].push_back(std::move(w));
                std::vector<Word> kept = std::move(by_weight[zero]);
                std::unordered_map<Word, Index, WordHash> index;
                for (Index i = 0; i < kept.size(); ++i) index.emplace(kept[i], i);
                Subspace rel(kept.size());
                for (std::size_t y = 0; y < torus->others.size(); ++y) {
                    Weight target(rank);
                    for (std::size_t r = 0; r < rank; ++r) target[r] = -torus->other_weight[y][r];
                    auto it = by_weight.find(target);
                    if (it == by_weight.end()) continue;
                    const Coderivation act = extend_coderivation(actions[torus->others[y]], Flavor::symmetric);
                    for (const Word& w : it->second) rel.insert(coordinates_in(index, act.apply(w)));
                }
                blocks[t] = std::move(kept);
                relations.push_back(std::move(rel));
            }
        } else {
            for (int t = 0; t <= top; ++t) {
                std::unordered_map<Word, Index, WordHash> index;
                for (Index i = 0; i < blocks[t].size(); ++i) index.emplace(blocks[t][i], i);
                Subspace rel(blocks[t].size());
                for (const auto& a : actions) {
                    const Coderivation act = extend_coderivation(a, Flavor::symmetric);
                    for (const Word& w : blocks[t]) rel.insert(coordinates_in(index, act.apply(w)));
                }
                relations.push_back(std::move(rel));
            }
        }
    }

    auto complex = std::make_shared<QuotientComplex>(
        std::move(blocks), std::move(relations),
        [d = l.coderivation()](const Word& w) { return d.apply(w); }, out.torus_reduced);
    auto homology = std::make_shared<HomologyComputation>(complex, cap.max_degree);
    out.table.dims = homology->betti_numbers();
    out.complex = complex;
    out.homology = homology;
    return out;
}

std::map<int, SparseMatrix> inner_action_on_homology(const LInftyAlgebra& l, const LieHomology& h,
                                                     const Cochain& d_prime, const WeightCap& cap) {
    const Derivation inner = make_inner(l, d_prime, cap);
    const Coderivation d = extend_coderivation(inner.d, Flavor::symmetric);
    const QuotientComplex& cx = *h.complex;
    const int top = h.homology->max_degree();
    std::map<int, SparseMatrix> out;
    for (int t = 0; t <= top; ++t) {
        const int target = t + inner.d.degree();
        if (target < 0 || target > top) continue;
        const DegreeHomology& src = h.homology->at(t);
        const DegreeHomology& dst = h.homology->at(target);
        std::vector<SparseVector> columns;
        for (const auto& rep : src.representatives)
            columns.push_back(dst.project(cx.to_quotient(target, d.apply(cx.lift(t, rep)))));
        out.emplace(t, SparseMatrix::from_columns(dst.betti, columns));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Reduced coproduct of a chain of degree d (quotient coordinates), pushed
/// to H (x) H and flattened along the row index.
SparseVector reduced_coproduct(const LieHomology& h, int d, const SparseVector& chain,
                               const std::map<std::tuple<int, Index, Index>, Index>& row_of) {
    const QuotientComplex& cx = *h.complex;
    const TensorElement t = coproduct_sym(cx.lift(d, chain), *h.space);
    std::map<Word, Element> by_left;
    for (const auto& [lr, c] : t) {
        const auto& [l, r] = lr;
        if (l.empty() || r.empty()) continue;
        by_left[l].add(r, c);
    }
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [l, right] : by_left) {
        const int p = word_degree(*h.space, l);
        const int q = d - p;
        SparseVector left = h.homology->at(p).project(cx.to_quotient(p, Element::single(l)));
        if (left.empty()) continue;
        SparseVector rv = h.homology->at(q).project(cx.to_quotient(q, right));
        for (const auto& [i, a] : left.entries)
            for (const auto& [j, b] : rv.entries) terms.emplace_back(row_of.at({p, i, j}), a * b);
    }
    return SparseVector::from_unsorted(std::move(terms));
}

}  // namespace

HomologyCoproduct homology_coproduct(const LieHomology& h, bool check_boundaries) {
    HomologyCoproduct out;
    const int top = h.homology->max_degree();
    for (int d = 0; d <= top; ++d) {
        std::map<std::tuple<int, Index, Index>, Index> row_of;
        std::vector<std::tuple<int, Index, Index>> labels;
        for (int p = 1; p < d; ++p)
            for (Index i = 0; i < h.homology->at(p).betti; ++i)
                for (Index j = 0; j < h.homology->at(d - p).betti; ++j) {
                    row_of.emplace(std::make_tuple(p, i, j), labels.size());
                    labels.emplace_back(p, i, j);
                }
        const DegreeHomology& hd = h.homology->at(d);
        std::vector<SparseVector> columns;
        for (const auto& rep : hd.representatives) columns.push_back(reduced_coproduct(h, d, rep, row_of));
        if (check_boundaries) {
            for (const auto& b : hd.boundaries.basis())
                if (!reduced_coproduct(h, d, b, row_of).empty())
                    throw std::logic_error("coproduct is not well defined on homology in degree " + std::to_string(d));
        }
        SparseMatrix m = SparseMatrix::from_columns(labels.size(), columns);
        Subspace prim = d == 0 ? Subspace(hd.betti) : kernel_basis(m);
        out.primitive_dims.push_back(prim.dim());
        out.primitives.push_back(std::move(prim));
        out.reduced.push_back(std::move(m));
        out.row_labels.push_back(std::move(labels));
    }
    return out;
}

}  // namespace infhom
