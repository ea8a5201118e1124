#include "infhom/coalgebra.hpp"

#include "infhom/errors.hpp"

#include <algorithm>
#include <limits>

namespace infhom {

Cochain::Cochain(std::shared_ptr<const GradedSpace> space, Flavor flavor, int degree)
    : space_(std::move(space)), flavor_(flavor), degree_(degree) {}

void Cochain::add(const Word& input, const SparseVector& output) {
    if (output.empty()) return;
    for (auto i : input)
        if (i >= space_->dim()) throw ValidationError("cochain input index out of range");
    const int target = word_degree(*space_, input) + degree_;
    for (const auto& [o, c] : output.entries) {
        (void)c;
        if (o >= space_->dim()) throw ValidationError("cochain output index out of range");
        if (space_->suspended_degree(o) != target)
            throw ValidationError("cochain value on " + format_word(*space_, input) +
                                  " has the wrong degree");
    }
    Word key = input;
    Scalar sign(1);
    if (flavor_ == Flavor::symmetric) {
        auto nf = symmetric_normal_form(*space_, input);
        if (!nf) throw ValidationError("symmetric cochain on a vanishing word " + format_word(*space_, input));
        sign = nf->first;
        key = std::move(nf->second);
    }
    auto& slot = values_[key];
    slot = axpy(slot, sign, output);
    if (slot.empty()) values_.erase(key);
}

void Cochain::set(const Word& input, const SparseVector& output) {
    Word key = input;
    if (flavor_ == Flavor::symmetric) {
        auto nf = symmetric_normal_form(*space_, input);
        if (nf) values_.erase(nf->second);
    } else {
        values_.erase(key);
    }
    add(input, output);
}

SparseVector Cochain::value(const Word& input) const {
    if (flavor_ == Flavor::tensor) {
        auto it = values_.find(input);
        return it == values_.end() ? SparseVector{} : it->second;
    }
    auto nf = symmetric_normal_form(*space_, input);
    if (!nf) return {};
    auto it = values_.find(nf->second);
    if (it == values_.end()) return {};
    return it->second.scaled(Scalar(nf->first));
}

std::set<std::size_t> Cochain::arities() const {
    std::set<std::size_t> out;
    for (const auto& [w, v] : values_) out.insert(w.size());
    return out;
}

std::size_t Cochain::max_arity() const {
    std::size_t m = 0;
    for (const auto& [w, v] : values_) m = std::max(m, w.size());
    return m;
}

Cochain Cochain::component(std::size_t arity) const {
    Cochain out(space_, flavor_, degree_);
    for (const auto& [w, v] : values_)
        if (w.size() == arity) out.values_.emplace(w, v);
    return out;
}

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain out(space_, flavor_, degree_);
    if (c == 0) return out;
    for (const auto& [w, v] : values_) out.values_.emplace(w, v.scaled(c));
    return out;
}

// ---------------------------------------------------------------------------

Coderivation::Coderivation(Cochain cochain, Flavor flavor, std::optional<WeightCap> cap)
    : cochain_(std::move(cochain)), flavor_(flavor), cap_(cap) {
    if (flavor_ == Flavor::symmetric && cochain_.flavor() != Flavor::symmetric)
        throw ValidationError("a symmetric coderivation needs a symmetric cochain");
}

Coderivation extend_coderivation(const Cochain& c, Flavor flavor, std::optional<WeightCap> cap) {
    return Coderivation(c, flavor, cap);
}

Element Coderivation::apply(const Word& w) const {
    if (cap_ && !cap_->admits(space(), w))
        throw CapExceeded("word " + format_word(space(), w) + " exceeds the weight cap");
    return flavor_ == Flavor::tensor ? apply_tensor(w) : apply_symmetric(w);
}

Element Coderivation::apply(const Element& e) const {
    Element out;
    for (const auto& [w, c] : e.terms()) out.add(apply(w), c);
    return out;
}

Element Coderivation::apply_tensor(const Word& w) const {
    const GradedSpace& sp = space();
    const int fdeg = cochain_.degree();
    Element out;
    for (std::size_t k : cochain_.arities()) {
        if (k > w.size()) break;
        int prefix_degree = 0;
        for (std::size_t j = 0; j + k <= w.size(); ++j) {
            if (j > 0) prefix_degree += sp.suspended_degree(w[j - 1]);
            Word seg(w.begin() + j, w.begin() + j + k);
            SparseVector val = cochain_.value(seg);
            if (val.empty()) continue;
            const int sign = sign_of_parity(static_cast<long>(fdeg) * prefix_degree);
            for (const auto& [o, c] : val.entries) {
                Word nw(w.begin(), w.begin() + j);
                nw.push_back(static_cast<std::uint32_t>(o));
                nw.insert(nw.end(), w.begin() + j + k, w.end());
                out.add(nw, c * sign);
            }
        }
    }
    return out;
}

Element Coderivation::apply_symmetric(const Word& input) const {
    const GradedSpace& sp = space();
    auto nf = symmetric_normal_form(sp, input);
    if (!nf) return {};
    const Word& w = nf->second;
    const int outer = nf->first;
    Element out;
    for (std::size_t k : cochain_.arities()) {
        if (k > w.size()) break;
        for (const auto& s : subsets(w.size(), k)) {
            Word seg;
            seg.reserve(k);
            for (auto p : s) seg.push_back(w[p]);
            auto it = cochain_.values().find(seg);
            if (it == cochain_.values().end()) continue;
            // Koszul sign of the unshuffle moving the chosen letters to the front.
            long exponent = 0;
            std::vector<bool> chosen(w.size(), false);
            for (auto p : s) chosen[p] = true;
            for (std::size_t a = 0; a < w.size(); ++a) {
                if (!chosen[a]) continue;
                for (std::size_t b = 0; b < a; ++b)
                    if (!chosen[b])
                        exponent += static_cast<long>(sp.suspended_degree(w[a])) * sp.suspended_degree(w[b]);
            }
            Word rest;
            for (std::size_t a = 0; a < w.size(); ++a)
                if (!chosen[a]) rest.push_back(w[a]);
            const int sign = outer * sign_of_parity(exponent);
            for (const auto& [o, c] : it->second.entries) {
                Word nw{static_cast<std::uint32_t>(o)};
                nw.insert(nw.end(), rest.begin(), rest.end());
                auto nnf = symmetric_normal_form(sp, std::move(nw));
                if (!nnf) continue;
                out.add(nnf->second, c * (sign * nnf->first));
            }
        }
    }
    return out;
}

Cochain corestrict(const Coderivation& d, std::size_t max_arity, const WeightCap& cap) {
    Cochain out(d.cochain().space_ptr(), d.flavor(), d.degree());
    const GradedSpace& sp = d.space();
    for (std::size_t k = 0; k <= std::min(max_arity, cap.max_weight); ++k) {
        for (const Word& w : enumerate_words(sp, d.flavor(), k, cap.max_degree)) {
            Element v = d.apply(w).weight_part(1);
            if (v.is_zero()) continue;
            std::vector<std::pair<Index, Scalar>> terms;
            for (const auto& [ow, c] : v.terms()) terms.emplace_back(ow[0], c);
            out.add(w, SparseVector::from_unsorted(std::move(terms)));
        }
    }
    return out;
}

Cochain bracket(const Coderivation& d1, const Coderivation& d2, const WeightCap& cap) {
    if (d1.flavor() != d2.flavor()) throw ValidationError("bracket: coderivation flavors differ");
    if (!(d1.space() == d2.space())) throw ValidationError("bracket: coderivations live on different spaces");
    const std::size_t a1 = d1.cochain().max_arity();
    const std::size_t a2 = d2.cochain().max_arity();
    const std::size_t top = (a1 + a2 == 0) ? 0 : a1 + a2 - 1;
    const int sign = sign_of_parity(static_cast<long>(d1.degree()) * d2.degree());
    Cochain out(d1.cochain().space_ptr(), d1.flavor(), d1.degree() + d2.degree());
    for (std::size_t k = 0; k <= std::min(top, cap.max_weight); ++k) {
        for (const Word& w : enumerate_words(d1.space(), d1.flavor(), k, cap.max_degree)) {
            Element e1 = d1.apply(d2.apply(w));
            Element e2 = d2.apply(d1.apply(w));
            e1.add(e2, Scalar(-sign));
            Element v = e1.weight_part(1);
            if (v.is_zero()) continue;
            std::vector<std::pair<Index, Scalar>> terms;
            for (const auto& [ow, c] : v.terms()) terms.emplace_back(ow[0], c);
            out.add(w, SparseVector::from_unsorted(std::move(terms)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

void add_term(TensorElement& t, const Word& left, const Word& right, const Scalar& c) {
    if (c == 0) return;
    auto key = std::make_pair(left, right);
    auto [it, inserted] = t.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

std::vector<std::pair<Word, Word>> coproduct_tensor(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.emplace_back(Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end()));
    return out;
}

TensorElement coproduct_tensor(const Element& e) {
    TensorElement out;
    for (const auto& [w, c] : e.terms())
        for (const auto& [l, r] : coproduct_tensor(w)) add_term(out, l, r, c);
    return out;
}

TensorElement coproduct_sym(const Element& e, const GradedSpace& space) {
    TensorElement out;
    for (const auto& [w, c] : e.terms()) {
        if (!is_symmetric_normal(space, w))
            throw ValidationError("coproduct_sym: input word " + format_word(space, w) + " is not symmetric");
        for (std::size_t p = 0; p <= w.size(); ++p) {
            for (const auto& s : subsets(w.size(), p)) {
                std::vector<bool> chosen(w.size(), false);
                for (auto i : s) chosen[i] = true;
                long exponent = 0;
                Word left;
                Word right;
                for (std::size_t a = 0; a < w.size(); ++a) {
                    if (chosen[a]) {
                        left.push_back(w[a]);
                        for (std::size_t b = 0; b < a; ++b)
                            if (!chosen[b])
                                exponent += static_cast<long>(space.suspended_degree(w[a])) *
                                            space.suspended_degree(w[b]);
                    } else {
                        right.push_back(w[a]);
                    }
                }
                add_term(out, left, right, c * sign_of_parity(exponent));
            }
        }
    }
    return out;
}

TensorElement coproduct(const Element& e, Flavor flavor, const GradedSpace& space) {
    return flavor == Flavor::tensor ? coproduct_tensor(e) : coproduct_sym(e, space);
}

TensorElement apply_on_tensor(const Coderivation& d, const TensorElement& t) {
    TensorElement out;
    const GradedSpace& sp = d.space();
    for (const auto& [lr, c] : t) {
        const auto& [l, r] = lr;
        const Element dl = d.apply(l);
        for (const auto& [nl, cl] : dl.terms()) add_term(out, nl, r, c * cl);
        const int sign = sign_of_parity(static_cast<long>(d.degree()) * word_degree(sp, l));
        const Element dr = d.apply(r);
        for (const auto& [nr, cr] : dr.terms()) add_term(out, l, nr, c * cr * sign);
    }
    return out;
}

// ---------------------------------------------------------------------------

Element include_i(const Element& sym, const GradedSpace& space) {
    Element out;
    std::map<std::size_t, std::vector<Permutation>> perms;
    for (const auto& [w, c] : sym.terms()) {
        auto& group = perms[w.size()];
        if (group.empty()) group = Permutation::all(w.size());
        for (const auto& p : group) out.add(act(p, w, space), c);
    }
    return out;
}

Element project_p(const Element& tensor, const GradedSpace& space) {
    Element out;
    for (const auto& [w, c] : tensor.terms()) {
        auto nf = symmetric_normal_form(space, w);
        if (!nf) continue;
        mpz_class fact = 1;
        for (std::size_t i = 2; i <= w.size(); ++i) fact *= static_cast<unsigned long>(i);
        out.add(nf->second, c * Scalar(nf->first) / Scalar(fact));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_rec(const GradedSpace& space, Flavor flavor, std::size_t weight, int degree_budget,
                   bool exact_degree, Word& cur, std::vector<Word>& out) {
    if (cur.size() == weight) {
        if (!exact_degree || degree_budget == 0) out.push_back(cur);
        return;
    }
    std::uint32_t start = 0;
    if (flavor == Flavor::symmetric && !cur.empty()) {
        start = cur.back();
        if (space.suspended_degree(cur.back()) % 2 != 0) ++start;
    }
    const int min_deg = space.min_suspended_degree();
    const int remaining_after = static_cast<int>(weight - cur.size() - 1);
    for (std::uint32_t i = start; i < space.dim(); ++i) {
        const int d = space.suspended_degree(i);
        if (d + remaining_after * min_deg > degree_budget) continue;
        cur.push_back(i);
        enumerate_rec(space, flavor, weight, degree_budget - d, exact_degree, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_words(const GradedSpace& space, Flavor flavor, std::size_t weight,
                                  std::optional<int> max_degree) {
    std::vector<Word> out;
    Word cur;
    int budget = max_degree ? *max_degree : std::numeric_limits<int>::max() / 2;
    enumerate_rec(space, flavor, weight, budget, false, cur, out);
    return out;
}

std::vector<Word> words_of_degree(const GradedSpace& space, Flavor flavor, int degree,
                                  std::size_t max_weight) {
    std::vector<Word> out;
    if (degree < 0) return out;
    for (std::size_t weight = 0; weight <= max_weight; ++weight) {
        if (space.dim() == 0 && weight > 0) break;
        if (weight > 0 && static_cast<int>(weight) * space.min_suspended_degree() > degree) break;
        Word cur;
        enumerate_rec(space, flavor, weight, degree, true, cur, out);
    }
    return out;
}

CheckResult check_square_zero(const Coderivation& d, const WeightCap& cap) {
    const GradedSpace& sp = d.space();
    Certificate cert{cap, 0};
    for (std::size_t k = 0; k <= cap.max_weight; ++k) {
        for (const Word& w : enumerate_words(sp, d.flavor(), k, cap.max_degree)) {
            Element sq = d.apply(d.apply(w));
            ++cert.words_checked;
            if (!sq.is_zero()) {
                return Violation{"coderivation does not square to zero", w, sq,
                                 "d^2" + format_word(sp, w) + " = " + format_element(sp, sq)};
            }
        }
    }
    return cert;
}

}  // namespace infhom
