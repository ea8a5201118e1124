#include "infhom/chain.hpp"

#include "infhom/errors.hpp"

namespace infhom {

QuotientComplex::QuotientComplex(std::vector<std::vector<Word>> words, std::vector<Subspace> relations,
                                 Differential differential, bool outside_words_vanish)
    : differential_(std::move(differential)), outside_words_vanish_(outside_words_vanish) {
    if (!relations.empty() && relations.size() != words.size())
        throw ValidationError("QuotientComplex: one relation subspace per degree is required");
    blocks_.resize(words.size());
    for (std::size_t t = 0; t < words.size(); ++t) {
        Block& b = blocks_[t];
        b.words = std::move(words[t]);
        for (Index i = 0; i < b.words.size(); ++i) b.index.emplace(b.words[i], i);
        b.relations = relations.empty() ? Subspace(b.words.size()) : std::move(relations[t]);
        if (b.relations.ambient_dim() != b.words.size())
            throw ValidationError("QuotientComplex: relation subspace has the wrong ambient dimension");
        for (Index i = 0; i < b.words.size(); ++i) {
            if (b.relations.is_pivot(i)) continue;
            b.quotient_position.emplace(i, b.quotient_words.size());
            b.quotient_words.push_back(i);
        }
    }
    matrices_.reserve(blocks_.size());
    for (std::size_t t = 0; t < blocks_.size(); ++t) {
        if (t == 0) {
            matrices_.emplace_back(0, dim(0));
            continue;
        }
        std::vector<SparseVector> columns;
        columns.reserve(dim(static_cast<int>(t)));
        for (Index q : blocks_[t].quotient_words)
            columns.push_back(to_quotient(static_cast<int>(t) - 1, differential_(blocks_[t].words[q])));
        matrices_.push_back(SparseMatrix::from_columns(dim(static_cast<int>(t) - 1), columns));
    }
}

SparseVector QuotientComplex::to_quotient(int t, const Element& e) const {
    const Block& b = blocks_.at(t);
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [w, c] : e.terms()) {
        auto it = b.index.find(w);
        if (it == b.index.end()) {
            if (outside_words_vanish_) continue;
            throw CapExceeded("word outside the computed block in degree " + std::to_string(t));
        }
        terms.emplace_back(it->second, c);
    }
    SparseVector v = b.relations.reduce(SparseVector::from_unsorted(std::move(terms)));
    std::vector<std::pair<Index, Scalar>> out;
    out.reserve(v.size());
    for (const auto& [i, c] : v.entries) out.emplace_back(b.quotient_position.at(i), c);
    return SparseVector(std::move(out));
}

Element QuotientComplex::lift(int t, const SparseVector& q) const {
    const Block& b = blocks_.at(t);
    Element out;
    for (const auto& [i, c] : q.entries) out.add(b.words[b.quotient_words.at(i)], c);
    return out;
}

// ---------------------------------------------------------------------------

SparseVector DegreeHomology::project(const SparseVector& v) const {
    SparseVector z;
    for (const auto& [i, c] : v.entries)
        if (cycles.is_pivot(i)) z = axpy(z, c, cycles.row_for_pivot(i));
    auto coords = solver->coordinates(z);
    if (!coords) throw std::logic_error("cycle outside the span of boundaries and representatives");
    std::vector<std::pair<Index, Scalar>> out;
    for (const auto& [i, c] : coords->entries)
        if (i >= boundaries_dim) out.emplace_back(i - boundaries_dim, c);
    return SparseVector(std::move(out));
}

HomologyComputation::HomologyComputation(std::shared_ptr<const QuotientComplex> complex, int max_degree)
    : complex_(std::move(complex)) {
    if (complex_->top_degree() < max_degree + 1)
        throw CapExceeded("homology in degree " + std::to_string(max_degree) +
                          " needs chains one degree higher");
    degrees_.resize(max_degree + 1);
    for (int t = 0; t <= max_degree; ++t) {
        DegreeHomology& h = degrees_[t];
        h.degree = t;
        h.chain_dim = complex_->dim(t);
        h.cycles = kernel_basis(complex_->differential(t));
        h.boundaries = image_basis(complex_->differential(t + 1));
        h.cycles_dim = h.cycles.dim();
        h.boundaries_dim = h.boundaries.dim();
        h.betti = h.cycles_dim - h.boundaries_dim;
        Subspace grow = h.boundaries;
        for (const auto& z : h.cycles.basis())
            if (grow.insert(z)) h.representatives.push_back(h.boundaries.reduce(z));
        auto basis = h.boundaries.basis();
        basis.insert(basis.end(), h.representatives.begin(), h.representatives.end());
        h.solver = std::make_shared<CoordinateSolver>(h.chain_dim, basis);
    }
}

std::vector<Index> HomologyComputation::betti_numbers() const {
    std::vector<Index> out;
    for (const auto& h : degrees_) out.push_back(h.betti);
    return out;
}

}  // namespace infhom
