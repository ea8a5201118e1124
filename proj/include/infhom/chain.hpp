#pragma once

#include "infhom/graded.hpp"

#include <functional>
#include <memory>

namespace infhom {

/// A finite slice of a chain complex whose chains are spanned by explicit
/// words, optionally divided by a subspace of relations in each degree.
/// The differential lowers degree by one. Quotient coordinates are the
/// words that are not pivots of the relation subspace, so every class has
/// a canonical normal form.
class QuotientComplex {
public:
    using Differential = std::function<Element(const Word&)>;

    /// words[t] spans degree t for t = 0..top. If `relations` is empty no
    /// quotient is taken. With `outside_words_vanish`, words that are not
    /// listed in a block are treated as lying in the relations (the blocks
    /// then hold one weight space of a grading preserved by everything).
    QuotientComplex(std::vector<std::vector<Word>> words, std::vector<Subspace> relations,
                    Differential differential, bool outside_words_vanish = false);

    int top_degree() const { return static_cast<int>(blocks_.size()) - 1; }
    Index ambient_dim(int t) const { return blocks_.at(t).words.size(); }
    Index dim(int t) const { return blocks_.at(t).quotient_words.size(); }
    const std::vector<Word>& words(int t) const { return blocks_.at(t).words; }
    const Subspace& relations(int t) const { return blocks_.at(t).relations; }

    /// Normal form of e in the quotient of degree t.
    SparseVector to_quotient(int t, const Element& e) const;
    /// The element spanned by the normal-form words with the given coordinates.
    Element lift(int t, const SparseVector& q) const;
    /// Matrix of the induced differential Q_t -> Q_{t-1} (zero for t = 0).
    const SparseMatrix& differential(int t) const { return matrices_.at(t); }
    const Differential& raw_differential() const { return differential_; }

private:
    struct Block {
        std::vector<Word> words;
        std::unordered_map<Word, Index, WordHash> index;
        Subspace relations;
        std::vector<Index> quotient_words;
        std::unordered_map<Index, Index> quotient_position;
    };

    std::vector<Block> blocks_;
    std::vector<SparseMatrix> matrices_;
    Differential differential_;
    bool outside_words_vanish_;
};

/// Homology in one degree with cycle representatives and a projection from
/// chains onto homology coordinates.
struct DegreeHomology {
    int degree = 0;
    Index chain_dim = 0;
    Index cycles_dim = 0;
    Index boundaries_dim = 0;
    Index betti = 0;
    /// In quotient coordinates, reduced modulo boundaries.
    std::vector<SparseVector> representatives;
    Subspace cycles;
    Subspace boundaries;
    std::shared_ptr<CoordinateSolver> solver;  // over boundary basis then representatives

    /// A retraction of chains onto homology that is a chain map: the cycle
    /// part of v (taken along the complement spanned by non-pivot unit
    /// vectors) expressed in the representatives. Boundaries map to zero.
    SparseVector project(const SparseVector& v) const;
    bool is_boundary(const SparseVector& v) const { return boundaries.contains(v); }
};

/// Homology of a QuotientComplex in degrees 0..max_degree (requires the
/// complex to reach max_degree + 1).
class HomologyComputation {
public:
    HomologyComputation(std::shared_ptr<const QuotientComplex> complex, int max_degree);

    const QuotientComplex& complex() const { return *complex_; }
    std::shared_ptr<const QuotientComplex> complex_ptr() const { return complex_; }
    int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
    const DegreeHomology& at(int t) const { return degrees_.at(t); }
    std::vector<Index> betti_numbers() const;

private:
    std::shared_ptr<const QuotientComplex> complex_;
    std::vector<DegreeHomology> degrees_;
};

}  // namespace infhom
