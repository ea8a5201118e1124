#pragma once

#include "infhom/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace infhom {

using Index = std::size_t;

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
struct SparseVector {
    std::vector<std::pair<Index, Scalar>> entries;

    SparseVector() = default;
    explicit SparseVector(std::vector<std::pair<Index, Scalar>> sorted_entries)
        : entries(std::move(sorted_entries)) {}

    /// Sums duplicate indices and drops zeros.
    static SparseVector from_unsorted(std::vector<std::pair<Index, Scalar>> terms);
    static SparseVector unit(Index i) { return SparseVector({{i, Scalar(1)}}); }

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    Scalar coeff(Index i) const;
    Index leading_index() const { return entries.front().first; }

    void scale(const Scalar& factor);
    SparseVector scaled(const Scalar& factor) const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

/// x + a * y
SparseVector axpy(const SparseVector& x, const Scalar& a, const SparseVector& y);

struct Triplet {
    Index row;
    Index col;
    Scalar value;
};

class SparseMatrix {
public:
    SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}
    /// Duplicate coordinates are summed; zeros are dropped; entries end up
    /// in row-major order so equality is structural.
    SparseMatrix(Index rows, Index cols, std::vector<Triplet> triplets);

    static SparseMatrix from_columns(Index rows, const std::vector<SparseVector>& columns);
    static SparseMatrix from_rows(Index cols, const std::vector<SparseVector>& rows);
    static SparseMatrix identity(Index n);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    const std::vector<Triplet>& entries() const { return entries_; }

    std::vector<SparseVector> row_vectors() const;
    std::vector<SparseVector> column_vectors() const;
    SparseMatrix transpose() const;
    SparseVector apply(const SparseVector& v) const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    Index rows_;
    Index cols_;
    std::vector<Triplet> entries_;
};

/// A linear subspace of Q^ambient held in reduced row echelon form. The
/// echelon form is unique, so two Subspace objects are equal iff the
/// subspaces coincide.
class Subspace {
public:
    explicit Subspace(Index ambient_dim = 0) : ambient_(ambient_dim) {}
    static Subspace span(Index ambient_dim, const std::vector<SparseVector>& vectors);
    static Subspace full(Index ambient_dim);

    /// Returns true if v enlarged the subspace.
    bool insert(const SparseVector& v);
    /// v minus its component along the echelon rows; zero iff v is in the span.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    bool contains(const Subspace& other) const;

    Index dim() const { return rows_.size(); }
    Index ambient_dim() const { return ambient_; }
    std::vector<SparseVector> basis() const;
    std::vector<Index> pivots() const;
    bool is_pivot(Index i) const { return rows_.count(i) != 0; }
    const SparseVector& row_for_pivot(Index pivot) const { return rows_.at(pivot); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    Index ambient_;
    std::map<Index, SparseVector> rows_;
};

Index rank(const SparseMatrix& m);
/// ker M as a subspace of Q^cols.
Subspace kernel_basis(const SparseMatrix& m);
/// Column space of M as a subspace of Q^rows.
Subspace image_basis(const SparseMatrix& m);
/// dim U - dim W; throws ValidationError unless W is contained in U.
Index quotient_dim(const Subspace& u, const Subspace& w);

/// Expresses vectors in a fixed (linearly independent) basis.
class CoordinateSolver {
public:
    CoordinateSolver(Index ambient_dim, const std::vector<SparseVector>& basis);
    Index basis_size() const { return basis_size_; }
    /// Coordinates over the basis, or nullopt when v is outside the span.
    std::optional<SparseVector> coordinates(const SparseVector& v) const;

private:
    struct Row {
        SparseVector vec;
        SparseVector combo;
    };
    Index ambient_;
    Index basis_size_;
    std::map<Index, Row> rows_;
};

}  // namespace infhom
