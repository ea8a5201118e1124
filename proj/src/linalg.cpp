#include "infhom/linalg.hpp"

#include "infhom/errors.hpp"

#include <algorithm>
#include <regex>

namespace infhom {

std::optional<Scalar> parse_scalar(std::string_view text) {
    static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
    std::match_results<std::string_view::const_iterator> match;
    if (!std::regex_match(text.begin(), text.end(), match, pattern)) return std::nullopt;
    std::string digits = match[1].str();
    if (digits.front() == '+') digits.erase(0, 1);
    mpz_class num(digits);
    mpz_class den(1);
    if (match[2].matched) den = mpz_class(match[2].str());
    if (den == 0) return std::nullopt;
    Scalar value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value) {
    Scalar v = value;
    v.canonicalize();
    return v.get_str();
}

// ---------------------------------------------------------------------------

SparseVector SparseVector::from_unsorted(std::vector<std::pair<Index, Scalar>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& [i, c] : terms) {
        if (!out.entries.empty() && out.entries.back().first == i) {
            out.entries.back().second += c;
        } else {
            out.entries.emplace_back(i, std::move(c));
        }
    }
    std::erase_if(out.entries, [](const auto& e) { return e.second == 0; });
    return out;
}

Scalar SparseVector::coeff(Index i) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), i,
                               [](const auto& e, Index k) { return e.first < k; });
    if (it != entries.end() && it->first == i) return it->second;
    return Scalar(0);
}

void SparseVector::scale(const Scalar& factor) {
    if (factor == 0) {
        entries.clear();
        return;
    }
    for (auto& e : entries) e.second *= factor;
}

SparseVector SparseVector::scaled(const Scalar& factor) const {
    SparseVector out = *this;
    out.scale(factor);
    return out;
}

SparseVector axpy(const SparseVector& x, const Scalar& a, const SparseVector& y) {
    if (a == 0 || y.empty()) return x;
    SparseVector out;
    out.entries.reserve(x.size() + y.size());
    auto xi = x.entries.begin();
    auto yi = y.entries.begin();
    while (xi != x.entries.end() || yi != y.entries.end()) {
        if (yi == y.entries.end() || (xi != x.entries.end() && xi->first < yi->first)) {
            out.entries.push_back(*xi++);
        } else if (xi == x.entries.end() || yi->first < xi->first) {
            out.entries.emplace_back(yi->first, a * yi->second);
            ++yi;
        } else {
            Scalar s = xi->second + a * yi->second;
            if (s != 0) out.entries.emplace_back(xi->first, std::move(s));
            ++xi;
            ++yi;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(Index rows, Index cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
    for (const auto& t : triplets) {
        if (t.row >= rows || t.col >= cols) throw ValidationError("matrix entry out of range");
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (auto& t : triplets) {
        if (!entries_.empty() && entries_.back().row == t.row && entries_.back().col == t.col) {
            entries_.back().value += t.value;
        } else {
            entries_.push_back(std::move(t));
        }
    }
    std::erase_if(entries_, [](const Triplet& t) { return t.value == 0; });
}

SparseMatrix SparseMatrix::from_columns(Index rows, const std::vector<SparseVector>& columns) {
    std::vector<Triplet> t;
    for (Index c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c].entries) t.push_back({r, c, v});
    return SparseMatrix(rows, columns.size(), std::move(t));
}

SparseMatrix SparseMatrix::from_rows(Index cols, const std::vector<SparseVector>& rows) {
    std::vector<Triplet> t;
    for (Index r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r].entries) t.push_back({r, c, v});
    return SparseMatrix(rows.size(), cols, std::move(t));
}

SparseMatrix SparseMatrix::identity(Index n) {
    std::vector<Triplet> t;
    for (Index i = 0; i < n; ++i) t.push_back({i, i, Scalar(1)});
    return SparseMatrix(n, n, std::move(t));
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
    std::vector<SparseVector> out(rows_);
    for (const auto& t : entries_) out[t.row].entries.emplace_back(t.col, t.value);
    return out;
}

std::vector<SparseVector> SparseMatrix::column_vectors() const {
    std::vector<SparseVector> out(cols_);
    for (const auto& t : entries_) out[t.col].entries.emplace_back(t.row, t.value);
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<Triplet> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(t));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& t : entries_) {
        Scalar c = v.coeff(t.col);
        if (c != 0) terms.emplace_back(t.row, t.value * c);
    }
    return SparseVector::from_unsorted(std::move(terms));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        const auto& x = a.entries_[i];
        const auto& y = b.entries_[i];
        if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(Index ambient_dim, const std::vector<SparseVector>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

Subspace Subspace::full(Index ambient_dim) {
    Subspace s(ambient_dim);
    for (Index i = 0; i < ambient_dim; ++i) s.rows_.emplace(i, SparseVector::unit(i));
    return s;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
    // Rows are fully reduced, so the multiplier of each pivot row is the
    // coefficient v already has at that pivot.
    SparseVector out = v;
    for (const auto& [i, c] : v.entries) {
        auto it = rows_.find(i);
        if (it != rows_.end()) out = axpy(out, -c, it->second);
    }
    return out;
}

bool Subspace::insert(const SparseVector& v) {
    for (const auto& [i, c] : v.entries) {
        (void)c;
        if (i >= ambient_) throw ValidationError("vector index exceeds ambient dimension");
    }
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    r.scale(1 / r.entries.front().second);
    const Index pivot = r.leading_index();
    for (auto& [p, row] : rows_) {
        Scalar c = row.coeff(pivot);
        if (c != 0) row = axpy(row, -c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& [p, row] : other.rows_)
        if (!contains(row)) return false;
    return true;
}

std::vector<SparseVector> Subspace::basis() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
}

std::vector<Index> Subspace::pivots() const {
    std::vector<Index> out;
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
}

Index rank(const SparseMatrix& m) {
    // Eliminate along the shorter side.
    auto vecs = m.rows() <= m.cols() ? m.row_vectors() : m.column_vectors();
    Subspace s(m.rows() <= m.cols() ? m.cols() : m.rows());
    // Short vectors first keeps fill-in down.
    std::stable_sort(vecs.begin(), vecs.end(),
                     [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });
    for (const auto& v : vecs) s.insert(v);
    return s.dim();
}

Subspace kernel_basis(const SparseMatrix& m) {
    Subspace rowspace = Subspace::span(m.cols(), m.row_vectors());
    std::vector<SparseVector> kernel;
    for (Index free = 0; free < m.cols(); ++free) {
        if (rowspace.is_pivot(free)) continue;
        std::vector<std::pair<Index, Scalar>> terms{{free, Scalar(1)}};
        for (Index p : rowspace.pivots()) {
            Scalar c = rowspace.row_for_pivot(p).coeff(free);
            if (c != 0) terms.emplace_back(p, -c);
        }
        kernel.push_back(SparseVector::from_unsorted(std::move(terms)));
    }
    return Subspace::span(m.cols(), kernel);
}

Subspace image_basis(const SparseMatrix& m) {
    return Subspace::span(m.rows(), m.column_vectors());
}

Index quotient_dim(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw ValidationError("quotient_dim: ambient dimensions differ");
    if (!u.contains(w)) throw ValidationError("quotient_dim: W is not contained in U");
    return u.dim() - w.dim();
}

// ---------------------------------------------------------------------------

CoordinateSolver::CoordinateSolver(Index ambient_dim, const std::vector<SparseVector>& basis)
    : ambient_(ambient_dim), basis_size_(basis.size()) {
    for (Index j = 0; j < basis.size(); ++j) {
        SparseVector v = basis[j];
        SparseVector combo = SparseVector::unit(j);
        for (const auto& [i, c] : basis[j].entries) {
            auto it = rows_.find(i);
            if (it == rows_.end()) continue;
            v = axpy(v, -c, it->second.vec);
            combo = axpy(combo, -c, it->second.combo);
        }
        if (v.empty()) throw ValidationError("CoordinateSolver: basis is linearly dependent");
        Scalar inv = 1 / v.entries.front().second;
        v.scale(inv);
        combo.scale(inv);
        const Index pivot = v.leading_index();
        for (auto& [p, row] : rows_) {
            Scalar c = row.vec.coeff(pivot);
            if (c == 0) continue;
            row.vec = axpy(row.vec, -c, v);
            row.combo = axpy(row.combo, -c, combo);
        }
        rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
    }
}

std::optional<SparseVector> CoordinateSolver::coordinates(const SparseVector& v) const {
    SparseVector rest = v;
    SparseVector coords;
    for (const auto& [i, c] : v.entries) {
        auto it = rows_.find(i);
        if (it == rows_.end()) continue;
        rest = axpy(rest, -c, it->second.vec);
        coords = axpy(coords, c, it->second.combo);
    }
    if (!rest.empty()) return std::nullopt;
    return coords;
}

}  // namespace infhom
