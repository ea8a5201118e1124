#include "infhom/constructions.hpp"

#include "infhom/errors.hpp"

#include <functional>
#include <limits>

namespace infhom {

namespace {

constexpr int kAnyDegree = std::numeric_limits<int>::max() / 4;

}  // namespace

LInftyAlgebra lie_ify(const AInftyAlgebra& a, bool certify) {
    const GradedSpace& sp = *a.space;
    Cochain ell(a.space, Flavor::symmetric, a.m.degree());
    for (std::size_t k : a.m.arities()) {
        for (const Word& w : enumerate_words(sp, Flavor::symmetric, k)) {
            const Element iw = include_i(Element::single(w), sp);
            SparseVector out;
            for (const auto& [v, c] : iw.terms()) {
                SparseVector val = a.m.value(v);
                if (!val.empty()) out = axpy(out, c, val);
            }
            if (!out.empty()) ell.add(w, out);
        }
    }
    LInftyAlgebra l{a.name.empty() ? std::string() : a.name + "^Lie", a.space, std::move(ell)};
    if (certify) {
        const std::size_t top = std::max<std::size_t>(1, 2 * std::max<std::size_t>(1, a.m.max_arity()) - 1);
        auto r = check_linfty(l, WeightCap{top, kAnyDegree});
        if (!passed(r)) throw AxiomViolation("Lie-ification is not an L-infinity structure", std::get<Violation>(r).witness);
    }
    return l;
}

std::optional<SparseVector> find_unit(const AssociativeTable& t) {
    const Index dim = t.space->dim();
    std::map<std::pair<Index, Index>, std::vector<std::pair<Index, Scalar>>> left, right;
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j) {
            for (const auto& [k, c] : t.multiply(i, j).entries) left[{j, k}].emplace_back(i, c);
            for (const auto& [k, c] : t.multiply(j, i).entries) right[{j, k}].emplace_back(i, c);
        }
    std::vector<SparseVector> rows;
    for (auto* eqs : {&left, &right})
        for (Index j = 0; j < dim; ++j)
            for (Index k = 0; k < dim; ++k) {
                auto terms = (*eqs)[{j, k}];
                if (j == k) terms.emplace_back(dim, Scalar(1));
                if (!terms.empty()) rows.push_back(SparseVector::from_unsorted(std::move(terms)));
            }
    Subspace s = Subspace::span(dim + 1, rows);
    if (s.is_pivot(dim)) return std::nullopt;
    std::vector<std::pair<Index, Scalar>> u;
    for (Index p : s.pivots()) {
        Scalar c = s.row_for_pivot(p).coeff(dim);
        if (c != 0) u.emplace_back(p, c);
    }
    SparseVector unit(std::move(u));
    for (Index j = 0; j < dim; ++j) {
        const auto e = SparseVector::unit(j);
        if (t.multiply(unit, e) != e || t.multiply(e, unit) != e) return std::nullopt;
    }
    return unit;
}

AInftyAlgebra tensor_with_associative(const AInftyAlgebra& a, const AssociativeTable& b) {
    const GradedSpace& sa = *a.space;
    const GradedSpace& sb = *b.space;
    for (Index i = 0; i < sb.dim(); ++i)
        if (sb.degree(i) != 0) throw ValidationError("tensor factor must be concentrated in degree 0");
    if (!b.differential.empty()) throw ValidationError("tensor factor must carry no differential");
    if (auto w = associativity_witness(b)) throw AxiomViolation("tensor factor is not associative", *w);
    if (!find_unit(b)) throw AxiomViolation("tensor factor is not unital", "no unit element solves e*b = b*e = b");

    const Index da = sa.dim();
    std::vector<BasisElement> basis;
    for (Index j = 0; j < sb.dim(); ++j)
        for (Index i = 0; i < da; ++i) basis.push_back({sa.label(i) + "." + sb.label(j), sa.degree(i)});
    auto space = std::make_shared<const GradedSpace>(std::move(basis));

    Cochain m(space, Flavor::tensor, a.m.degree());
    for (const auto& [w, val] : a.m.values()) {
        const std::size_t k = w.size();
        Word input(k);
        std::function<void(std::size_t, const SparseVector&)> rec = [&](std::size_t pos, const SparseVector& prefix) {
            if (pos == k) {
                std::vector<std::pair<Index, Scalar>> out;
                for (const auto& [bj, cb] : prefix.entries)
                    for (const auto& [o, co] : val.entries) out.emplace_back(bj * da + o, cb * co);
                m.add(input, SparseVector::from_unsorted(std::move(out)));
                return;
            }
            for (Index j = 0; j < sb.dim(); ++j) {
                SparseVector next = pos == 0 ? SparseVector::unit(j) : b.multiply(prefix, SparseVector::unit(j));
                if (next.empty()) continue;
                input[pos] = static_cast<std::uint32_t>(j * da + w[pos]);
                rec(pos + 1, next);
            }
        };
        if (k == 0) {
            m.add({}, val);
            continue;
        }
        rec(0, {});
    }
    std::optional<Index> unit;
    if (a.unit && b.unit) unit = *b.unit * da + *a.unit;
    return AInftyAlgebra{a.name, space, std::move(m), unit};
}

std::string matrix_unit_label(std::size_t n, std::size_t r, std::size_t c) {
    if (n < 10) return "E" + std::to_string(r + 1) + std::to_string(c + 1);
    return "E" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
}

AssociativeTable matrix_units(std::size_t n) {
    if (n == 0) throw ValidationError("matrix size must be at least 1");
    std::vector<BasisElement> basis;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) basis.push_back({matrix_unit_label(n, r, c), 0});
    AssociativeTable t{std::make_shared<const GradedSpace>(std::move(basis)), {}, {}, std::nullopt};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) t.product[{r * n + c, c * n + d}] = SparseVector::unit(r * n + d);
    if (n == 1) t.unit = 0;
    return t;
}

AInftyAlgebra matrix_algebra(const AInftyAlgebra& a, std::size_t n) {
    AInftyAlgebra m = tensor_with_associative(a, matrix_units(n));
    m.name = "M_" + std::to_string(n) + "(" + a.name + ")";
    return m;
}

std::vector<SparseVector> GlAlgebra::scalar_subalgebra() const {
    if (!base.unit) throw ValidationError("gl_n(K) needs a unit in the base algebra");
    std::vector<SparseVector> out;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.push_back(SparseVector::unit(index(r, c, *base.unit)));
    return out;
}

GlAlgebra gl(const AInftyAlgebra& a, std::size_t n, bool certify) {
    AInftyAlgebra m = matrix_algebra(a, n);
    LInftyAlgebra l = lie_ify(m, certify);
    l.name = "gl_" + std::to_string(n) + "(" + a.name + ")";
    return GlAlgebra{a, n, std::move(m), std::move(l)};
}

std::shared_ptr<const GradedSpace> gl_space(const GradedSpace& base, std::size_t n) {
    std::vector<BasisElement> basis;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (Index i = 0; i < base.dim(); ++i)
                basis.push_back({base.label(i) + "." + matrix_unit_label(n, r, c), base.degree(i)});
    return std::make_shared<const GradedSpace>(std::move(basis));
}

SparseMatrix corner_inclusion(std::size_t p, std::size_t q, std::size_t base_dim) {
    if (p > q) throw ValidationError("corner inclusion needs p <= q");
    std::vector<SparseVector> cols;
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c)
            for (Index a = 0; a < base_dim; ++a) cols.push_back(SparseVector::unit((r * q + c) * base_dim + a));
    return SparseMatrix::from_columns(q * q * base_dim, cols);
}

SparseMatrix block_plus_map(std::size_t p, std::size_t q, std::size_t base_dim) {
    const std::size_t n = 2 * std::max(p, q);
    std::vector<SparseVector> cols;
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c)
            for (Index a = 0; a < base_dim; ++a)
                cols.push_back(SparseVector::unit(((2 * r) * n + 2 * c) * base_dim + a));
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t c = 0; c < q; ++c)
            for (Index a = 0; a < base_dim; ++a)
                cols.push_back(SparseVector::unit(((2 * r + 1) * n + 2 * c + 1) * base_dim + a));
    return SparseMatrix::from_columns(n * n * base_dim, cols);
}

SparseVector block_plus(const SparseVector& x, std::size_t p, const SparseVector& y, std::size_t q,
                        std::size_t base_dim) {
    const Index shift = p * p * base_dim;
    std::vector<std::pair<Index, Scalar>> terms(x.entries.begin(), x.entries.end());
    for (const auto& [i, c] : y.entries) terms.emplace_back(i + shift, c);
    return block_plus_map(p, q, base_dim).apply(SparseVector::from_unsorted(std::move(terms)));
}

LInftyAlgebra direct_sum(const LInftyAlgebra& a, const LInftyAlgebra& b) {
    std::vector<BasisElement> basis;
    for (const auto& e : a.space->basis()) basis.push_back({"1:" + e.label, e.degree});
    for (const auto& e : b.space->basis()) basis.push_back({"2:" + e.label, e.degree});
    auto space = std::make_shared<const GradedSpace>(std::move(basis));
    if (a.ell.degree() != b.ell.degree()) throw ValidationError("direct sum of structures of different degree");
    Cochain ell(space, Flavor::symmetric, a.ell.degree());
    for (const auto& [w, v] : a.ell.values()) ell.add(w, v);
    const auto shift = static_cast<std::uint32_t>(a.space->dim());
    for (const auto& [w, v] : b.ell.values()) {
        Word s(w);
        for (auto& x : s) x += shift;
        std::vector<std::pair<Index, Scalar>> out;
        for (const auto& [i, c] : v.entries) out.emplace_back(i + shift, c);
        ell.add(s, SparseVector(std::move(out)));
    }
    return LInftyAlgebra{a.name + "+" + b.name, space, std::move(ell)};
}

Element push_forward(const SparseMatrix& f, const Element& e, const GradedSpace& target) {
    const auto cols = f.column_vectors();
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Word cur(w.size());
        std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t pos, const Scalar& coeff) {
            if (pos == w.size()) {
                auto nf = symmetric_normal_form(target, cur);
                if (nf) out.add(nf->second, coeff * nf->first);
                return;
            }
            for (const auto& [i, ci] : cols.at(w[pos]).entries) {
                cur[pos] = static_cast<std::uint32_t>(i);
                rec(pos + 1, coeff * ci);
            }
        };
        rec(0, c);
    }
    return out;
}

std::optional<std::string> strict_morphism_witness(const SparseMatrix& f, const LInftyAlgebra& from,
                                                   const LInftyAlgebra& to) {
    std::set<std::size_t> arities = from.ell.arities();
    for (auto k : to.ell.arities()) arities.insert(k);
    for (std::size_t k : arities) {
        for (const Word& w : enumerate_words(*from.space, Flavor::symmetric, k)) {
            SparseVector lhs = f.apply(from.ell.value(w));
            SparseVector rhs;
            const Element image = push_forward(f, Element::single(w), *to.space);
            for (const auto& [v, c] : image.terms()) {
                SparseVector val = to.ell.value(v);
                if (!val.empty()) rhs = axpy(rhs, c, val);
            }
            if (lhs != rhs) return "l" + std::to_string(k) + format_word(*from.space, w) + " is not preserved";
        }
    }
    return std::nullopt;
}

SparseVector trace(const SparseVector& x, std::size_t n, std::size_t base_dim) {
    std::vector<std::pair<Index, Scalar>> out;
    for (const auto& [i, c] : x.entries) {
        const Index a = i % base_dim;
        const Index rc = i / base_dim;
        if (rc / n == rc % n) out.emplace_back(a, c);
    }
    return SparseVector::from_unsorted(std::move(out));
}

std::vector<SparseVector> commutator_generators(std::size_t n, std::size_t base_dim) {
    auto idx = [&](std::size_t r, std::size_t c, Index a) { return (r * n + c) * base_dim + a; };
    std::vector<SparseVector> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (Index a = 0; a < base_dim; ++a) {
                        std::vector<std::pair<Index, Scalar>> t;
                        if (j == k) t.emplace_back(idx(i, l, a), Scalar(1));
                        if (l == i) t.emplace_back(idx(k, j, a), Scalar(-1));
                        SparseVector v = SparseVector::from_unsorted(std::move(t));
                        if (!v.empty()) out.push_back(std::move(v));
                    }
    return out;
}

bool in_commutator_subspace(const SparseVector& x, std::size_t n, std::size_t base_dim) {
    const bool by_trace = trace(x, n, base_dim).empty();
    if (n <= 3) {
        const bool by_span = Subspace::span(n * n * base_dim, commutator_generators(n, base_dim)).contains(x);
        if (by_span != by_trace) throw std::logic_error("trace criterion disagrees with the commutator span");
    }
    return by_trace;
}

Multitrace multitrace(const Element& e, std::size_t n, const GradedSpace& gl_space, std::size_t base_dim) {
    Multitrace out;
    for (const auto& [w, c] : e.terms()) {
        const Element iw = include_i(Element::single(w), gl_space);
        for (const auto& [v, cv] : iw.terms()) {
            const std::size_t d = v.size();
            std::vector<std::size_t> row(d), col(d);
            Word aword(d);
            for (std::size_t r = 0; r < d; ++r) {
                const Index rc = v[r] / base_dim;
                aword[r] = static_cast<std::uint32_t>(v[r] % base_dim);
                row[r] = rc / n;
                col[r] = rc % n;
            }
            std::vector<std::size_t> tau(d);
            std::vector<bool> used(d, false);
            std::function<void(std::size_t)> rec = [&](std::size_t r) {
                if (r == d) {
                    auto key = std::make_pair(Permutation(tau), aword);
                    Scalar& slot = out[key];
                    slot += c * cv;
                    if (slot == 0) out.erase(key);
                    return;
                }
                for (std::size_t s = 0; s < d; ++s) {
                    if (used[s] || row[s] != col[r]) continue;
                    used[s] = true;
                    tau[r] = s;
                    rec(r + 1);
                    used[s] = false;
                }
            };
            rec(0);
        }
    }
    return out;
}

}  // namespace infhom
