#include "infhom/lqt.hpp"

#include "infhom/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

namespace infhom {

BettiTable expand_exterior(const BettiTable& hc, int max_degree) {
    if (max_degree < 0) throw ValidationError("negative degree cap");
    if (hc.exact_up_to() < max_degree - 1)
        throw ValidationError("cyclic homology is not exact up to degree " + std::to_string(max_degree - 1));
    std::vector<Index> poly(max_degree + 1, 0);
    poly[0] = 1;
    for (int k = 0; k < max_degree; ++k) {
        const int deg = k + 1;
        for (Index g = 0; g < hc.dims.at(k); ++g) {
            if (deg % 2 == 1) {
                for (int i = max_degree; i >= deg; --i) poly[i] += poly[i - deg];
            } else {
                for (int i = deg; i <= max_degree; ++i) poly[i] += poly[i - deg];
            }
        }
    }
    BettiTable out;
    out.dims = std::move(poly);
    out.exact.assign(max_degree + 1, true);
    out.cap = hc.cap;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

Element wedge(const Element& x, const Element& y, const GradedSpace& space) {
    Element out;
    for (const auto& [w1, c1] : x.terms())
        for (const auto& [w2, c2] : y.terms()) {
            Word w(w1);
            w.insert(w.end(), w2.begin(), w2.end());
            auto nf = symmetric_normal_form(space, std::move(w));
            if (nf) out.add(nf->second, c1 * c2 * nf->first);
        }
    return out;
}

class BlockProduct {
public:
    BlockProduct(const GradedSpace& base) : base_(base) {}

    const GradedSpace& space(std::size_t n) {
        auto it = spaces_.find(n);
        if (it == spaces_.end()) it = spaces_.emplace(n, gl_space(base_, n)).first;
        return *it->second;
    }

    /// x in Lambda gl_p, y in Lambda gl_q -> i_odd(x) ^ i_even(y) in Lambda gl_{2 max(p,q)}.
    Element operator()(const Element& x, std::size_t p, const Element& y, std::size_t q) {
        const std::size_t dim = base_.dim();
        const SparseMatrix f = block_plus_map(p, q, dim);
        const auto cols = f.column_vectors();
        const std::size_t split = p * p * dim;
        const SparseMatrix odd = SparseMatrix::from_columns(f.rows(), {cols.begin(), cols.begin() + split});
        const SparseMatrix even = SparseMatrix::from_columns(f.rows(), {cols.begin() + split, cols.end()});
        const GradedSpace& target = space(2 * std::max(p, q));
        return wedge(push_forward(odd, x, target), push_forward(even, y, target), target);
    }

    Multitrace trace_of(const Element& e, std::size_t n) { return multitrace(e, n, space(n), base_.dim()); }

private:
    const GradedSpace& base_;
    std::map<std::size_t, std::shared_ptr<const GradedSpace>> spaces_;
};

bool equal_up_to(const Multitrace& a, const Multitrace& b, int sign) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || it->second * sign != v) return false;
    }
    return true;
}

}  // namespace

HopfReport hopf_product_on_homology(const GlAlgebra& g, const LieHomology& h, const HomologyCoproduct& cop) {
    if (!h.coinvariants) throw ValidationError("the block-sum product lives on the gl_n(K)-coinvariants");
    HopfReport rep;
    const std::size_t n = g.n;
    const int top = h.homology->max_degree();
    rep.n = n;
    rep.max_degree = top;
    const QuotientComplex& cx = *h.complex;
    BlockProduct prod(*g.base.space);

    std::vector<std::vector<Element>> cls(top + 1);
    for (int t = 0; t <= top; ++t)
        for (const auto& r : h.homology->at(t).representatives) cls[t].push_back(cx.lift(t, r));
    const Element one = Element::single({});

    for (int t = 0; t <= top; ++t)
        for (const auto& x : cls[t]) {
            const Multitrace tx = prod.trace_of(x, n);
            if (!equal_up_to(prod.trace_of(prod(x, n, one, n), 2 * n), tx, 1) ||
                !equal_up_to(prod.trace_of(prod(one, n, x, n), 2 * n), tx, 1))
                rep.unital = false;
        }

    for (int t1 = 0; t1 <= top; ++t1)
        for (int t2 = 0; t1 + t2 <= top; ++t2)
            for (const auto& x : cls[t1])
                for (const auto& y : cls[t2]) {
                    ++rep.pairs_checked;
                    const int sign = sign_of_parity(static_cast<long>(t1) * t2);
                    if (!equal_up_to(prod.trace_of(prod(x, n, y, n), 2 * n),
                                     prod.trace_of(prod(y, n, x, n), 2 * n), sign))
                        rep.commutative = false;
                }

    for (int t1 = 0; t1 <= top; ++t1)
        for (int t2 = 0; t1 + t2 <= top; ++t2)
            for (int t3 = 0; t1 + t2 + t3 <= top; ++t3)
                for (const auto& x : cls[t1])
                    for (const auto& y : cls[t2])
                        for (const auto& z : cls[t3]) {
                            ++rep.triples_checked;
                            const Element left = prod(prod(x, n, y, n), 2 * n, z, n);
                            const Element right = prod(x, n, prod(y, n, z, n), 2 * n);
                            if (!equal_up_to(prod.trace_of(left, 4 * n), prod.trace_of(right, 4 * n), 1))
                                rep.associative = false;
                        }

    // Product classes in gl_n coordinates, possible while the weight fits in n.
    const int reach = std::min<int>(static_cast<int>(n), top);
    for (int d = 0; d <= reach; ++d) {
        std::vector<std::tuple<int, Index, int, Index>> keys;
        std::vector<Multitrace> targets;
        for (int t1 = 0; t1 <= d; ++t1)
            for (Index i = 0; i < cls[t1].size(); ++i)
                for (Index j = 0; j < cls[d - t1].size(); ++j) {
                    keys.emplace_back(t1, i, d - t1, j);
                    targets.push_back(prod.trace_of(prod(cls[t1][i], n, cls[d - t1][j], n), 2 * n));
                }
        if (keys.empty()) continue;
        std::vector<Multitrace> basis;
        for (Index q = 0; q < cx.dim(d); ++q) basis.push_back(prod.trace_of(cx.lift(d, SparseVector::unit(q)), n));
        std::map<std::pair<Permutation, Word>, Index> coord;
        auto to_vec = [&](const Multitrace& m) {
            std::vector<std::pair<Index, Scalar>> out;
            for (const auto& [k, v] : m) out.emplace_back(coord.emplace(k, coord.size()).first->second, v);
            return SparseVector::from_unsorted(std::move(out));
        };
        std::vector<SparseVector> bvec, tvec;
        for (const auto& m : basis) bvec.push_back(to_vec(m));
        for (const auto& m : targets) tvec.push_back(to_vec(m));
        if (Subspace::span(coord.size(), bvec).dim() != bvec.size())
            throw std::logic_error("multitrace is not faithful on the coinvariants of degree " + std::to_string(d));
        CoordinateSolver solver(coord.size(), bvec);
        for (std::size_t k = 0; k < keys.size(); ++k) {
            auto c = solver.coordinates(tvec[k]);
            if (!c) throw std::logic_error("block-sum product leaves the coinvariant chains");
            rep.table[keys[k]] = h.homology->at(d).project(*c);
        }
    }

    for (int t1 = 1; t1 <= reach; ++t1)
        for (int t2 = 1; t1 + t2 <= reach; ++t2) {
            const int d = t1 + t2;
            for (const auto& p1 : cop.primitives[t1].basis())
                for (const auto& p2 : cop.primitives[t2].basis()) {
                    SparseVector c;
                    for (const auto& [i, a] : p1.entries)
                        for (const auto& [j, b] : p2.entries) c = axpy(c, a * b, rep.table.at({t1, i, t2, j}));
                    if (c.empty()) continue;
                    ++rep.primitive_products_checked;
                    if (cop.reduced[d].apply(c).empty()) ++rep.primitive_products_primitive;
                }
        }
    return rep;
}

HopfReport hopf_product_on_homology(const AInftyAlgebra& a, std::size_t n, const WeightCap& cap) {
    GlAlgebra g = gl(a, n);
    LieHomology h = lie_homology(g.lie, cap, g.scalar_subalgebra());
    HomologyCoproduct cop = homology_coproduct(h);
    return hopf_product_on_homology(g, h, cop);
}

// ---------------------------------------------------------------------------

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "MATCH";
        case Verdict::mismatch: return "MISMATCH";
        case Verdict::unstable: return "UNSTABLE";
    }
    return "?";
}

std::size_t count_symmetric_words(const GradedSpace& space, int t, std::size_t w) {
    if (t < 0) return 0;
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    auto add = [](std::size_t a, std::size_t b) { return a > kMax - b ? kMax : a + b; };
    std::vector<std::vector<std::size_t>> dp(t + 1, std::vector<std::size_t>(w + 1, 0));
    dp[0][0] = 1;
    for (Index i = 0; i < space.dim(); ++i) {
        const int s = space.suspended_degree(i);
        if (s == 0 || s > t) continue;
        if (s % 2 == 1) {
            for (int d = t; d >= s; --d)
                for (std::size_t k = w; k >= 1; --k) dp[d][k] = add(dp[d][k], dp[d - s][k - 1]);
        } else {
            for (int d = s; d <= t; ++d)
                for (std::size_t k = 1; k <= w; ++k) dp[d][k] = add(dp[d][k], dp[d - s][k - 1]);
        }
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k <= w; ++k) total = add(total, dp[t][k]);
    return total;
}

LQTReport verify_lqt(const AInftyAlgebra& a, const LQTOptions& options) {
    if (!a.unit) throw ValidationError("the comparison needs a unital algebra");
    if (options.max_degree < 0) throw ValidationError("negative degree cap");
    const std::size_t m = std::max<std::size_t>(1, a.m.max_arity());
    auto cert = check_stasheff(a, WeightCap{2 * m - 1, std::numeric_limits<int>::max() / 4});
    if (!passed(cert)) throw AxiomViolation("not an A-infinity algebra", std::get<Violation>(cert).witness);

    LQTReport rep;
    rep.algebra = a.name;
    rep.options = options;
    std::sort(rep.options.sizes.begin(), rep.options.sizes.end());
    rep.options.sizes.erase(std::unique(rep.options.sizes.begin(), rep.options.sizes.end()), rep.options.sizes.end());
    if (rep.options.sizes.empty() || rep.options.sizes.front() == 0) throw ValidationError("matrix sizes must be positive");
    const int d = options.max_degree;
    const WeightCap ce_cap{options.max_weight.value_or(d + 1), d};
    const WeightCap hc_cap{options.max_weight.value_or(d + 2), d};

    rep.hc = cyclic_homology(a, hc_cap);
    rep.exterior = expand_exterior(rep.hc, d);

    std::string largest = "none";
    for (std::size_t n : rep.options.sizes) {
        auto sp = gl_space(*a.space, n);
        for (int t = 0; t <= d + 1; ++t) {
            const std::size_t c = count_symmetric_words(*sp, t, ce_cap.max_weight);
            if (c > options.block_budget)
                throw ResourceExceeded("chain block of gl_" + std::to_string(n) + " in degree " + std::to_string(t) +
                                       " has " + std::to_string(c) + " words (budget " +
                                       std::to_string(options.block_budget) + "); largest admissible block: " + largest);
            largest = "gl_" + std::to_string(n) + " degree " + std::to_string(t) + " (" + std::to_string(c) + " words)";
        }
    }

    const auto& sizes = rep.options.sizes;
    rep.sizes.resize(sizes.size());
    std::vector<std::exception_ptr> errors(sizes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < sizes.size(); i = next++) {
            try {
                LQTSizeResult r;
                r.n = sizes[i];
                GlAlgebra g = gl(a, r.n);
                LieHomology h = lie_homology(g.lie, ce_cap, g.scalar_subalgebra());
                HomologyCoproduct cop = homology_coproduct(h);
                r.dims = h.table.dims;
                r.primitive_dims = cop.primitive_dims;
                if (r.n <= 2) r.unreduced_dims = lie_homology(g.lie, ce_cap).table.dims;
                if (options.hopf_checks) r.hopf = hopf_product_on_homology(g, h, cop);
                rep.sizes[i] = std::move(r);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(options.jobs, 1, sizes.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (int k = 0; k <= d; ++k) {
        LQTDegree deg;
        deg.degree = k;
        deg.exterior_dim = rep.exterior.dims[k];
        deg.hc_shifted = k == 0 ? 0 : rep.hc.dims[k - 1];
        for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
            if (sizes[i + 1] != sizes[i] + 1 || sizes[i + 1] < static_cast<std::size_t>(k)) continue;
            bool stays = true;
            for (std::size_t j = i + 1; j < sizes.size(); ++j)
                if (rep.sizes[j].dims[k] != rep.sizes[i].dims[k]) stays = false;
            if (!stays) continue;
            deg.stable_from = sizes[i];
            deg.stable_dim = rep.sizes[i].dims[k];
            bool prim_stays = true;
            for (std::size_t j = i + 1; j < sizes.size(); ++j)
                if (rep.sizes[j].primitive_dims[k] != rep.sizes[i].primitive_dims[k]) prim_stays = false;
            if (prim_stays) deg.primitive_dim = rep.sizes[i].primitive_dims[k];
            break;
        }
        if (deg.stable_dim) deg.dims = *deg.stable_dim == deg.exterior_dim ? Verdict::match : Verdict::mismatch;
        if (deg.primitive_dim) deg.primitives = *deg.primitive_dim == deg.hc_shifted ? Verdict::match : Verdict::mismatch;
        rep.degrees.push_back(deg);
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json vec_json(const SparseVector& v) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [i, c] : v.entries) out.push_back({i, to_string(c)});
    return out;
}

template <class T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const BettiTable& t) {
    nlohmann::ordered_json j;
    j["dims"] = t.dims;
    j["exact"] = t.exact;
    j["exact_up_to"] = t.exact_up_to();
    j["caps"] = {{"max_weight", t.cap.max_weight}, {"max_degree", t.cap.max_degree}};
    return j;
}

nlohmann::ordered_json to_json(const LQTReport& r) {
    nlohmann::ordered_json j;
    j["algebra"] = r.algebra;
    j["sizes"] = r.options.sizes;
    j["max_degree"] = r.options.max_degree;
    j["cyclic_homology"] = to_json(r.hc);
    j["exterior"] = to_json(r.exterior);
    auto sizes = nlohmann::ordered_json::array();
    for (const auto& s : r.sizes) {
        nlohmann::ordered_json e;
        e["n"] = s.n;
        e["dims"] = s.dims;
        e["primitive_dims"] = s.primitive_dims;
        e["unreduced_dims"] = opt_json(s.unreduced_dims);
        if (s.hopf) {
            const HopfReport& h = *s.hopf;
            nlohmann::ordered_json hj;
            hj["commutative"] = h.commutative;
            hj["associative"] = h.associative;
            hj["unital"] = h.unital;
            hj["pairs_checked"] = h.pairs_checked;
            hj["triples_checked"] = h.triples_checked;
            hj["primitive_products_checked"] = h.primitive_products_checked;
            hj["primitive_products_primitive"] = h.primitive_products_primitive;
            auto table = nlohmann::ordered_json::array();
            for (const auto& [k, v] : h.table) {
                const auto& [t1, i, t2, jj] = k;
                table.push_back({{"left", {t1, i}}, {"right", {t2, jj}}, {"product", vec_json(v)}});
            }
            hj["products"] = table;
            e["hopf"] = hj;
        } else {
            e["hopf"] = nullptr;
        }
        sizes.push_back(e);
    }
    j["results"] = sizes;
    auto degs = nlohmann::ordered_json::array();
    for (const auto& d : r.degrees) {
        degs.push_back({{"degree", d.degree},
                        {"stable_from", opt_json(d.stable_from)},
                        {"stable_dim", opt_json(d.stable_dim)},
                        {"exterior_dim", d.exterior_dim},
                        {"primitive_dim", opt_json(d.primitive_dim)},
                        {"hc_shifted", d.hc_shifted},
                        {"dims_verdict", to_string(d.dims)},
                        {"primitive_verdict", to_string(d.primitives)}});
    }
    j["verdicts"] = degs;
    return j;
}

std::string to_text(const LQTReport& r) {
    std::ostringstream os;
    os << "algebra " << r.algebra << ", degrees 0.." << r.options.max_degree << ", sizes";
    for (auto n : r.options.sizes) os << ' ' << n;
    os << "\n";
    auto cell = [](const std::optional<Index>& v) { return v ? std::to_string(*v) : std::string("-"); };
    os << std::left << std::setw(5) << "deg";
    for (const auto& s : r.sizes) os << std::setw(7) << ("n=" + std::to_string(s.n));
    os << std::setw(8) << "stable" << std::setw(8) << "Lambda" << std::setw(6) << "prim" << std::setw(8) << "HC_k-1"
       << std::setw(10) << "dims" << "primitives\n";
    for (const auto& d : r.degrees) {
        os << std::setw(5) << d.degree;
        for (const auto& s : r.sizes) os << std::setw(7) << s.dims[d.degree];
        os << std::setw(8) << cell(d.stable_dim) << std::setw(8) << d.exterior_dim << std::setw(6)
           << cell(d.primitive_dim) << std::setw(8) << d.hc_shifted << std::setw(10) << to_string(d.dims)
           << to_string(d.primitives) << "\n";
    }
    for (const auto& s : r.sizes) {
        if (s.unreduced_dims) {
            os << "n=" << s.n << " without coinvariants:";
            for (auto v : *s.unreduced_dims) os << ' ' << v;
            os << "\n";
        }
        if (s.hopf)
            os << "n=" << s.n << " product: commutative=" << (s.hopf->commutative ? "yes" : "no")
               << " associative=" << (s.hopf->associative ? "yes" : "no")
               << " unital=" << (s.hopf->unital ? "yes" : "no") << " (" << s.hopf->pairs_checked << " pairs, "
               << s.hopf->triples_checked << " triples)\n";
    }
    return os.str();
}

}  // namespace infhom
