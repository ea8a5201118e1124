#pragma once

#include "infhom/constructions.hpp"

#include "json.hpp"

namespace infhom {

/// Dimensions of the free graded-commutative algebra on generators HC_k
/// placed in degree k + 1, truncated at degree d. Odd generators contribute
/// (1 + t^deg), even ones a polynomial factor. Requires hc exact up to d - 1.
BettiTable expand_exterior(const BettiTable& hc, int max_degree);

/// Product on H(gl_n(A))_{gl_n(K)} induced by the block sum, checked at
/// chain level through the multitrace (exact in the weights considered, since
/// the block sums land in gl_N with N at least the weight).
struct HopfReport {
    std::size_t n = 0;
    int max_degree = 0;
    bool commutative = true;
    bool associative = true;
    bool unital = true;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    /// Products x.y of basis classes with |x| + |y| <= min(n, max_degree),
    /// expressed in the representatives of H_{|x|+|y|}.
    std::map<std::tuple<int, Index, int, Index>, SparseVector> table;
    /// Nonzero products of two positive-degree primitives that are primitive.
    std::size_t primitive_products_checked = 0;
    std::size_t primitive_products_primitive = 0;
};

HopfReport hopf_product_on_homology(const GlAlgebra& g, const LieHomology& h, const HomologyCoproduct& cop);
HopfReport hopf_product_on_homology(const AInftyAlgebra& a, std::size_t n, const WeightCap& cap);

enum class Verdict { match, mismatch, unstable };
std::string to_string(Verdict v);

struct LQTOptions {
    std::vector<std::size_t> sizes{3, 4};
    int max_degree = 4;
    std::optional<std::size_t> max_weight;  // defaults to max_degree + 1 (CE), max_degree + 2 (HC)
    std::size_t jobs = 1;
    std::size_t block_budget = 2'000'000;   // words per chain block before reduction
    bool hopf_checks = true;
};

struct LQTSizeResult {
    std::size_t n = 0;
    std::vector<Index> dims;
    std::vector<Index> primitive_dims;
    std::optional<std::vector<Index>> unreduced_dims;  // for n <= 2
    std::optional<HopfReport> hopf;
};

struct LQTDegree {
    int degree = 0;
    std::optional<std::size_t> stable_from;
    std::optional<Index> stable_dim;
    Index exterior_dim = 0;
    std::optional<Index> primitive_dim;
    Index hc_shifted = 0;  // HC_{k-1}, 0 for k = 0
    Verdict dims = Verdict::unstable;
    Verdict primitives = Verdict::unstable;
};

struct LQTReport {
    std::string algebra;
    LQTOptions options;
    BettiTable hc;
    BettiTable exterior;
    std::vector<LQTSizeResult> sizes;
    std::vector<LQTDegree> degrees;
};

/// Runs the left path (CE homology of gl_n(A) modulo gl_n(K), primitives,
/// block-sum product) for every size and the right path (cyclic homology,
/// exterior expansion), then compares degree by degree. Degree k is stable
/// when two consecutive sizes n, n + 1 with n + 1 >= k give equal dims.
/// Throws ResourceExceeded when a block exceeds the budget.
LQTReport verify_lqt(const AInftyAlgebra& a, const LQTOptions& options);

/// Number of symmetric words of total suspended degree t and weight <= w.
std::size_t count_symmetric_words(const GradedSpace& space, int t, std::size_t w);

nlohmann::ordered_json to_json(const BettiTable& t);
nlohmann::ordered_json to_json(const LQTReport& r);
std::string to_text(const LQTReport& r);

}  // namespace infhom
