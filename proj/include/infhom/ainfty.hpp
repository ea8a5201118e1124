#pragma once

#include "infhom/chain.hpp"
#include "infhom/coalgebra.hpp"

namespace infhom {

/// Structure constants of a graded associative algebra (optionally with a
/// differential of degree -1), in ordinary unsuspended form.
struct AssociativeTable {
    std::shared_ptr<const GradedSpace> space;
    std::map<std::pair<Index, Index>, SparseVector> product;
    std::map<Index, SparseVector> differential;
    std::optional<Index> unit;

    SparseVector multiply(Index a, Index b) const;
    SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
    SparseVector d(const SparseVector& x) const;
};

/// Witnesses for the classical axioms, or nullopt when the axiom holds.
std::optional<std::string> associativity_witness(const AssociativeTable& t);
std::optional<std::string> unit_witness(const AssociativeTable& t);
std::optional<std::string> leibniz_witness(const AssociativeTable& t);
std::optional<std::string> differential_square_witness(const AssociativeTable& t);

/// An A-infinity algebra: a degree -1 tensor cochain m = m_1 + m_2 + ...
/// on A[1]. m_k raises the unsuspended degree by k - 2.
struct AInftyAlgebra {
    std::string name;
    std::shared_ptr<const GradedSpace> space;
    Cochain m;
    std::optional<Index> unit;

    const GradedSpace& basis() const { return *space; }
    Coderivation coderivation(std::optional<WeightCap> cap = std::nullopt) const {
        return extend_coderivation(m, Flavor::tensor, cap);
    }
};

/// m_1(sa) = s(da), m_2(sa, sb) = (-1)^{|a|+1} s(ab); no axioms checked.
Cochain suspended_cochain(const AssociativeTable& t);

/// Throws AxiomViolation (associativity, unit) with a witness.
AInftyAlgebra from_associative(const AssociativeTable& t, std::string name = {});
/// Also checks d^2 = 0 and the Leibniz rule.
AInftyAlgebra from_dga(const AssociativeTable& t, std::string name = {});

/// Strict unitality in suspended form: m_2(su, sa) = -sa,
/// m_2(sa, su) = (-1)^{|a|+1} sa, and m_k vanishes on u for k != 2.
CheckResult check_strict_unit(const AInftyAlgebra& a);
/// delta_m^2 = 0 on every word in cap, plus strict unitality when a unit is declared.
CheckResult check_stasheff(const AInftyAlgebra& a, const WeightCap& cap);

// --- cyclic complex ------------------------------------------------------------

/// Signed cyclic rotation (a_0..a_n) -> +-(a_n, a_0, .., a_{n-1}) in suspended degrees.
Element cyclic_lambda(const GradedSpace& space, const Word& w);

/// Class of w in C/Im(1 - lambda): the lexicographically least rotation with
/// its sign, or nullopt when the class is zero.
std::optional<std::pair<int, Word>> cyclic_normal_form(const GradedSpace& space, const Word& w);

/// b_m on C_n = A[1]^{(x)(n+1)}: in-place insertions of m_k plus the
/// insertions whose segment wraps past the end, applied after rotating the
/// segment to the front.
Element cyclic_b(const AInftyAlgebra& a, const Word& w);

/// b_m followed by the cyclic normal form.
Element cyclic_b_on_classes(const AInftyAlgebra& a, const Word& w);

/// Homology dimension table with exactness flags. Entries not flagged exact
/// are lower-level truncation artefacts and only bound the true value.
struct BettiTable {
    std::vector<Index> dims;
    std::vector<bool> exact;
    WeightCap cap;

    int exact_up_to() const;
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Homological degree k of the cyclic complex has total suspended degree k + 1.
std::vector<Word> cyclic_basis(const GradedSpace& space, int hc_degree, std::size_t max_weight);

std::shared_ptr<QuotientComplex> cyclic_complex(const AInftyAlgebra& a, int max_degree, std::size_t max_weight);

/// HC_0..HC_{cap.max_degree}. Throws CapExceeded if no degree is exact.
BettiTable cyclic_homology(const AInftyAlgebra& a, const WeightCap& cap);

}  // namespace infhom
