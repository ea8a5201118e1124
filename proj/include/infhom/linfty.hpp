#pragma once

#include "infhom/ainfty.hpp"

namespace infhom {

/// An L-infinity algebra: a degree -1 symmetric cochain l = l_1 + l_2 + ...
/// on L[1]. In suspended form a strict Lie bracket reads
/// l_2(sx, sy) = (-1)^{|x|+1} s[x, y].
struct LInftyAlgebra {
    std::string name;
    std::shared_ptr<const GradedSpace> space;
    Cochain ell;

    const GradedSpace& basis() const { return *space; }
    Coderivation coderivation(std::optional<WeightCap> cap = std::nullopt) const {
        return extend_coderivation(ell, Flavor::symmetric, cap);
    }
};

/// l_2 extended bilinearly to vectors of L[1].
SparseVector ell2(const LInftyAlgebra& l, const SparseVector& x, const SparseVector& y);

/// delta_l^2 = 0 on every symmetric word within cap.
CheckResult check_linfty(const LInftyAlgebra& l, const WeightCap& cap);

/// Witness that span(h) is not a sub-Lie-algebra of L_0, or nullopt.
std::optional<std::string> subalgebra_witness(const LInftyAlgebra& l, const std::vector<SparseVector>& h);

// --- derivations -------------------------------------------------------------------

struct Derivation {
    Cochain d;
};

/// [delta_l, delta_d] = 0 within cap.
CheckResult check_derivation(const LInftyAlgebra& l, const Cochain& d, const WeightCap& cap);

/// The cochain of [delta_l, delta_{d'}], checked to be a derivation.
/// Throws AxiomViolation if the check fails (it cannot when delta_l^2 = 0).
Derivation make_inner(const LInftyAlgebra& l, const Cochain& d_prime, const WeightCap& cap);

/// Arity-0 cochain inserting x; make_inner of it is the adjoint action of x.
Cochain insertion(const LInftyAlgebra& l, const SparseVector& x);

// --- Chevalley-Eilenberg complex --------------------------------------------------

/// Homology of (Lambda^c L, delta_l) within cap, optionally divided by the
/// action of a sub-Lie-algebra h of L_0. When h contains a torus acting
/// diagonally on the basis and every element of h is a weight vector, the
/// complex is first restricted to the zero-weight words (the other weight
/// spaces lie in the image of the torus) and only the remaining moves of h
/// are divided out.
struct LieHomology {
    std::shared_ptr<const GradedSpace> space;
    BettiTable table;
    std::shared_ptr<const QuotientComplex> complex;
    std::shared_ptr<const HomologyComputation> homology;
    bool coinvariants = false;
    bool torus_reduced = false;
};

LieHomology lie_homology(const LInftyAlgebra& l, const WeightCap& cap,
                         const std::optional<std::vector<SparseVector>>& h = std::nullopt);

/// Induced map H_t -> H_{t + |D|} of the derivation D = [delta_l, delta_{d'}],
/// keyed by source degree t (columns indexed by representatives). Only
/// source degrees whose target is inside the computed range appear.
std::map<int, SparseMatrix> inner_action_on_homology(const LInftyAlgebra& l, const LieHomology& h,
                                                   const Cochain& d_prime, const WeightCap& cap);

// --- coproduct and primitives -------------------------------------------------------

/// Reduced coproduct H_d -> sum_{p+q=d, p,q>0} H_p (x) H_q; one matrix per
/// degree d. Rows are indexed by (p, i, j) in lexicographic order.
struct HomologyCoproduct {
    std::vector<SparseMatrix> reduced;
    std::vector<std::vector<std::tuple<int, Index, Index>>> row_labels;
    std::vector<Index> primitive_dims;
    std::vector<Subspace> primitives;
};

/// With check_boundaries, every boundary basis vector is pushed through the
/// same formula and must map to zero; throws std::logic_error otherwise.
HomologyCoproduct homology_coproduct(const LieHomology& h, bool check_boundaries = true);

}  // namespace infhom
