#pragma once

#include "infhom/linfty.hpp"

namespace infhom {

/// l_k(w) = sum over sigma in S_k of m_k(sigma . w) on symmetric words, i.e.
/// the L-infinity structure with delta_l = p delta_m i. With `certify` the
/// result is checked on all words of weight up to 2M - 1.
LInftyAlgebra lie_ify(const AInftyAlgebra& a, bool certify = true);

/// A (x) B for B an associative algebra concentrated in degree 0:
/// m'_k(a_1 b_1, .., a_k b_k) = m_k(a_1, .., a_k) b_1 .. b_k.
/// Basis index b * dim(A) + a, label "a.b".
AInftyAlgebra tensor_with_associative(const AInftyAlgebra& a, const AssociativeTable& b);

/// The unit of an associative table as a vector, when one exists.
std::optional<SparseVector> find_unit(const AssociativeTable& t);

/// M_n(K) on matrix units E_rc (0-based r, c; index r * n + c).
AssociativeTable matrix_units(std::size_t n);
std::string matrix_unit_label(std::size_t n, std::size_t r, std::size_t c);

AInftyAlgebra matrix_algebra(const AInftyAlgebra& a, std::size_t n);

/// gl_n(A) = lie_ify(M_n(A)) with its coordinates.
struct GlAlgebra {
    AInftyAlgebra base;
    std::size_t n = 0;
    AInftyAlgebra matrices;
    LInftyAlgebra lie;

    std::size_t base_dim() const { return base.space->dim(); }
    Index index(std::size_t r, std::size_t c, Index a) const { return (r * n + c) * base_dim() + a; }
    /// gl_n(K) = span of E_rc (x) 1; requires a unit in the base.
    std::vector<SparseVector> scalar_subalgebra() const;
};

GlAlgebra gl(const AInftyAlgebra& a, std::size_t n, bool certify = true);

/// Graded space of gl_N over a base space, without structure; used as the
/// target of block sums for sizes that are never materialised as algebras.
std::shared_ptr<const GradedSpace> gl_space(const GradedSpace& base, std::size_t n);

/// Upper-left corner inclusion gl_p(A) -> gl_q(A), p <= q.
SparseMatrix corner_inclusion(std::size_t p, std::size_t q, std::size_t base_dim);

/// Block sum gl_p(A) (+) gl_q(A) -> gl_{2 max(p,q)}(A): a_ij (1-based) goes to
/// c_{2i-1,2j-1} and b_ij to c_{2i,2j}. Columns: gl_p coordinates, then gl_q.
SparseMatrix block_plus_map(std::size_t p, std::size_t q, std::size_t base_dim);
SparseVector block_plus(const SparseVector& x, std::size_t p, const SparseVector& y, std::size_t q,
                        std::size_t base_dim);

/// L_1 (+) L_2 with the componentwise structure (mixed brackets vanish).
LInftyAlgebra direct_sum(const LInftyAlgebra& a, const LInftyAlgebra& b);

/// Image of a symmetric element under the coalgebra map induced by a linear map.
Element push_forward(const SparseMatrix& f, const Element& e, const GradedSpace& target);

/// Witness that the linear map f: L_1 -> L_2 fails to intertwine the
/// brackets, checked on every symmetric word up to the largest arity.
std::optional<std::string> strict_morphism_witness(const SparseMatrix& f, const LInftyAlgebra& from,
                                                   const LInftyAlgebra& to);

/// Tr x = sum of diagonal entries, an element of A.
SparseVector trace(const SparseVector& x, std::size_t n, std::size_t base_dim);

/// Spanning set {[E_ij, E_kl (x) a]} of [M_n(K), M_n(A)].
std::vector<SparseVector> commutator_generators(std::size_t n, std::size_t base_dim);

/// Membership in [M_n(K), M_n(A)] by the trace criterion; for n <= 3 it is
/// also decided by exact subspace membership and the two must agree.
bool in_commutator_subspace(const SparseVector& x, std::size_t n, std::size_t base_dim);

/// Multitrace of a symmetric element of Lambda^c gl_N(A): each term
/// (E_{i_1 j_1} a_1, .., E_{i_d j_d} a_d) of i(e) contributes the pair
/// (tau, a_1 .. a_d) for every tau with j_r = i_{tau(r)}. Two elements of the
/// same weight d <= N have equal multitraces iff they agree modulo the
/// gl_N(K)-coinvariant moves.
using Multitrace = std::map<std::pair<Permutation, Word>, Scalar>;
Multitrace multitrace(const Element& e, std::size_t n, const GradedSpace& gl_space, std::size_t base_dim);

}  // namespace infhom
