#pragma once

#include "infhom/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace infhom {

struct BasisElement {
    std::string label;
    int degree = 0;  // unsuspended, >= 0

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite, non-negatively graded vector space with a labelled basis.
/// Sign computations use the suspended space V[1], where every degree is
/// raised by one.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<BasisElement> basis);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::string& label(std::size_t i) const { return basis_[i].label; }
    int degree(std::size_t i) const { return basis_[i].degree; }
    int suspended_degree(std::size_t i) const { return basis_[i].degree + 1; }
    std::optional<std::size_t> find(const std::string& label) const;
    std::size_t index_of(const std::string& label) const;
    int min_suspended_degree() const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.basis_ == b.basis_; }

private:
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Ordered list of basis indices; the empty word is the counit component K.
using Word = std::vector<std::uint32_t>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

int word_degree(const GradedSpace& space, const Word& w);
std::string format_word(const GradedSpace& space, const Word& w);

/// Sparse linear combination of words. Words are kept in lexicographic
/// order; zero coefficients are never stored.
class Element {
public:
    Element() = default;
    static Element single(Word w, Scalar c = Scalar(1));

    void add(const Word& w, const Scalar& c);
    void add(const Element& other, const Scalar& factor = Scalar(1));
    void scale(const Scalar& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const Word& w) const;
    const std::map<Word, Scalar>& terms() const { return terms_; }
    /// Terms of the given weight only.
    Element weight_part(std::size_t weight) const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::map<Word, Scalar> terms_;
};

std::string format_element(const GradedSpace& space, const Element& e);

/// Permutation of {0..n-1}, stored by images: i -> images[i].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }
    Permutation inverse() const;
    /// (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;
    int sign() const;

    static std::vector<Permutation> all(std::size_t n);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// Koszul sign of moving the i-th element (of degree degrees[i]) to slot
/// perm(i): the product over pairs i < j with perm(i) > perm(j) of
/// (-1)^(d_i d_j). Throws ValidationError on a length mismatch.
int koszul_sign(const Permutation& perm, std::span<const int> degrees);

/// Left action sigma.(v_1..v_n) = +-(v_{sigma^-1(1)}, ..., v_{sigma^-1(n)}),
/// signs from suspended degrees.
Element act(const Permutation& perm, const Word& word, const GradedSpace& space);

/// Normalised symmetriser P = (1/n!) sum_sigma sigma, applied weight by weight.
Element symmetrize(const Element& e, const GradedSpace& space);

/// All (p,q)-shuffles: permutations increasing on {0..p-1} and on {p..p+q-1}.
std::vector<Permutation> shuffles(std::size_t p, std::size_t q);

/// Coinvariant (graded-symmetric) normal form of a word: sorted indices
/// with the Koszul sign of the sort. nullopt when an odd letter repeats,
/// since such a class vanishes.
std::optional<std::pair<int, Word>> symmetric_normal_form(const GradedSpace& space, Word w);
bool is_symmetric_normal(const GradedSpace& space, const Word& w);

/// Every subset of positions {0..n-1} of size k, each as an increasing list.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace infhom
