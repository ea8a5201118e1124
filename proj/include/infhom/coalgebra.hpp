#pragma once

#include "infhom/graded.hpp"

#include <memory>
#include <set>
#include <variant>

namespace infhom {

/// Finite window on an infinite coalgebra: words of weight <= max_weight and
/// total suspended degree <= max_degree.
struct WeightCap {
    std::size_t max_weight = 4;
    int max_degree = 8;

    bool admits(const GradedSpace& space, const Word& w) const {
        return w.size() <= max_weight && word_degree(space, w) <= max_degree;
    }
    friend bool operator==(const WeightCap&, const WeightCap&) = default;
};

enum class Flavor { tensor, symmetric };

/// A family of multilinear maps f_k : V[1]^{(x)k} -> V[1] of one common
/// suspended degree, stored as sparse structure constants. Symmetric
/// cochains are stored on symmetric normal forms only and are evaluated on
/// other orderings through the Koszul sign.
class Cochain {
public:
    Cochain(std::shared_ptr<const GradedSpace> space, Flavor flavor, int degree);

    const GradedSpace& space() const { return *space_; }
    const std::shared_ptr<const GradedSpace>& space_ptr() const { return space_; }
    Flavor flavor() const { return flavor_; }
    int degree() const { return degree_; }

    /// Adds output to the value on `input` (normalised first for symmetric
    /// cochains). Throws ValidationError if an output has the wrong degree.
    void add(const Word& input, const SparseVector& output);
    void set(const Word& input, const SparseVector& output);
    /// Value on an arbitrary input word.
    SparseVector value(const Word& input) const;

    const std::map<Word, SparseVector>& values() const { return values_; }
    std::set<std::size_t> arities() const;
    std::size_t max_arity() const;
    bool is_zero() const { return values_.empty(); }
    Cochain component(std::size_t arity) const;
    Cochain scaled(const Scalar& c) const;

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return *a.space_ == *b.space_ && a.flavor_ == b.flavor_ && a.degree_ == b.degree_ &&
               a.values_ == b.values_;
    }

private:
    std::shared_ptr<const GradedSpace> space_;
    Flavor flavor_;
    int degree_;
    std::map<Word, SparseVector> values_;
};

/// The coderivation of T^c V[1] (tensor flavor) or of the coinvariant model
/// of S^c V[1] (symmetric flavor) whose corestriction is the given cochain.
class Coderivation {
public:
    Coderivation(Cochain cochain, Flavor flavor, std::optional<WeightCap> cap = std::nullopt);

    const Cochain& cochain() const { return cochain_; }
    Flavor flavor() const { return flavor_; }
    int degree() const { return cochain_.degree(); }
    const GradedSpace& space() const { return cochain_.space(); }

    /// Throws CapExceeded for a word outside the cap, if one was given.
    Element apply(const Word& w) const;
    Element apply(const Element& e) const;

private:
    Element apply_tensor(const Word& w) const;
    Element apply_symmetric(const Word& w) const;

    Cochain cochain_;
    Flavor flavor_;
    std::optional<WeightCap> cap_;
};

Coderivation extend_coderivation(const Cochain& c, Flavor flavor,
                                 std::optional<WeightCap> cap = std::nullopt);

/// Weight-1 part of the coderivation on every basis word up to max_arity
/// (within cap): the inverse of extend_coderivation.
Cochain corestrict(const Coderivation& d, std::size_t max_arity, const WeightCap& cap);

/// Cochain of the graded commutator [d1,d2] = d1 d2 - (-1)^{|d1||d2|} d2 d1.
/// Throws ValidationError when flavors or spaces differ.
Cochain bracket(const Coderivation& d1, const Coderivation& d2, const WeightCap& cap);

// --- coproducts --------------------------------------------------------------

using TensorElement = std::map<std::pair<Word, Word>, Scalar>;

void add_term(TensorElement& t, const Word& left, const Word& right, const Scalar& c);

/// Deconcatenation: all n+1 splittings, counit terms included.
std::vector<std::pair<Word, Word>> coproduct_tensor(const Word& w);
TensorElement coproduct_tensor(const Element& e);

/// Unshuffle coproduct on the coinvariant model. Throws ValidationError if
/// a word is not in symmetric normal form.
TensorElement coproduct_sym(const Element& e, const GradedSpace& space);

/// (d (x) 1 + 1 (x) d) applied to a two-fold tensor, Koszul sign on the right factor.
TensorElement apply_on_tensor(const Coderivation& d, const TensorElement& t);
/// Applies the coproduct of the matching flavor.
TensorElement coproduct(const Element& e, Flavor flavor, const GradedSpace& space);

// --- inclusion / projection between Lambda^c and T^c -------------------------

/// i: coinvariant class [w] -> sum over sigma of sigma.w.
Element include_i(const Element& sym, const GradedSpace& space);
/// p: tensor -> (1/n!) [tensor]; p o i = id.
Element project_p(const Element& tensor, const GradedSpace& space);

// --- enumeration ----------------------------------------------------------------

/// Basis words of one weight: all tensor words, or symmetric normal forms.
std::vector<Word> enumerate_words(const GradedSpace& space, Flavor flavor, std::size_t weight,
                                  std::optional<int> max_degree = std::nullopt);
/// Basis words of one total suspended degree and any weight <= max_weight.
std::vector<Word> words_of_degree(const GradedSpace& space, Flavor flavor, int degree,
                                  std::size_t max_weight);

// --- square-zero checks ---------------------------------------------------------

struct Certificate {
    WeightCap range;
    std::size_t words_checked = 0;
};

struct Violation {
    std::string reason;
    Word word;
    Element value;
    std::string witness;
};

using CheckResult = std::variant<Certificate, Violation>;

inline bool passed(const CheckResult& r) { return std::holds_alternative<Certificate>(r); }

/// Evaluates d o d on every basis word within cap; the first nonzero output
/// is returned as a violation.
CheckResult check_square_zero(const Coderivation& d, const WeightCap& cap);

}  // namespace infhom
