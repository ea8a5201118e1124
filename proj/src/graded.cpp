#include "infhom/graded.hpp"

#include "infhom/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace infhom {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].degree < 0)
            throw ValidationError("negative degree for basis element '" + basis_[i].label + "'");
        if (!index_.emplace(basis_[i].label, i).second)
            throw ValidationError("duplicate basis label '" + basis_[i].label + "'");
    }
}

std::optional<std::size_t> GradedSpace::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GradedSpace::index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw ValidationError("unknown basis label '" + label + "'");
    return *i;
}

int GradedSpace::min_suspended_degree() const {
    int m = 1;
    bool first = true;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (first || suspended_degree(i) < m) m = suspended_degree(i);
        first = false;
    }
    return m;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ w.size();
    for (auto x : w) h = (h ^ x) * 0x100000001b3ULL;
    return h;
}

int word_degree(const GradedSpace& space, const Word& w) {
    int d = 0;
    for (auto i : w) d += space.suspended_degree(i);
    return d;
}

std::string format_word(const GradedSpace& space, const Word& w) {
    if (w.empty()) return "1";
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += space.label(w[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------

Element Element::single(Word w, Scalar c) {
    Element e;
    e.add(w, c);
    return e;
}

void Element::add(const Word& w, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Element::add(const Element& other, const Scalar& factor) {
    if (factor == 0) return;
    for (const auto& [w, c] : other.terms_) add(w, c * factor);
}

void Element::scale(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [w, v] : terms_) v *= c;
}

Scalar Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Element Element::weight_part(std::size_t weight) const {
    Element out;
    for (const auto& [w, c] : terms_)
        if (w.size() == weight) out.terms_.emplace(w, c);
    return out;
}

std::string format_element(const GradedSpace& space, const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << "*" << format_word(space, w);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto i : images_) {
        if (i >= images_.size() || seen[i]) throw ValidationError("not a permutation");
        seen[i] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
    auto p = identity(n).images_;
    std::swap(p[i], p[j]);
    return Permutation(std::move(p));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw ValidationError("composing permutations of different size");
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
    return Permutation(std::move(out));
}

int Permutation::sign() const {
    int s = 1;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (images_[i] > images_[j]) s = -s;
    return s;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
    std::vector<Permutation> out;
    auto p = identity(n).images_;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int koszul_sign(const Permutation& perm, std::span<const int> degrees) {
    if (perm.size() != degrees.size())
        throw ValidationError("koszul_sign: permutation and degree list differ in length");
    long exponent = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm(i) > perm(j)) exponent += static_cast<long>(degrees[i]) * degrees[j];
    return sign_of_parity(exponent);
}

Element act(const Permutation& perm, const Word& word, const GradedSpace& space) {
    if (perm.size() != word.size()) throw ValidationError("act: permutation size differs from word weight");
    std::vector<int> degrees;
    degrees.reserve(word.size());
    for (auto i : word) degrees.push_back(space.suspended_degree(i));
    Word out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) out[perm(i)] = word[i];
    return Element::single(std::move(out), Scalar(koszul_sign(perm, degrees)));
}

Element symmetrize(const Element& e, const GradedSpace& space) {
    Element out;
    std::map<std::size_t, std::vector<Permutation>> perms;
    for (const auto& [w, c] : e.terms()) {
        auto& group = perms[w.size()];
        if (group.empty()) group = Permutation::all(w.size());
        Scalar factor = c / Scalar(static_cast<long>(group.size()));
        for (const auto& p : group) out.add(act(p, w, space), factor);
    }
    return out;
}

std::vector<Permutation> shuffles(std::size_t p, std::size_t q) {
    std::vector<Permutation> out;
    for (const auto& first : subsets(p + q, p)) {
        // first[i] is the slot of the i-th element of the first block.
        std::vector<std::size_t> images(p + q);
        std::vector<bool> used(p + q, false);
        for (std::size_t i = 0; i < p; ++i) {
            images[i] = first[i];
            used[first[i]] = true;
        }
        std::size_t next = p;
        for (std::size_t slot = 0; slot < p + q; ++slot)
            if (!used[slot]) images[next++] = slot;
        out.emplace_back(std::move(images));
    }
    return out;
}

std::optional<std::pair<int, Word>> symmetric_normal_form(const GradedSpace& space, Word w) {
    // Insertion sort, tracking the sign of each adjacent transposition.
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
            if (space.suspended_degree(w[j - 1]) % 2 != 0 && space.suspended_degree(w[j]) % 2 != 0)
                sign = -sign;
            std::swap(w[j - 1], w[j]);
        }
    }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && space.suspended_degree(w[i]) % 2 != 0) return std::nullopt;
    return std::make_pair(sign, std::move(w));
}

bool is_symmetric_normal(const GradedSpace& space, const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] < w[i - 1]) return false;
        if (w[i] == w[i - 1] && space.suspended_degree(w[i]) % 2 != 0) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace infhom
