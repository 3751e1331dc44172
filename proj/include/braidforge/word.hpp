#ifndef BRAIDFORGE_WORD_HPP
#define BRAIDFORGE_WORD_HPP

#include <stdexcept>
#include <vector>

#include "braidforge/perm.hpp"

namespace braidforge {

struct braid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A word in the signed Artin generators of B_n. Letters are +k / -k for
/// sigma_k^{+-1}, k in [1, n-1]. Words are kept freely reduced; adjacent
/// inverse pairs are cancelled eagerly on construction and composition.
class BraidWord {
public:
    BraidWord() : strands_(1) {}
    explicit BraidWord(int strands) : strands_(strands) {
        if (strands < 1) throw braid_error("strand count must be positive");
    }
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }

    /// Append one letter with free reduction against the current suffix.
    void push(int letter);
    void push_word(const BraidWord& w);

    BraidWord inverse() const;
    /// Exponent sum; invariant under free reduction and conjugation.
    long long degree() const;
    Perm permutation() const;

private:
    int strands_;
    std::vector<int> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
/// w^-1 x w; the single convention for both (X)_W and X^W.
BraidWord conjugate(const BraidWord& x, const BraidWord& w);
BraidWord power(const BraidWord& w, int e);
/// Delta^2 = (sigma_1 ... sigma_{n-1})^n, the generator of the center.
BraidWord full_twist(int n);
/// Half-twist word of Delta (positive, length n(n-1)/2).
BraidWord delta_word(int n);

}  // namespace braidforge

#endif
