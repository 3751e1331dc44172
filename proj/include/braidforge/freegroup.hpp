#ifndef BRAIDFORGE_FREEGROUP_HPP
#define BRAIDFORGE_FREEGROUP_HPP

#include <string>
#include <vector>

#include "braidforge/word.hpp"

namespace braidforge {

/// Freely reduced word in abstract generators 1..n (letters +-g).
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<int> letters);
    static FreeWord generator(int g) { return FreeWord({g}); }

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }

    void push(int letter);
    void push_word(const FreeWord& w);
    FreeWord inverse() const;
    FreeWord conjugated_by(const FreeWord& w) const;  // w^-1 x w
    FreeWord cyclically_reduced() const;

    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const FreeWord& o) const { return letters_ != o.letters_; }
    bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

    /// Exponent vector over n generators.
    std::vector<long long> exponents(int n) const;

private:
    std::vector<int> letters_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);
FreeWord commutator(const FreeWord& a, const FreeWord& b);        // aba^-1b^-1
FreeWord triple_relation(const FreeWord& a, const FreeWord& b);   // abab^-1a^-1b^-1

/// The Artin action of B_n on the free group F_n, one free generator per
/// puncture: sigma_k sends x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k, and
/// fixes the rest; inverse letters act by the inverse substitution. The
/// braid word acts letter by letter, left to right.
FreeWord artin_action(const BraidWord& b, const FreeWord& w);

}  // namespace braidforge

#endif
