#ifndef BRAIDFORGE_PERM_HPP
#define BRAIDFORGE_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace braidforge {

/// Permutation of {0..n-1}, also used as a permutation braid
/// (positive braid in which every pair of strands crosses at most once).
/// Composition is left-to-right: (a * b)(x) = b(a(x)), matching the way a
/// strand entering position x passes first through a, then through b.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);
    static Perm identity(int n) { return Perm(n); }
    static Perm transposition(int n, int i);  // swaps positions i, i+1 (0-based)
    static Perm longest(int n);               // w0, the permutation of Delta

    int size() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }

    Perm operator*(const Perm& b) const;  // left-to-right
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }

    bool is_identity() const;
    bool is_longest() const;

    /// Number of inversions = word length of the permutation braid.
    int length() const;

    /// Descent set of the permutation: bit i set iff img[i] > img[i+1].
    /// For a permutation braid A this is the starting set S(A).
    uint64_t descents() const;
    /// Starting set S(A) and finishing set F(A) = descents of the inverse.
    uint64_t starting_set() const { return descents(); }
    uint64_t finishing_set() const;

    /// tau(A) = Delta^-1 A Delta (flip i -> n-1-i on both sides).
    Perm tau() const;

    /// Post-compose with the transposition (i,i+1): append one crossing.
    void append_crossing(int i);
    /// Pre-compose with the transposition (i,i+1): strip one leading crossing.
    void prepend_crossing(int i);

    /// A reduced positive word for this permutation braid (generator
    /// indices, 1-based), leftmost letter first.
    std::vector<int> reduced_word() const;

    void append_to(std::string& out) const;

private:
    std::vector<uint8_t> img_;
};

}  // namespace braidforge

#endif
