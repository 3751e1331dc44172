#ifndef BRAIDFORGE_NORMAL_FORM_HPP
#define BRAIDFORGE_NORMAL_FORM_HPP

#include <string>
#include <vector>

#include "braidforge/word.hpp"

namespace braidforge {

/// Garside left normal form Delta^inf · A_1 ... A_len with left-weighted
/// permutation-braid canonical factors (none equal to Delta or the
/// identity). Two words are equal in B_n iff their normal forms coincide,
/// which is the equality oracle used throughout.
class NormalForm {
public:
    NormalForm() : strands_(1), inf_(0) {}
    explicit NormalForm(const BraidWord& w);

    int strands() const { return strands_; }
    long long infimum() const { return inf_; }
    const std::vector<Perm>& factors() const { return factors_; }
    int canonical_length() const { return static_cast<int>(factors_.size()); }

    bool is_identity() const { return inf_ == 0 && factors_.empty(); }
    long long degree() const;

    bool operator==(const NormalForm& o) const {
        return strands_ == o.strands_ && inf_ == o.inf_ && factors_ == o.factors_;
    }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }

    /// Compact byte key for hashing (orbit deduplication).
    std::string key() const;

    BraidWord to_word() const;

private:
    int strands_;
    long long inf_;
    std::vector<Perm> factors_;
};

bool braid_equal(const BraidWord& a, const BraidWord& b);

}  // namespace braidforge

#endif
