#include "braidforge/word.hpp"

#include <cstdlib>

namespace braidforge {

BraidWord::BraidWord(int strands, std::vector<int> letters) : BraidWord(strands) {
    letters_.reserve(letters.size());
    for (int l : letters) push(l);
}

void BraidWord::push(int letter) {
    const int k = std::abs(letter);
    if (k < 1 || k >= strands_) throw braid_error("generator index out of range");
    if (!letters_.empty() && letters_.back() == -letter) {
        letters_.pop_back();
        return;
    }
    letters_.push_back(letter);
}

void BraidWord::push_word(const BraidWord& w) {
    if (w.strands_ != strands_) throw braid_error("mismatched strand counts");
    for (int l : w.letters_) push(l);
}

BraidWord BraidWord::inverse() const {
    BraidWord r(strands_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
    return r;
}

long long BraidWord::degree() const {
    long long d = 0;
    for (int l : letters_) d += (l > 0) ? 1 : -1;
    return d;
}

Perm BraidWord::permutation() const {
    Perm p(strands_);
    for (int l : letters_) p.append_crossing(std::abs(l) - 1);
    return p;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw braid_error("mismatched strand counts");
    BraidWord r = a;
    r.push_word(b);
    return r;
}

BraidWord conjugate(const BraidWord& x, const BraidWord& w) {
    if (x.strands() != w.strands()) throw braid_error("mismatched strand counts");
    BraidWord r = w.inverse();
    r.push_word(x);
    r.push_word(w);
    return r;
}

BraidWord power(const BraidWord& w, int e) {
    BraidWord r(w.strands());
    const BraidWord& base = (e >= 0) ? w : w.inverse();
    for (int i = 0; i < std::abs(e); ++i) r.push_word(base);
    return r;
}

BraidWord full_twist(int n) {
    if (n < 2) throw braid_error("full twist needs n >= 2");
    BraidWord r(n);
    for (int rep = 0; rep < n; ++rep)
        for (int k = 1; k < n; ++k) r.push(k);
    return r;
}

BraidWord delta_word(int n) {
    BraidWord r(n);
    for (int j = 1; j < n; ++j)
        for (int k = j; k >= 1; --k) r.push(k);
    return r;
}

}  // namespace braidforge
