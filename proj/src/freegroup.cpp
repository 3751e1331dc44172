#include "braidforge/freegroup.hpp"

#include <cstdlib>

namespace braidforge {

FreeWord::FreeWord(std::vector<int> letters) {
    letters_.reserve(letters.size());
    for (int l : letters) push(l);
}

void FreeWord::push(int letter) {
    if (letter == 0) throw braid_error("zero letter");
    if (!letters_.empty() && letters_.back() == -letter) {
        letters_.pop_back();
        return;
    }
    letters_.push_back(letter);
}

void FreeWord::push_word(const FreeWord& w) {
    for (int l : w.letters_) push(l);
}

FreeWord FreeWord::inverse() const {
    FreeWord r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
    return r;
}

FreeWord FreeWord::conjugated_by(const FreeWord& w) const {
    FreeWord r = w.inverse();
    r.push_word(*this);
    r.push_word(w);
    return r;
}

FreeWord FreeWord::cyclically_reduced() const {
    FreeWord r = *this;
    while (r.letters_.size() >= 2 && r.letters_.front() == -r.letters_.back()) {
        r.letters_.erase(r.letters_.begin());
        r.letters_.pop_back();
    }
    return r;
}

std::vector<long long> FreeWord::exponents(int n) const {
    std::vector<long long> e(n, 0);
    for (int l : letters_) {
        int g = std::abs(l) - 1;
        if (g >= n) throw braid_error("generator out of range in exponent vector");
        e[g] += (l > 0) ? 1 : -1;
    }
    return e;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    r.push_word(b);
    return r;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    r.push_word(b);
    r.push_word(a.inverse());
    r.push_word(b.inverse());
    return r;
}

FreeWord triple_relation(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    r.push_word(b);
    r.push_word(a);
    r.push_word(b.inverse());
    r.push_word(a.inverse());
    r.push_word(b.inverse());
    return r;
}

namespace {

// one letter sigma_k^{+-1} acting on a free word
FreeWord act_letter(int k, bool inv, const FreeWord& w) {
    FreeWord out;
    auto emit = [&](bool neg, std::vector<int> gens) {
        if (!neg) {
            for (int x : gens) out.push(x);
        } else {
            for (auto it = gens.rbegin(); it != gens.rend(); ++it) out.push(-*it);
        }
    };
    for (int l : w.letters()) {
        int g = std::abs(l);
        bool neg = l < 0;
        if (!inv) {
            if (g == k) emit(neg, {k, k + 1, -k});
            else if (g == k + 1) emit(neg, {k});
            else out.push(l);
        } else {
            if (g == k) emit(neg, {k + 1});
            else if (g == k + 1) emit(neg, {-(k + 1), k, k + 1});
            else out.push(l);
        }
    }
    return out;
}

}  // namespace

FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
    FreeWord out = w;
    for (int letter : b.letters()) out = act_letter(std::abs(letter), letter < 0, out);
    return out;
}

}  // namespace braidforge
