#include "braidforge/normal_form.hpp"

#include <bit>
#include <cstdlib>
#include <deque>

namespace braidforge {

namespace {

// Makes the pair (a, b) left-weighted: slides crossings from the head of b
// into the tail of a until S(b) is contained in F(a). Returns true if the
// pair changed.
bool fix_pair(Perm& a, Perm& b) {
    bool changed = false;
    while (true) {
        uint64_t moves = b.starting_set() & ~a.finishing_set();
        if (moves == 0) break;
        int i = std::countr_zero(moves);
        a.append_crossing(i);
        b.prepend_crossing(i);
        changed = true;
    }
    return changed;
}

// Left-weights the whole positive factor list with a worklist of unstable
// adjacent pairs. Identity factors are removed afterwards.
void normalize_factors(std::vector<Perm>& f) {
    if (f.empty()) return;
    std::vector<int> work;
    work.reserve(f.size());
    for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i) work.push_back(i);
    std::vector<uint8_t> queued(f.size(), 0);
    for (int i : work) queued[i] = 1;
    while (!work.empty()) {
        int i = work.back();
        work.pop_back();
        queued[i] = 0;
        if (i + 1 >= static_cast<int>(f.size())) continue;
        if (fix_pair(f[i], f[i + 1])) {
            if (i > 0 && !queued[i - 1]) { work.push_back(i - 1); queued[i - 1] = 1; }
            if (i + 2 < static_cast<int>(f.size()) && !queued[i + 1]) {
                work.push_back(i + 1);
                queued[i + 1] = 1;
            }
        }
    }
    size_t out = 0;
    for (size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_identity()) {
            if (out != i) f[out] = std::move(f[i]);
            ++out;
        }
    f.resize(out);
}

}  // namespace

NormalForm::NormalForm(const BraidWord& w) : strands_(w.strands()), inf_(0) {
    const int n = strands_;
    const auto& letters = w.letters();

    // Count negative letters after each position so each positive factor can
    // absorb the tau twists of the Delta^-1's that will migrate past it.
    int total_neg = 0;
    for (int l : letters)
        if (l < 0) ++total_neg;

    const Perm w0 = Perm::longest(n);
    std::vector<Perm> factors;
    factors.reserve(letters.size());
    int neg_after = total_neg;
    for (int l : letters) {
        Perm p;
        if (l > 0) {
            p = Perm::transposition(n, l - 1);
        } else {
            --neg_after;
            // sigma_k^-1 = Delta^-1 · (Delta sigma_k^-1)
            p = w0;
            p.append_crossing(-l - 1);
        }
        if ((neg_after & 1) != 0) p = p.tau();
        if (!p.is_identity()) factors.push_back(std::move(p));
    }
    inf_ = -total_neg;

    normalize_factors(factors);

    size_t lead = 0;
    while (lead < factors.size() && factors[lead].is_longest()) ++lead;
    inf_ += static_cast<long long>(lead);
    factors.erase(factors.begin(), factors.begin() + lead);
    factors_ = std::move(factors);
}

long long NormalForm::degree() const {
    long long d = inf_ * (static_cast<long long>(strands_) * (strands_ - 1) / 2);
    for (const auto& p : factors_) d += p.length();
    return d;
}

std::string NormalForm::key() const {
    std::string s;
    s.reserve(16 + factors_.size() * strands_);
    s.append(reinterpret_cast<const char*>(&strands_), sizeof(strands_));
    s.append(reinterpret_cast<const char*>(&inf_), sizeof(inf_));
    for (const auto& p : factors_) p.append_to(s);
    return s;
}

BraidWord NormalForm::to_word() const {
    BraidWord r(strands_);
    const BraidWord d = delta_word(strands_);
    const BraidWord di = d.inverse();
    for (long long i = 0; i < std::llabs(inf_); ++i) r.push_word(inf_ > 0 ? d : di);
    for (const auto& p : factors_)
        for (int k : p.reduced_word()) r.push(k);
    return r;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) return false;
    return NormalForm(a) == NormalForm(b);
}

}  // namespace braidforge
