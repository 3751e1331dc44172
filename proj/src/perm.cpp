#include "braidforge/perm.hpp"

#include <cassert>
#include <numeric>

namespace braidforge {

Perm::Perm(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), uint8_t{0});
}

Perm Perm::transposition(int n, int i) {
    Perm p(n);
    assert(i >= 0 && i + 1 < n);
    std::swap(p.img_[i], p.img_[i + 1]);
    return p;
}

Perm Perm::longest(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p.img_[i] = static_cast<uint8_t>(n - 1 - i);
    return p;
}

Perm Perm::operator*(const Perm& b) const {
    assert(size() == b.size());
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = b.img_[img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

bool Perm::is_longest() const {
    const int n = size();
    for (int i = 0; i < n; ++i)
        if (img_[i] != n - 1 - i) return false;
    return true;
}

int Perm::length() const {
    int inv = 0;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

uint64_t Perm::descents() const {
    uint64_t d = 0;
    for (int i = 0; i + 1 < size(); ++i)
        if (img_[i] > img_[i + 1]) d |= (uint64_t{1} << i);
    return d;
}

uint64_t Perm::finishing_set() const {
    return inverse().descents();
}

Perm Perm::tau() const {
    const int n = size();
    Perm r;
    r.img_.resize(n);
    for (int i = 0; i < n; ++i) r.img_[n - 1 - i] = static_cast<uint8_t>(n - 1 - img_[i]);
    return r;
}

void Perm::append_crossing(int i) {
    // (this * t_i)(x) = t_i(this(x))
    for (auto& v : img_) {
        if (v == i) v = static_cast<uint8_t>(i + 1);
        else if (v == i + 1) v = static_cast<uint8_t>(i);
    }
}

void Perm::prepend_crossing(int i) {
    // (t_i * this)(x) = this(t_i(x))
    std::swap(img_[i], img_[i + 1]);
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm p = *this;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < p.size(); ++i) {
            if (p.img_[i] > p.img_[i + 1]) {
                // p = t_i * p', so emit sigma_i and continue with p' = t_i * p
                word.push_back(i + 1);
                std::swap(p.img_[i], p.img_[i + 1]);
                moved = true;
                break;
            }
        }
    }
    return word;
}

void Perm::append_to(std::string& out) const {
    out.append(reinterpret_cast<const char*>(img_.data()), img_.size());
}

}  // namespace braidforge
