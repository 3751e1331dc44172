#include "braidforge/disk.hpp"

#include <algorithm>

namespace braidforge {

PunctureSet PunctureSet::base(int n) {
    std::vector<Label> ls;
    ls.reserve(n);
    for (int i = 1; i <= n; ++i) ls.push_back(lab(i));
    return PunctureSet(std::move(ls));
}

PunctureSet PunctureSet::doubled(int n) {
    std::vector<Label> ls;
    ls.reserve(2 * n);
    for (int i = 1; i <= n; ++i) {
        ls.push_back(lab(i));
        ls.push_back(lab(i, true));
    }
    PunctureSet k(std::move(ls));
    return k;
}

PunctureSet::PunctureSet(std::vector<Label> labels) : labels_(std::move(labels)) {
    doubled_ = false;
    for (const auto& l : labels_)
        if (l.primed) { doubled_ = true; break; }
    if (doubled_) {
        // i' must sit immediately to the right of i
        for (size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].primed) {
                if (i == 0 || labels_[i - 1].base != labels_[i].base || labels_[i - 1].primed)
                    throw braid_error("doubled label " + labels_[i].str() +
                                      " is not adjacent to its partner");
            }
        }
    }
}

int PunctureSet::base_count() const {
    return doubled_ ? count() / 2 : count();
}

int PunctureSet::position(const Label& l) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == l) return static_cast<int>(i) + 1;
    throw braid_error("label " + l.str() + " not in puncture set");
}

bool PunctureSet::contains(const Label& l) const {
    return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
}

bool PathSpec::operator==(const PathSpec& o) const {
    if (!(from == o.from) || !(to == o.to) || base_side != o.base_side ||
        detours.size() != o.detours.size())
        return false;
    for (size_t i = 0; i < detours.size(); ++i)
        if (!(detours[i].lo == o.detours[i].lo) || !(detours[i].hi == o.detours[i].hi) ||
            detours[i].side != o.detours[i].side)
            return false;
    return true;
}

std::string PathSpec::str() const {
    std::string s = (base_side == Side::below ? "Z[" : "Zbar[") + from.str() + "," + to.str() + "]";
    for (const auto& d : detours)
        s += " det(" + d.lo.str() + "-" + d.hi.str() + "," +
             (d.side == Side::above ? "above" : "below") + ")";
    return s;
}

std::vector<std::pair<int, Side>> side_schedule(const PathSpec& p, const PunctureSet& K) {
    int a = K.position(p.from);
    int b = K.position(p.to);
    if (a == b) throw braid_error("path endpoints coincide");
    if (a > b) std::swap(a, b);

    std::vector<std::pair<int, Side>> sched;
    for (int q = a + 1; q < b; ++q) sched.emplace_back(q, p.base_side);

    // Detours resolved innermost-first: wider ranges applied before narrower
    // ones so the inner annotation wins; equal widths keep input order, the
    // later annotation winning on overlaps.
    std::vector<Detour> ds = p.detours;
    std::stable_sort(ds.begin(), ds.end(), [&](const Detour& x, const Detour& y) {
        int wx = K.position(x.hi) - K.position(x.lo);
        int wy = K.position(y.hi) - K.position(y.lo);
        return wx > wy;
    });
    for (const auto& d : ds) {
        int lo = K.position(d.lo);
        int hi = K.position(d.hi);
        if (lo > hi) std::swap(lo, hi);
        if (lo <= a || hi >= b)
            throw braid_error("detour range " + d.lo.str() + "-" + d.hi.str() +
                              " not strictly between path endpoints of " + p.str());
        for (auto& [q, s] : sched)
            if (q >= lo && q <= hi) s = d.side;
    }
    return sched;
}

HalfTwist compile_path(const PathSpec& p, const PunctureSet& K) {
    int a = K.position(p.from);
    int b = K.position(p.to);
    if (a > b) std::swap(a, b);
    auto sched = side_schedule(p, K);

    const int n = K.count();
    BraidWord w(n);
    // conjugating descent, rightmost passage first; a counterclockwise
    // half-twist drags a path endpoint below its neighbour with a negative
    // crossing, so below-passages carry the inverse generator
    for (auto it = sched.rbegin(); it != sched.rend(); ++it)
        w.push(it->second == Side::below ? -it->first : it->first);
    BraidWord word = w;
    word.push(a);
    word.push_word(w.inverse());
    return HalfTwist{p, std::move(word)};
}

PunctureSet double_set(const PunctureSet& K) {
    if (K.is_doubled()) throw braid_error("puncture set is already doubled");
    std::vector<Label> ls;
    ls.reserve(2 * K.count());
    for (const auto& l : K.labels()) {
        ls.push_back(l);
        ls.push_back(lab(l.base, true));
    }
    return PunctureSet(std::move(ls));
}

PathSpec lift_path(const PathSpec& p) {
    PathSpec r = p;
    // widen each range to cover both members of the doubled pair at its
    // right end; the left end's partner lies inside the range already
    for (auto& d : r.detours) d.hi.primed = true;
    return r;
}

}  // namespace braidforge
