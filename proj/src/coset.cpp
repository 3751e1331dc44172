#include "braidforge/coset.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>

namespace braidforge {

namespace {

// Coset table over the alphabet x_1, x_1^-1, ..., x_n, x_n^-1 with
// union-find coincidence handling.
class Enumerator {
public:
    Enumerator(const FPGroup& g, const std::vector<FreeWord>& subgens, size_t limit)
        : ngens_(static_cast<int>(g.generators.size())), limit_(limit), subgens_(subgens) {
        for (const auto& r : g.relators) relators_.push_back(r.letters());
        new_coset();  // coset 0 = the subgroup
    }

    CosetResult run() {
        CosetResult res;
        // subgroup generators close at coset 0
        for (const auto& w : subgens_)
            if (!scan_and_close(0, w.letters())) return exceeded(res);

        for (size_t c = 0; c < cosets(); ++c) {
            c = skip_dead(c);
            if (c >= cosets()) break;
            for (const auto& rel : relators_)
                if (!scan_and_close(static_cast<int>(c), rel)) return exceeded(res);
            process_coincidences();
            // fill empty slots so the scan eventually defines everything
            for (int a = 0; a < 2 * ngens_; ++a) {
                int cc = find(static_cast<int>(c));
                if (table_[cc][a] < 0) {
                    if (!define(cc, a)) return exceeded(res);
                }
            }
            if (live_count() > limit_) return exceeded(res);
        }

        compress();
        res.status = CosetResult::Status::finished;
        res.index = static_cast<long long>(table_.size());
        res.cosets_defined = defined_total_;
        res.table = table_;
        res.certified = verify();
        if (!res.certified) throw braid_error("internal error: coset table failed verification");
        return res;
    }

private:
    int ngens_;
    size_t limit_;
    std::vector<FreeWord> subgens_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> table_;   // -1 = undefined
    std::vector<int> parent_;               // union-find
    std::deque<std::pair<int, int>> pending_;
    size_t defined_total_ = 0;

    size_t cosets() const { return table_.size(); }

    static int slot(int letter) {
        int g = std::abs(letter);
        return 2 * (g - 1) + (letter < 0 ? 1 : 0);
    }
    static int inv_slot(int letter) { return slot(-letter); }

    int new_coset() {
        table_.emplace_back(2 * ngens_, -1);
        parent_.push_back(static_cast<int>(table_.size()) - 1);
        ++defined_total_;
        return static_cast<int>(table_.size()) - 1;
    }

    int find(int c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    size_t live_count() const {
        size_t n = 0;
        for (size_t i = 0; i < parent_.size(); ++i)
            if (parent_[i] == static_cast<int>(i)) ++n;
        return n;
    }

    size_t skip_dead(size_t c) {
        while (c < cosets() && find(static_cast<int>(c)) != static_cast<int>(c)) ++c;
        return c;
    }

    void set_entry(int c, int a, int d) {
        c = find(c);
        d = find(d);
        int ai = a ^ 1;  // inverse letter slot of the same generator
        int old = table_[c][a];
        if (old >= 0 && find(old) != d) {
            pending_.emplace_back(find(old), d);
        } else {
            table_[c][a] = d;
        }
        int oldback = table_[d][ai];
        if (oldback >= 0 && find(oldback) != c) {
            pending_.emplace_back(find(oldback), c);
        } else {
            table_[d][ai] = c;
        }
    }

    bool define(int c, int a) {
        if (live_count() >= limit_) return false;
        int d = new_coset();
        set_entry(c, a, d);
        process_coincidences();
        return true;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        for (int s = 0; s < 2 * ngens_; ++s) {
            int t = table_[b][s];
            if (t >= 0) {
                if (table_[a][s] < 0) {
                    set_entry(a, s, find(t));
                } else {
                    pending_.emplace_back(find(table_[a][s]), find(t));
                }
            }
            table_[b][s] = -1;
        }
    }

    void process_coincidences() {
        while (!pending_.empty()) {
            auto [x, y] = pending_.front();
            pending_.pop_front();
            merge(x, y);
        }
    }

    // scans the word at coset c, defining cosets until the cycle closes
    bool scan_and_close(int c, const std::vector<int>& word) {
        while (true) {
            int base = find(c);
            int front = base;
            size_t i = 0;
            while (i < word.size()) {
                int next = table_[find(front)][slot(word[i])];
                if (next < 0) break;
                front = find(next);
                ++i;
            }
            if (i == word.size()) {
                if (front != base) {
                    pending_.emplace_back(front, base);
                    process_coincidences();
                }
                return true;
            }
            int back = base;
            size_t j = word.size();
            while (j > i) {
                int prev = table_[find(back)][inv_slot(word[j - 1])];
                if (prev < 0) break;
                back = find(prev);
                --j;
            }
            if (j == i) {
                // the scans met: the boundary cosets coincide
                if (find(front) != find(back)) {
                    pending_.emplace_back(find(front), find(back));
                    process_coincidences();
                }
                return true;
            }
            if (j == i + 1) {
                // one gap: deduction
                set_entry(find(front), slot(word[i]), find(back));
                process_coincidences();
                return true;
            }
            if (!define(find(front), slot(word[i]))) return false;
        }
    }

    void compress() {
        std::vector<int> remap(cosets(), -1);
        int next = 0;
        for (size_t i = 0; i < cosets(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) remap[i] = next++;
        std::vector<std::vector<int>> packed(next, std::vector<int>(2 * ngens_, -1));
        for (size_t i = 0; i < cosets(); ++i) {
            if (remap[i] < 0) continue;
            for (int s = 0; s < 2 * ngens_; ++s) {
                int t = table_[i][s];
                packed[remap[i]][s] = t < 0 ? -1 : remap[find(t)];
            }
        }
        table_ = std::move(packed);
    }

    bool verify() const {
        for (const auto& row : table_)
            for (int v : row)
                if (v < 0 || v >= static_cast<int>(table_.size())) return false;
        auto trace = [&](int c, const std::vector<int>& w) {
            for (int letter : w) c = table_[c][slot(letter)];
            return c;
        };
        for (const auto& rel : relators_)
            for (size_t c = 0; c < table_.size(); ++c)
                if (trace(static_cast<int>(c), rel) != static_cast<int>(c)) return false;
        for (const auto& s : subgens_)
            if (trace(0, s.letters()) != 0) return false;
        // inverse consistency
        for (size_t c = 0; c < table_.size(); ++c)
            for (int g = 1; g <= ngens_; ++g) {
                int d = table_[c][slot(g)];
                if (table_[d][slot(-g)] != static_cast<int>(c)) return false;
            }
        return true;
    }

    CosetResult exceeded(CosetResult res) {
        res.status = CosetResult::Status::exceeded;
        res.cosets_defined = defined_total_;
        return res;
    }
};

}  // namespace

CosetResult todd_coxeter(const FPGroup& g, const std::vector<FreeWord>& subgroup_gens,
                         size_t limit) {
    if (g.generators.empty()) {
        CosetResult res;
        res.status = CosetResult::Status::finished;
        res.index = 1;
        res.cosets_defined = 1;
        res.certified = true;
        res.table = {{}};
        return res;
    }
    Enumerator e(g, subgroup_gens, limit);
    return e.run();
}

}  // namespace braidforge
