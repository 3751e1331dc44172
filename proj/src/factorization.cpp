#include "braidforge/factorization.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>

namespace braidforge {

BraidWord sub_full_twist_word(const std::vector<Label>& support, const PunctureSet& K) {
    if (support.size() < 2) throw braid_error("sub-disk full twist needs >= 2 punctures");
    std::vector<int> pos;
    pos.reserve(support.size());
    for (const auto& l : support) pos.push_back(K.position(l));
    std::sort(pos.begin(), pos.end());

    const int n = K.count();
    const int m = static_cast<int>(pos.size());
    // gather the punctures into consecutive positions starting at pos[0],
    // sliding each one leftward below the axis
    BraidWord gather(n);
    for (int i = 1; i < m; ++i) {
        int target = pos[0] + i;
        for (int q = pos[i] - 1; q >= target; --q) gather.push(q);
    }
    // full twist on the consecutive block [pos0, pos0+m-1]
    BraidWord twist(n);
    for (int rep = 0; rep < m; ++rep)
        for (int k = pos[0]; k < pos[0] + m - 1; ++k) twist.push(k);

    BraidWord r = gather;
    r.push_word(twist);
    r.push_word(gather.inverse());
    return r;
}

BraidWord Factor::base_word(const PunctureSet& K) const {
    if (kind == Kind::sub_full_twist) {
        BraidWord w = sub_full_twist_word(twist_support, K);
        return power(w, exponent);
    }
    HalfTwist h = compile_path(path, K);
    return power(h.word, exponent);
}

BraidWord Factor::realized(const PunctureSet& K) const {
    BraidWord base = base_word(K);
    if (conjugator.empty()) return base;
    return conjugate(base, conjugator);
}

long long Factor::degree() const {
    if (kind == Kind::sub_full_twist) {
        long long m = static_cast<long long>(twist_support.size());
        return exponent * m * (m - 1);
    }
    return exponent;
}

BraidWord Factorization::product() const {
    BraidWord r(ambient.count());
    for (const auto& f : factors) r.push_word(f.realized(ambient));
    return r;
}

long long Factorization::total_degree() const {
    long long d = 0;
    for (const auto& f : factors) d += f.degree();
    return d;
}

Perm Factorization::product_permutation() const {
    Perm p(ambient.count());
    for (const auto& f : factors) p = p * f.realized(ambient).permutation();
    return p;
}

namespace {

BraidWord conjugator_of(const Factor& f, int strands) {
    return f.conjugator.empty() ? BraidWord(strands) : f.conjugator;
}

}  // namespace

Factorization hurwitz_move(const Factorization& f, int k, Direction dir) {
    if (k < 1 || k >= static_cast<int>(f.factors.size()))
        throw braid_error("hurwitz move index out of range");
    const int n = f.ambient.count();
    Factorization r = f;
    Factor& a = r.factors[k - 1];
    Factor& b = r.factors[k];
    if (dir == Direction::forward) {
        // (t_k, t_{k+1}) -> (t_k t_{k+1} t_k^-1, t_k)
        BraidWord tk = a.realized(f.ambient);
        Factor moved = b;
        moved.conjugator = compose(conjugator_of(b, n), tk.inverse());
        b = a;
        a = std::move(moved);
    } else {
        // (t_k, t_{k+1}) -> (t_{k+1}, t_{k+1}^-1 t_k t_{k+1})
        BraidWord tk1 = b.realized(f.ambient);
        Factor moved = a;
        moved.conjugator = compose(conjugator_of(a, n), tk1);
        a = b;
        b = std::move(moved);
    }
    return r;
}

BmfReport verify_bmf(const Factorization& f, size_t nf_letter_budget) {
    BmfReport rep;
    const long long n = f.ambient.count();
    rep.total_degree = f.total_degree();
    rep.expected_degree = n * (n - 1);
    rep.degree_ok = rep.total_degree == rep.expected_degree;
    rep.permutation_ok = f.product_permutation().is_identity();

    BraidWord prod = f.product();
    if (nf_letter_budget != 0 && prod.size() > nf_letter_budget) {
        rep.delta_squared = CheckStatus::unavailable;
    } else {
        rep.delta_squared = braid_equal(prod, full_twist(f.ambient.count()))
                                ? CheckStatus::pass
                                : CheckStatus::fail;
    }
    return rep;
}

AuditReport degree_audit(const Factorization& f) {
    AuditReport rep;
    std::unordered_map<std::string, size_t> index;
    for (const auto& fac : f.factors) {
        auto [it, fresh] = index.try_emplace(fac.group, rep.rows.size());
        if (fresh) rep.rows.push_back(AuditRow{fac.group, 0, 0});
        AuditRow& row = rep.rows[it->second];
        row.factor_count += 1;
        row.degree += fac.degree();
        rep.total += fac.degree();
    }
    return rep;
}

BraidWord forget_strands(const BraidWord& w, const std::vector<int>& keep_positions) {
    const int n = w.strands();
    std::vector<int> kept(n + 1, 0);  // 1-based positions
    for (int p : keep_positions) {
        if (p < 1 || p > n) throw braid_error("keep position out of range");
        kept[p] = 1;
    }
    const int m = static_cast<int>(keep_positions.size());
    if (m == 0) throw braid_error("empty keep set");

    // strand_at[pos] = starting position of the strand currently at pos
    std::vector<int> strand_at(n + 1);
    for (int i = 1; i <= n; ++i) strand_at[i] = i;

    BraidWord out(m);
    for (int letter : w.letters()) {
        int k = std::abs(letter);
        int s1 = strand_at[k], s2 = strand_at[k + 1];
        if (kept[s1] && kept[s2]) {
            // position of the crossing among kept strands: count kept strands
            // strictly left of position k+1
            int r = 0;
            for (int i = 1; i <= k; ++i)
                if (kept[strand_at[i]]) ++r;
            out.push(letter > 0 ? r : -r);
        }
        std::swap(strand_at[k], strand_at[k + 1]);
    }
    return out;
}

BraidWord forget_strands(const BraidWord& w, const PunctureSet& K,
                         const std::vector<Label>& keep) {
    std::vector<int> pos;
    pos.reserve(keep.size());
    for (const auto& l : keep) pos.push_back(K.position(l));
    return forget_strands(w, pos);
}

Factorization conjugate_factorization(const Factorization& f, const BraidWord& h) {
    Factorization r = f;
    for (auto& fac : r.factors)
        fac.conjugator = compose(conjugator_of(fac, f.ambient.count()), h);
    return r;
}

namespace {

std::string state_key(const Factorization& f) {
    std::string s;
    for (const auto& fac : f.factors) {
        NormalForm nf(fac.realized(f.ambient));
        s += nf.key();
        s.push_back(static_cast<char>(fac.exponent));
        s.push_back('|');
    }
    return s;
}

struct BfsNode {
    Factorization state;
    int parent = -1;
    int move = 0;
};

// Breadth-first expansion over Hurwitz moves; stops when `found` matches or
// the budget is exhausted. Returns the index of the matching node or -1.
int bfs(const Factorization& start, const std::string& target_key, size_t budget,
        std::vector<BfsNode>& nodes, size_t& visited) {
    std::unordered_map<std::string, int> seen;
    nodes.clear();
    nodes.push_back(BfsNode{start, -1, 0});
    std::string k0 = state_key(start);
    seen.emplace(k0, 0);
    visited = 1;
    if (!target_key.empty() && k0 == target_key) return 0;

    std::deque<int> queue{0};
    const int nmoves = static_cast<int>(start.factors.size()) - 1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int k = 1; k <= nmoves; ++k) {
            for (Direction dir : {Direction::forward, Direction::inverse}) {
                if (visited >= budget) return -1;
                Factorization next = hurwitz_move(nodes[cur].state, k, dir);
                std::string key = state_key(next);
                auto [it, fresh] = seen.emplace(key, static_cast<int>(nodes.size()));
                if (!fresh) continue;
                nodes.push_back(BfsNode{std::move(next), cur,
                                        dir == Direction::forward ? k : -k});
                ++visited;
                if (!target_key.empty() && key == target_key)
                    return static_cast<int>(nodes.size()) - 1;
                queue.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
    }
    return -1;
}

}  // namespace

OrbitResult orbit_search(const Factorization& f, size_t budget) {
    std::vector<BfsNode> nodes;
    OrbitResult r;
    bfs(f, std::string(), budget, nodes, r.states_visited);
    r.budget_exhausted = r.states_visited >= budget;
    return r;
}

EquivalenceResult equivalent(const Factorization& f1, const Factorization& f2, size_t budget) {
    EquivalenceResult r;
    if (f1.ambient.count() != f2.ambient.count())
        throw braid_error("factorizations live in different ambients");
    std::vector<BfsNode> nodes;
    int hit = bfs(f1, state_key(f2), budget, nodes, r.states_visited);
    if (hit < 0) return r;

    std::vector<int> moves;
    for (int i = hit; i > 0; i = nodes[i].parent) moves.push_back(nodes[i].move);
    std::reverse(moves.begin(), moves.end());

    // replay-verify the certificate
    Factorization check = f1;
    for (int mv : moves)
        check = hurwitz_move(check, std::abs(mv), mv > 0 ? Direction::forward : Direction::inverse);
    if (state_key(check) != state_key(f2))
        throw braid_error("internal error: certificate failed replay");
    r.status = EquivalenceResult::Status::equivalent;
    r.certificate = std::move(moves);
    return r;
}

InvarianceResult invariance_check(const Factorization& f, const BraidWord& h, size_t budget) {
    InvarianceResult r;
    Factorization fh = conjugate_factorization(f, h);
    EquivalenceResult eq = equivalent(fh, f, budget);
    r.states_visited = eq.states_visited;
    if (eq.status == EquivalenceResult::Status::equivalent) {
        r.status = InvarianceResult::Status::invariant;
        r.certificate = eq.certificate;
    }
    return r;
}

}  // namespace braidforge
