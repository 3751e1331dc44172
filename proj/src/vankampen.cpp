#include "braidforge/vankampen.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "braidforge/freegroup.hpp"

namespace braidforge {

LoopPair loop_pair(const BraidWord& v) {
    Perm p = v.permutation();
    int left = -1;
    for (int i = 0; i < p.size(); ++i)
        if (p[i] != i) {
            left = i;
            break;
        }
    if (left < 0) throw braid_error("factor permutation is trivial; no loop pair");
    // (A)V = B with B the left endpoint's generator
    LoopPair lp;
    lp.B = FreeWord::generator(left + 1);
    lp.A = artin_action(v.inverse(), lp.B);
    return lp;
}

std::vector<std::string> puncture_generator_names(const PunctureSet& K) {
    std::vector<std::string> names;
    names.reserve(K.count());
    for (const auto& l : K.labels())
        names.push_back("G" + std::to_string(l.base) + (l.primed ? "p" : ""));
    return names;
}

FPGroup vk_relations(const Factorization& f, bool projective, RelationStyle style) {
    FPGroup g;
    g.generators = puncture_generator_names(f.ambient);
    const int n = f.ambient.count();

    for (const auto& fac : f.factors) {
        if (fac.kind != Factor::Kind::half_twist_power || fac.exponent > 3)
            throw braid_error(
                "van Kampen input needs half-twist factors of exponent 1, 2 or 3");
        BraidWord v = fac.realized(f.ambient);
        if (style == RelationStyle::classified) {
            LoopPair lp = loop_pair(v);
            switch (fac.exponent) {
                case 1: g.add_relator(lp.A * lp.B.inverse()); break;
                case 2: g.add_relator(commutator(lp.A, lp.B)); break;
                case 3: g.add_relator(triple_relation(lp.A, lp.B)); break;
            }
        } else {
            BraidWord vnu = power(v, fac.exponent);
            for (int m = 1; m <= n; ++m) {
                FreeWord x = FreeWord::generator(m);
                FreeWord img = artin_action(vnu, x);
                if (img != x) g.add_relator(x.inverse() * img);
            }
        }
    }
    if (projective) {
        FreeWord all;
        for (int m = 1; m <= n; ++m) all.push(m);
        g.add_relator(all);
    }
    return g;
}

Perm PermutationRep::evaluate(const FreeWord& w) const {
    Perm p(sheet_count);
    for (int l : w.letters()) {
        const Perm& im = images.at(std::abs(l) - 1);
        p = p * (l > 0 ? im : im.inverse());
    }
    return p;
}

namespace {

bool transpositions_generate(const std::vector<Perm>& images, int sheets) {
    // connectivity of the graph whose edges are the transpositions
    std::vector<int> parent(sheets);
    for (int i = 0; i < sheets; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : images) {
        std::vector<int> moved;
        for (int i = 0; i < p.size(); ++i)
            if (p[i] != i) moved.push_back(i);
        for (size_t i = 1; i < moved.size(); ++i) {
            int a = find(moved[0]), b = find(moved[i]);
            if (a != b) parent[b] = a;
        }
    }
    int root = find(0);
    for (int i = 1; i < sheets; ++i)
        if (find(i) != root) return false;
    return true;
}

}  // namespace

MonodromyReport geometric_monodromy(const FPGroup& g, const IncidenceModel& m,
                                    const PunctureSet& K) {
    MonodromyReport rep;
    const int sheets = m.plane_count();
    rep.rep.sheet_count = sheets;
    for (const auto& l : K.labels()) {
        auto planes = m.planes_of_line(l.base);
        // transposition of the two planes glued along this line
        Perm tr(sheets);
        int a = std::min(planes[0], planes[1]);
        int b = std::max(planes[0], planes[1]);
        for (int i = b - 1; i >= a; --i) tr = tr * Perm::transposition(sheets, i);
        for (int i = a + 1; i < b; ++i) tr = tr * Perm::transposition(sheets, i);
        rep.rep.images.push_back(tr);
    }

    for (size_t i = 0; i < g.relators.size(); ++i) {
        if (!rep.rep.evaluate(g.relators[i]).is_identity()) {
            rep.all_relators_vanish = false;
            rep.failing_relators.push_back(i);
        }
    }
    rep.generates_symmetric_group = transpositions_generate(rep.rep.images, sheets);
    return rep;
}

FPGroup btilde_presentation(const FPGroup& base, const FreeWord& x, const FreeWord& y,
                            const PermutationRep& rep) {
    // transversal check: the permutations are transpositions with disjoint
    // supports is NOT transversal; they must share exactly one point
    Perm px = rep.evaluate(x);
    Perm py = rep.evaluate(y);
    auto support = [](const Perm& p) {
        std::vector<int> s;
        for (int i = 0; i < p.size(); ++i)
            if (p[i] != i) s.push_back(i);
        return s;
    };
    auto sx = support(px), sy = support(py);
    if (sx.size() != 2 || sy.size() != 2)
        throw braid_error("designated pair must map to transpositions");
    std::vector<int> inter;
    std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(inter));
    if (inter.size() != 1)
        throw braid_error("designated pair is not transversal: supports share " +
                          std::to_string(inter.size()) + " points");
    FPGroup g = base;
    g.add_relator(commutator(x, y));
    return g;
}

BtildeFrame btilde16_frame(const IncidenceModel& m) {
    BtildeFrame frame;
    // the published generator set: lines outside {1,3,5,8,11,12,16,17,22}
    const std::set<int> excluded{1, 3, 5, 8, 11, 12, 16, 17, 22};
    for (const auto& l : order_lines(m))
        if (!excluded.count(l.label)) frame.tree_lines.push_back(l.label);

    FPGroup g;
    std::map<int, int> gen_of_line;
    for (int t : frame.tree_lines) {
        gen_of_line[t] = static_cast<int>(g.generators.size()) + 1;
        g.generators.push_back("T" + std::to_string(t));
    }

    auto shares_plane = [&](int i, int j) {
        auto pi = m.planes_of_line(i);
        auto pj = m.planes_of_line(j);
        return pi[0] == pj[0] || pi[0] == pj[1] || pi[1] == pj[0] || pi[1] == pj[1];
    };

    for (size_t i = 0; i < frame.tree_lines.size(); ++i) {
        for (size_t j = i + 1; j < frame.tree_lines.size(); ++j) {
            int li = frame.tree_lines[i], lj = frame.tree_lines[j];
            FreeWord a = FreeWord::generator(gen_of_line[li]);
            FreeWord b = FreeWord::generator(gen_of_line[lj]);
            if (shares_plane(li, lj))
                g.add_relator(triple_relation(a, b));
            else
                g.add_relator(commutator(a, b));
        }
    }
    // the star relator at the unique degree-3 tree vertex: [T9, T24 T21 T24^-1]
    {
        FreeWord t9 = FreeWord::generator(gen_of_line.at(9));
        FreeWord t21 = FreeWord::generator(gen_of_line.at(21));
        FreeWord t24 = FreeWord::generator(gen_of_line.at(24));
        g.add_relator(commutator(t9, t21.conjugated_by(t24.inverse())));
    }
    frame.presentation = g;

    // the defining words of the missing generators (published); later
    // definitions may use earlier ones
    auto T = [&](int line) { return FreeWord::generator(gen_of_line.at(line)); };
    auto conj = [](const FreeWord& x, const FreeWord& w) { return x.conjugated_by(w); };
    std::map<int, FreeWord> defs;
    defs[8] = conj(T(10), T(7).inverse() * T(9).inverse() * T(24));
    defs[12] = conj(T(6), defs[8].inverse() * T(20).inverse() * T(2));
    defs[11] = conj(T(14), defs[12] * T(13) * T(19).inverse());
    defs[22] = conj(T(24), T(20) * T(21) * T(23));
    defs[3] = conj(T(4), T(18).inverse() * T(23).inverse());
    defs[17] = conj(T(2), defs[22] * defs[3].inverse() * T(4));
    defs[16] = conj(defs[17], T(19).inverse() * T(15) * T(18));
    defs[5] = conj(T(6), T(10).inverse() * T(14).inverse());
    defs[1] = conj(defs[5], T(7).inverse() * T(11).inverse() * T(15).inverse());
    frame.missing_definitions = std::move(defs);
    return frame;
}

}  // namespace braidforge
