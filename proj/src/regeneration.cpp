#include "braidforge/regeneration.hpp"

#include <algorithm>
#include <sstream>

#include "braidforge/dataset.hpp"
#include "braidforge/dsl.hpp"

namespace braidforge {

BraidWord object_twist_word(const PathSpec& p, const PunctureSet& K,
                            const std::vector<int>& bundle_labels) {
    auto is_bundled = [&](const Label& l) {
        if (l.primed) return false;
        for (int b : bundle_labels)
            if (b == l.base) return K.contains(Label{l.base, true});
        return false;
    };
    Label from = p.from, to = p.to;
    if (K.position(from) > K.position(to)) std::swap(from, to);
    int a_left = K.position(from);
    int a_size = is_bundled(from) ? 2 : 1;
    int b_left = K.position(to);
    int b_size = is_bundled(to) ? 2 : 1;
    if (a_left + a_size > b_left) throw braid_error("bundles overlap in object twist");

    // side schedule for the punctures strictly between the bundles
    PathSpec sched_path = p;
    auto sched = side_schedule(sched_path, K);
    auto side_at = [&](int q) {
        for (auto [pos, s] : sched)
            if (pos == q) return s;
        return p.base_side;
    };

    const int n = K.count();
    BraidWord w(n);
    // gather: each intermediate strand crosses the right bundle, rightmost
    // intermediate first; below-passages carry the inverse generator
    for (int q = b_left - 1; q >= a_left + a_size; --q) {
        Side s = side_at(q);
        for (int i = 0; i < b_size; ++i) w.push(s == Side::below ? -(q + i) : (q + i));
    }
    // core: positive block transposition of the adjacent bundles (each
    // A-strand crosses the B-block once, rightmost first)
    BraidWord core(n);
    for (int rep = 0; rep < a_size; ++rep)
        for (int i = 0; i < b_size; ++i) core.push(a_left + a_size - 1 - rep + i);
    BraidWord word = w;
    word.push_word(core);
    word.push_word(w.inverse());
    return word;
}

BraidWord ConjAtom::word(const PunctureSet& K) const {
    switch (kind) {
        case Kind::path_twist: {
            if (!bundle_labels.empty())
                return braidforge::power(object_twist_word(path, K, bundle_labels), power);
            BraidWord h = compile_path(path, K).word;
            return braidforge::power(h, power);
        }
        case Kind::sub_twist: {
            BraidWord t = sub_full_twist_word(support, K);
            return braidforge::power(t, power);
        }
        case Kind::raw: {
            BraidWord w(K.count());
            for (int l : raw_letters) w.push(l);
            return w;
        }
    }
    throw braid_error("unreachable");
}

Factor SymFactor::compile(const PunctureSet& K) const {
    Factor f;
    f.kind = kind;
    f.path = path;
    f.twist_support = support;
    f.exponent = exponent;
    f.group = group;
    f.provenance = provenance;
    BraidWord w(K.count());
    for (const auto& a : conj) w.push_word(a.word(K));
    f.conjugator = std::move(w);
    return f;
}

Factorization compile_factors(const SymFactors& fs, const PunctureSet& K) {
    Factorization f;
    f.ambient = K;
    f.factors.reserve(fs.size());
    for (const auto& s : fs) f.factors.push_back(s.compile(K));
    return f;
}

namespace {

Label map_label(const Label& l, const std::map<int, int>& base_map) {
    auto it = base_map.find(l.base);
    if (it == base_map.end()) return l;
    return Label{it->second, l.primed};
}

PathSpec map_path(const PathSpec& p, const std::map<int, int>& m) {
    PathSpec r = p;
    r.from = map_label(r.from, m);
    r.to = map_label(r.to, m);
    for (auto& d : r.detours) {
        d.lo = map_label(d.lo, m);
        d.hi = map_label(d.hi, m);
    }
    return r;
}

ConjAtom path_atom(Label a, Label b, int pw, Side side = Side::below) {
    ConjAtom c;
    c.kind = ConjAtom::Kind::path_twist;
    c.path = PathSpec{a, b, side, {}};
    c.power = pw;
    return c;
}

}  // namespace

SymFactor relabel(const SymFactor& f, const std::map<int, int>& m) {
    SymFactor r = f;
    r.path = map_path(r.path, m);
    for (auto& l : r.support) l = map_label(l, m);
    for (auto& c : r.conj) {
        c.path = map_path(c.path, m);
        for (auto& l : c.support) l = map_label(l, m);
        for (auto& b : c.bundle_labels) {
            auto it = m.find(b);
            if (it != m.end()) b = it->second;
        }
    }
    return r;
}

SymFactor lift(const SymFactor& f) {
    SymFactor r = f;
    r.path = lift_path(r.path);
    for (auto& c : r.conj)
        if (c.kind == ConjAtom::Kind::path_twist) c.path = lift_path(c.path);
    return r;
}

SymFactors regenerate_branch(const SymFactor& f) {
    if (f.exponent != 1 || f.kind != Factor::Kind::half_twist_power)
        throw braid_error("first regeneration rule applies to branch factors");
    if (f.path.from.primed || f.path.to.primed)
        throw braid_error("first regeneration rule applies to undoubled labels");
    SymFactor base = lift(f);
    Label i = base.path.from, j = base.path.to;
    if (!(i.base < j.base)) std::swap(i, j);

    SymFactor f1 = base;
    f1.path.from = Label{i.base, true};
    f1.path.to = j;

    SymFactor f2 = base;
    f2.path.from = i;
    f2.path.to = Label{j.base, true};
    f2.path.detours.push_back(Detour{j, j, Side::above});
    return {f1, f2};
}

SymFactors regenerate_node(const SymFactor& f, NodeMode mode) {
    if (f.exponent != 2 || f.kind != Factor::Kind::half_twist_power)
        throw braid_error("second regeneration rule applies to node factors");
    SymFactor base = lift(f);
    Label i = base.path.from, j = base.path.to;
    bool swapped = false;
    if (j.base < i.base || (j.base == i.base && i.primed && !j.primed)) {
        std::swap(i, j);
        swapped = true;
    }
    (void)swapped;

    auto mk = [&](Label x, Label y) {
        SymFactor s = base;
        s.path.from = x;
        s.path.to = y;
        return s;
    };
    Label ip{i.base, true}, jp{j.base, true};
    switch (mode) {
        case NodeMode::lower:
            if (i.primed) throw braid_error("doubling an already primed endpoint");
            return {mk(ip, j), mk(i, j)};
        case NodeMode::upper:
            if (j.primed) throw braid_error("doubling an already primed endpoint");
            return {mk(i, jp), mk(i, j)};
        case NodeMode::both:
            if (i.primed || j.primed) throw braid_error("doubling an already primed endpoint");
            return {mk(ip, jp), mk(ip, j), mk(i, jp), mk(i, j)};
    }
    throw braid_error("unreachable");
}

SymFactors regenerate_tangent(const SymFactor& f, TangentSide side) {
    if (f.exponent != 4 || f.kind != Factor::Kind::half_twist_power)
        throw braid_error("third regeneration rule applies to tangent factors");
    SymFactor base = lift(f);
    Label i = base.path.from, j = base.path.to;
    if (j.base < i.base || (j.base == i.base && i.primed && !j.primed)) std::swap(i, j);

    // the cusp twist joins the pair-adjacent member to the far endpoint
    Label plo, phi, far;
    PathSpec xpath = base.path;
    if (side == TangentSide::lower) {
        if (i.primed) throw braid_error("doubling an already primed endpoint");
        plo = i;
        phi = Label{i.base, true};
        far = j;
        xpath.from = phi;
        xpath.to = far;
    } else {
        if (j.primed) throw braid_error("doubling an already primed endpoint");
        plo = j;
        phi = Label{j.base, true};
        far = i;
        xpath.from = far;
        xpath.to = plo;
    }

    SymFactor x = base;
    x.path = xpath;
    x.exponent = 3;

    SymFactor t1 = x, t2 = x, t3 = x;
    t1.conj.clear();
    t1.conj.push_back(path_atom(plo, phi, 1));
    t1.conj.insert(t1.conj.end(), x.conj.begin(), x.conj.end());
    t3.conj.clear();
    t3.conj.push_back(path_atom(plo, phi, -1));
    t3.conj.insert(t3.conj.end(), x.conj.begin(), x.conj.end());
    return {t1, t2, t3};
}

namespace {

// Z^2_{pp',q} / Z^2_{q,pp'} used as a conjugating braid: the product of the
// two node twists, the primed one first.
void push_pair_square(std::vector<ConjAtom>& out, Label p, Label q) {
    out.push_back(path_atom(Label{p.base, true}, q, 2));
    out.push_back(path_atom(p, q, 2));
}

void append(SymFactors& out, SymFactors more) {
    for (auto& f : more) out.push_back(std::move(f));
}

SymFactor plain(Label a, Label b, int exp, Side side = Side::below) {
    SymFactor s;
    s.path = PathSpec{a, b, side, {}};
    s.exponent = exp;
    return s;
}

// cusp triple with the pair given explicitly
SymFactors triple(Label pair_base, Label far, TangentSide side,
                  std::vector<ConjAtom> conj = {}, Side base_side = Side::below,
                  bool swap_conj = false, bool wind = false) {
    SymFactor t;
    t.path = side == TangentSide::lower ? PathSpec{pair_base, far, base_side, {}}
                                        : PathSpec{far, pair_base, base_side, {}};
    t.exponent = 4;
    t.conj = std::move(conj);
    SymFactors r = regenerate_tangent(t, side);
    if (swap_conj) {
        // flip the signs of the outer pair-conjugators
        r[0].conj[0].power = -r[0].conj[0].power;
        r[2].conj[0].power = -r[2].conj[0].power;
    }
    if (wind) {
        // the third cusp path winds a full extra turn around the pair
        r[2].conj[0].power *= 3;
    }
    return r;
}

}  // namespace

FSideConvention& f_side_convention() {
    static FSideConvention conv;
    return conv;
}

SymFactors build_F(FKind kind, int a, int b, int c, int d, bool strict_order) {
    auto check = [&](bool ok, const char* what) {
        if (!ok) throw braid_error(std::string("F constructor ordering violated: ") + what);
    };
    Label la{a, false}, lb{b, false}, lc{c, false}, ld{d, false};
    Label lap{a, true}, lbp{b, true}, lcp{c, true}, ldp{d, true};

    const FSideConvention& cv = f_side_convention();
    SymFactors half;
    if (kind == FKind::u) {
        check(std::max(b, c) < std::min(a, d), "{b,c} < {a,d}");
        check(c < b, "c < b");
        if (strict_order) check(a < d, "a < d");
        // Z^(3)_{bb',a}
        append(half, triple(lb, la, TangentSide::lower, {}, cv.u_triple_a, cv.u_swap_a, cv.u_wind_a));
        // Z^2_{a'd}
        half.push_back(plain(lap, ld, 2, cv.u_nf));
        // (Z^2_{ad})_{Z^2_{bb',a}}
        {
            SymFactor s = plain(la, ld, 2, cv.u_nf2);
            push_pair_square(s.conj, lb, la);
            half.push_back(s);
        }
        // (Z^(3)_{bb',d})_{Z^2_{bb',a}}
        {
            std::vector<ConjAtom> w;
            push_pair_square(w, lb, la);
            append(half, triple(lb, ld, TangentSide::lower, w, cv.u_triple_d, cv.u_swap_d, cv.u_wind_d));
        }
        // (Z_{cb'})_{Z^2_{b'd} Z^2_{b'a}}
        {
            SymFactor s = plain(lc, lbp, 1, cv.u_cb);
            if (cv.u_cb_at_b != cv.u_cb) s.path.detours.push_back(Detour{lb, lb, cv.u_cb_at_b});
            if (cv.u_cb_at_cp != cv.u_cb)
                s.path.detours.push_back(Detour{lcp, lcp, cv.u_cb_at_cp});
            s.conj.push_back(path_atom(lbp, ld, 2));
            s.conj.push_back(path_atom(lbp, la, 2));
            half.push_back(s);
        }
        // (Z_{c'b})_{Z^2_{bd} Z^2_{ba} Z^2_{bb'}}
        {
            SymFactor s = plain(lcp, lb, 1, cv.u_cpb);
            s.conj.push_back(path_atom(lb, ld, 2));
            s.conj.push_back(path_atom(lb, la, 2));
            s.conj.push_back(path_atom(lb, lbp, 2));
            half.push_back(s);
        }
    } else if (kind == FKind::l) {
        check(std::min(b, c) > std::max(a, d), "{b,c} > {a,d}");
        // Z^2_{a'd}
        half.push_back(plain(lap, ld, 2, cv.l_nf));
        // Z^(3)_{d',cc'}
        append(half, triple(lc, ldp, TangentSide::upper, {}, cv.l_triple_d, cv.l_swap_d, cv.l_wind_d));
        // (Z^2_{a'd'})_{Z^2_{d',cc'} Z^2_{a'd}}
        {
            SymFactor s = plain(lap, ldp, 2, cv.l_nf2);
            s.conj.push_back(path_atom(ldp, lcp, 2));
            s.conj.push_back(path_atom(ldp, lc, 2));
            s.conj.push_back(path_atom(lap, ld, 2));
            half.push_back(s);
        }
        // (Z^(3)_{a',cc'})_{Z^2_{a'd}}
        {
            std::vector<ConjAtom> w{path_atom(lap, ld, 2)};
            append(half, triple(lc, lap, TangentSide::upper, w, cv.l_triple_a, cv.l_swap_a, cv.l_wind_a));
        }
        // the deg-1 paths (c,b') pass c' and b only when c < b
        auto partner_detours = [&](SymFactor& s, Side base) {
            if (c > b) return;
            if (cv.l_cb_at_cp != base) s.path.detours.push_back(Detour{lcp, lcp, cv.l_cb_at_cp});
            if (cv.l_cb_at_b != base) s.path.detours.push_back(Detour{lb, lb, cv.l_cb_at_b});
        };
        // (Zbar_{cb'})_{Z^2_{d',c} Z^2_{a'c} Z^2_{a'd}}
        {
            SymFactor s = plain(lc, lbp, 1, cv.l_cb1);
            partner_detours(s, cv.l_cb1);
            s.conj.push_back(path_atom(ldp, lc, 2));
            s.conj.push_back(path_atom(lap, lc, 2));
            s.conj.push_back(path_atom(lap, ld, 2));
            half.push_back(s);
        }
        // (Z_{cb'})_{Z^2_{cc'} Z^2_{d'c'} Z^2_{a'c'} Z^2_{a'd}}
        {
            SymFactor s = plain(lc, lbp, 1, cv.l_cb2);
            partner_detours(s, cv.l_cb2);
            s.conj.push_back(path_atom(lc, lcp, 2));
            s.conj.push_back(path_atom(ldp, lcp, 2));
            s.conj.push_back(path_atom(lap, lcp, 2));
            s.conj.push_back(path_atom(lap, ld, 2));
            half.push_back(s);
        }
    } else {
        check(a < std::min(b, c) && std::max(b, c) < d, "a < {b,c} < d");
        // Z^(3)_{a',cc'}
        append(half, triple(lc, lap, TangentSide::upper));
        // Z^(3)_{bb',d}
        append(half, triple(lb, ld, TangentSide::lower));
        // Z~_{c,b'} = (Z_{cb'})_{Z^2_{b',d} Z^2_{cc'} Z^2_{a'c}}
        {
            SymFactor s = plain(lc, lbp, 1);
            s.conj.push_back(path_atom(lbp, ld, 2));
            s.conj.push_back(path_atom(lc, lcp, 2));
            s.conj.push_back(path_atom(lap, lc, 2));
            half.push_back(s);
        }
        // Z~_{b',c} = (Z_{b',c})_{Z^2_{b'd} Z^2_{a'c'}}
        {
            SymFactor s = plain(lbp, lc, 1);
            s.conj.push_back(path_atom(lbp, ld, 2));
            s.conj.push_back(path_atom(lap, lcp, 2));
            half.push_back(s);
        }
        // (Z^2_{a',d})_{Z^2_{cc'}}
        {
            SymFactor s = plain(lap, ld, 2);
            s.conj.push_back(path_atom(lc, lcp, 2));
            half.push_back(s);
        }
        // Z^2_{ad}
        half.push_back(plain(la, ld, 2));
    }

    // F(a,b,c,d) = F . (F)_{Z^-1_{aa'} Z^-1_{dd'}}
    SymFactors out = half;
    for (SymFactor s : half) {
        s.conj.push_back(path_atom(la, lap, -1));
        s.conj.push_back(path_atom(ld, ldp, -1));
        out.push_back(std::move(s));
    }
    return out;
}

SymFactors local_bmf(const std::vector<TableRow>& rows) {
    SymFactors out;
    std::vector<ConjAtom> transport;
    bool poisoned = false;  // a branch row has no braid-valued diffeomorphism
    for (const auto& row : rows) {
        SymFactor f;
        if (row.skeleton.size() < 2) throw braid_error("skeleton needs at least two punctures");
        if (row.skeleton.size() == 2) {
            f.path = PathSpec{row.skeleton[0], row.skeleton[1], Side::below, {}};
            f.exponent = row.eps;
        } else {
            if (row.eps % 2 != 0)
                throw braid_error("multi-puncture skeletons need an even twist power");
            f.kind = Factor::Kind::sub_full_twist;
            f.support = row.skeleton;
            f.exponent = row.eps / 2;
        }
        if (row.conj_override) {
            f.conj = *row.conj_override;
        } else {
            if (poisoned)
                throw braid_error(
                    "row follows a branch point without a conjugator override");
            f.conj = transport;
        }
        out.push_back(f);

        // accumulate this row's Lefschetz diffeomorphism (applied first for
        // later skeletons, so it is prepended)
        if (row.eps == 1) {
            poisoned = true;
            continue;
        }
        ConjAtom d;
        if (row.skeleton.size() == 2) {
            // going below a node half-twists the skeleton, below a tangent
            // point a full twist occurs
            d = path_atom(row.skeleton[0], row.skeleton[1], row.eps / 2);
        } else {
            d.kind = ConjAtom::Kind::sub_twist;
            d.support = row.skeleton;
            d.power = row.eps / 2;  // full twists of the sub-disk
        }
        transport.insert(transport.begin(), d);
    }
    return out;
}

std::vector<TableRow> prop32_table() {
    auto L = [](int b, bool p = false) { return Label{b, p}; };
    std::vector<TableRow> rows;
    rows.push_back({{L(2), L(3)}, 2, {}});
    rows.push_back({{L(3, true), L(4)}, 2, {}});
    rows.push_back({{L(1), L(2)}, 4, {}});
    rows.push_back({{L(4), L(5)}, 4, {}});
    rows.push_back({{L(3, true), L(4)}, 2, {}});
    rows.push_back({{L(2), L(3)}, 2, {}});
    rows.push_back({{L(3), L(3, true)}, 1, {}});
    TableRow last{{L(1), L(2), L(4), L(5)}, 2, {}};
    last.conj_override = std::vector<ConjAtom>{path_atom(L(3), L(4), -2)};
    rows.push_back(last);
    return rows;
}

SymFactors phi23_block() {
    SymFactors local = local_bmf(prop32_table());

    // Prop 3.3: double the lines 1, 2, 4, 5 (the conic pair 3,3' exists);
    // the transports of the earlier rows then move the whole pairs
    for (auto& f : local)
        for (auto& c : f.conj)
            if (c.kind == ConjAtom::Kind::path_twist) c.bundle_labels = {1, 2, 4, 5};
    SymFactors regenerated;
    append(regenerated, regenerate_node(local[0], NodeMode::lower));    // Z^2_{22',3}
    append(regenerated, regenerate_node(local[1], NodeMode::upper));    // Z^2_{3',44'}
    append(regenerated, regenerate_tangent(local[2], TangentSide::lower));  // Z^(3)_{11',3}
    append(regenerated, regenerate_tangent(local[3], TangentSide::upper));  // Z^(3)_{3',55'}
    append(regenerated, regenerate_node(local[4], NodeMode::upper));
    append(regenerated, regenerate_node(local[5], NodeMode::lower));
    regenerated.push_back(lift(local[6]));                               // Z~_{3,3'}

    // local line numbers -> global lines at v_3
    const std::map<int, int> to_global{{1, 1}, {2, 3}, {3, 9}, {4, 16}, {5, 21}};
    SymFactors out;
    for (const auto& f : regenerated) {
        SymFactor g = relabel(f, to_global);
        g.group = "phi2,3";
        g.provenance = Provenance::paper;
        out.push_back(std::move(g));
    }

    // the 4-point tail: (F_3 . (F_3)_theta)_{Z_alpha3} = F_u(16,3,1,21)
    // conjugated by Z^2_{33',9} Z^2_{11',9}
    SymFactors tail = build_F(FKind::u, 16, 3, 1, 21);
    for (SymFactor s : tail) {
        push_pair_square(s.conj, Label{3, false}, Label{9, false});
        push_pair_square(s.conj, Label{1, false}, Label{9, false});
        s.group = "phi2,3";
        s.provenance = Provenance::paper;
        out.push_back(std::move(s));
    }
    return out;
}

SymFactors doubled_parasitic(const ParasiticEntry& e, const std::string& group) {
    Label p{e.p, false}, pp{e.p, true};
    Label t{e.t, false}, tp{e.t, true};

    std::vector<Detour> detours;
    int run_start = 0;
    const auto& s = e.sides;
    for (size_t i = 0; i <= s.size(); ++i) {
        bool above = i < s.size() && s[i].second == Side::above;
        if (above && run_start == 0) run_start = s[i].first;
        if (!above && run_start != 0) {
            detours.push_back(
                Detour{Label{run_start, false}, Label{s[i - 1].first, true}, Side::above});
            run_start = 0;
        }
    }

    SymFactors out;
    for (auto [x, y] : {std::pair{pp, tp}, {pp, t}, {p, tp}, {p, t}}) {
        SymFactor f;
        f.path = PathSpec{x, y, Side::below, detours};
        f.exponent = 2;
        f.group = group;
        f.provenance = e.overridden ? Provenance::paper : Provenance::derived;
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

SymFactors load_phi_block(const std::string& dataset, int vertex, const PunctureSet& K) {
    std::ostringstream name;
    name << dataset << "/phi_" << vertex << ".bmf";
    Factorization f = parse_dsl(read_data_file(name.str()));
    if (f.ambient.count() != K.count())
        throw braid_error("block " + name.str() + " has wrong ambient");
    SymFactors out;
    for (const auto& fac : f.factors) {
        SymFactor s;
        s.kind = fac.kind;
        s.path = fac.path;
        s.support = fac.twist_support;
        s.exponent = fac.exponent;
        s.group = fac.group;
        s.provenance = fac.provenance;
        if (!fac.conjugator.empty()) {
            ConjAtom c;
            c.kind = ConjAtom::Kind::raw;
            c.raw_letters = fac.conjugator.letters();
            s.conj.push_back(std::move(c));
        }
        out.push_back(std::move(s));
    }
    return out;
}

Factorization assemble(const IncidenceModel& m, const std::string& dataset,
                       const std::string& cprefix) {
    PunctureSet K = PunctureSet::doubled(static_cast<int>(m.lines.size()));
    SymFactors all;
    for (int v = m.vertex_count; v >= 1; --v) {
        std::string cgroup = cprefix + std::to_string(v);
        for (int t : c_block_lines(m, v))
            for (const auto& e : parasitic_block(m, t)) append(all, doubled_parasitic(e, cgroup));

        SymFactors block;
        if (dataset == "magician") {
            if (v == 3) {
                block = phi23_block();
            } else if (v == 5) {
                block = build_F(FKind::u, 18, 4, 3, 23, true);
            } else if (v == 6) {
                block = build_F(FKind::u, 10, 6, 5, 14, true);
            } else {
                block = load_phi_block(dataset, v, K);
            }
            for (auto& s : block)
                if (s.group.empty() || v == 5 || v == 6) s.group = "phi2," + std::to_string(v);
        } else {
            block = load_phi_block(dataset, v, K);
            for (auto& s : block)
                if (s.group.empty()) s.group = "phi1," + std::to_string(v);
        }
        append(all, block);
    }
    return compile_factors(all, K);
}

}  // namespace

Factorization assemble_phi2_prebranch(const IncidenceModel& m) {
    return assemble(m, "magician", "C2,");
}

std::vector<long long> forgetting_degrees(const Factorization& f) {
    const int nbase = f.ambient.base_count();
    if (!f.ambient.is_doubled()) throw braid_error("forgetting audit needs a doubled model");

    std::vector<BraidWord> words;
    words.reserve(f.factors.size());
    for (const auto& fac : f.factors) words.push_back(fac.realized(f.ambient));

    std::vector<long long> degs(nbase + 1, 0);
    const int n = f.ambient.count();
    for (int i = 1; i <= nbase; ++i) {
        int pa = f.ambient.position(Label{i, false});
        int pb = f.ambient.position(Label{i, true});
        std::vector<int> strand_at(n + 1);
        for (int q = 1; q <= n; ++q) strand_at[q] = q;
        long long deg = 0;
        for (const auto& w : words) {
            for (int letter : w.letters()) {
                int k = std::abs(letter);
                int s1 = strand_at[k], s2 = strand_at[k + 1];
                if ((s1 == pa || s1 == pb) && (s2 == pa || s2 == pb))
                    deg += (letter > 0) ? 1 : -1;
                std::swap(strand_at[k], strand_at[k + 1]);
            }
        }
        degs[i] = deg;
    }
    return degs;
}

std::vector<Factor> extra_branch_factors(const IncidenceModel& m,
                                         const Factorization& prebranch) {
    auto degs = forgetting_degrees(prebranch);
    std::vector<Factor> out;
    int n = 0;
    PunctureSet K = prebranch.ambient;
    for (size_t i = 1; i < degs.size(); ++i) {
        long long deficit = 2 - degs[i];
        if (deficit < 0)
            throw braid_error("line " + std::to_string(i) +
                              " has forgetting degree " + std::to_string(degs[i]) +
                              " > 2: corrupted factorization");
        if (deficit == 0) continue;
        ++n;
        for (long long r = 0; r < deficit; ++r) {
            SymFactor s;
            s.path = PathSpec{Label{static_cast<int>(i), false},
                              Label{static_cast<int>(i), true}, Side::below, {}};
            s.exponent = 1;
            s.group = "b" + std::to_string(n);
            s.provenance = Provenance::paper;
            out.push_back(s.compile(K));
        }
    }
    (void)m;
    return out;
}

Factorization assemble_phi2(const IncidenceModel& m) {
    Factorization f = assemble_phi2_prebranch(m);
    for (auto& b : extra_branch_factors(m, f)) f.factors.push_back(std::move(b));
    return f;
}

Factorization assemble_phi1(const IncidenceModel& m) {
    return assemble(m, "pillow", "C1,");
}

}  // namespace braidforge
