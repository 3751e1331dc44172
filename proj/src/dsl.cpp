#include "braidforge/dsl.hpp"

#include <cctype>
#include <sstream>

namespace braidforge {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

    int peek() const { return pos < text.size() ? text[pos] : -1; }

    int get() {
        if (pos >= text.size()) return -1;
        char c = text[pos++];
        if (c == '\n') { ++line; col = 1; } else { ++col; }
        return c;
    }

    void skip_space(bool stop_at_newline = false) {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') get();
                continue;
            }
            if (c == '\n' && stop_at_newline) return;
            if (std::isspace(static_cast<unsigned char>(c)) || c == '*') { get(); continue; }
            return;
        }
    }

    bool eat(char c) {
        skip_space();
        if (peek() == c) { get(); return true; }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string word() {
        skip_space();
        std::string w;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == ',' || text[pos] == '.'))
            w.push_back(static_cast<char>(get()));
        return w;
    }

    std::string ident() {
        skip_space();
        std::string w;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            w.push_back(static_cast<char>(get()));
        return w;
    }

    // factor names mix letters and digits (Z2, Zbar3, Delta2)
    std::string name_token() {
        skip_space();
        std::string w;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])))
            w.push_back(static_cast<char>(get()));
        return w;
    }

    int integer() {
        skip_space();
        bool neg = false;
        if (peek() == '-') { get(); neg = true; }
        if (!std::isdigit(peek())) fail("expected integer");
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (get() - '0');
        return neg ? -v : v;
    }

    Label label() {
        int base = integer();
        bool primed = false;
        if (peek() == '\'') { get(); primed = true; }
        return Label{base, primed};
    }
};

// endpoint: a single label or a doubled pair "a a'"
struct Endpoint {
    Label first;
    bool pair = false;  // pair means {first, first'}
};

struct Atom {
    enum class Kind { twist, sub_twist, macro_f, raw };
    Kind kind = Kind::twist;
    std::string name;
    Side side = Side::below;
    int exponent = 1;
    std::vector<Endpoint> endpoints;
    std::vector<Label> support;
    std::vector<Detour> detours;
    std::vector<ConjAtom> conj;
    int power = 1;  // outer power (conjugator use)
    FKind fkind = FKind::u;
    int fa = 0, fb = 0, fc = 0, fd = 0;
    std::vector<int> raw;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lx_(text) {}

    Factorization parse_file() {
        Factorization f;
        bool have_ambient = false;
        std::string group;
        Provenance prov = Provenance::paper;
        while (true) {
            lx_.skip_space();
            if (lx_.peek() < 0) break;
            size_t save = lx_.pos;
            std::string id = lx_.ident();
            if (id == "ambient") {
                std::string kind = lx_.ident();
                int n = lx_.integer();
                if (kind == "base")
                    f.ambient = PunctureSet::base(n);
                else if (kind == "doubled")
                    f.ambient = PunctureSet::doubled(n);
                else
                    lx_.fail("ambient must be 'base' or 'doubled'");
                have_ambient = true;
                continue;
            }
            if (id == "group") {
                group = lx_.word();
                continue;
            }
            if (id == "provenance") {
                std::string p = lx_.ident();
                if (p == "paper") prov = Provenance::paper;
                else if (p == "derived") prov = Provenance::derived;
                else if (p == "reconstructed") prov = Provenance::reconstructed;
                else lx_.fail("unknown provenance " + p);
                continue;
            }
            // otherwise: a factor atom
            lx_.pos = save;
            if (!have_ambient) lx_.fail("ambient directive must precede factors");
            for (SymFactor& s : expand_atom(parse_atom(), /*top_level=*/true)) {
                s.group = group;
                s.provenance = prov;
                f.factors.push_back(s.compile(f.ambient));
            }
        }
        if (!have_ambient) throw braid_error("empty DSL input: missing ambient");
        return f;
    }

    BraidWord parse_expr(const PunctureSet& K) {
        BraidWord w(K.count());
        while (true) {
            lx_.skip_space();
            if (lx_.peek() < 0) break;
            Atom a = parse_atom();
            for (const ConjAtom& atom : atom_to_conj(a)) w.push_word(atom.word(K));
        }
        return w;
    }

    // conjugator-expression form of an atom (atom braids multiplied out)
    std::vector<ConjAtom> atom_to_conj(const Atom& a) {
        std::vector<ConjAtom> out;
        if (a.kind == Atom::Kind::raw) {
            ConjAtom c;
            c.kind = ConjAtom::Kind::raw;
            c.raw_letters = a.raw;
            out.push_back(std::move(c));
            return out;
        }
        if (a.kind == Atom::Kind::macro_f) lx_.fail("F-macros cannot appear in braid expressions");
        std::vector<SymFactor> fs = expand_atom(a, /*top_level=*/false);
        // a^-1 of a product reverses the factor order
        if (a.power < 0) std::reverse(fs.begin(), fs.end());
        for (int rep = 0; rep < std::abs(a.power); ++rep) {
            for (const SymFactor& s : fs) {
                ConjAtom c;
                if (s.kind == Factor::Kind::sub_full_twist) {
                    c.kind = ConjAtom::Kind::sub_twist;
                    c.support = s.support;
                    c.power = (a.power < 0) ? -s.exponent : s.exponent;
                } else {
                    c.kind = ConjAtom::Kind::path_twist;
                    c.path = s.path;
                    c.power = (a.power < 0) ? -s.exponent : s.exponent;
                }
                if (!s.conj.empty()) {
                    // (x^W)^k: keep as raw sandwich via surrounding atoms
                    std::vector<ConjAtom> sandwich;
                    for (auto it = s.conj.rbegin(); it != s.conj.rend(); ++it) {
                        ConjAtom inv = *it;
                        inv.power = -inv.power;
                        sandwich.push_back(inv);
                    }
                    out.insert(out.end(), sandwich.begin(), sandwich.end());
                    out.push_back(c);
                    out.insert(out.end(), s.conj.begin(), s.conj.end());
                    continue;
                }
                out.push_back(c);
            }
        }
        return out;
    }

private:
    Lexer lx_;

    Atom parse_atom() {
        lx_.skip_space();
        std::string name = lx_.name_token();
        Atom a;
        if (name == "Fu" || name == "Fm" || name == "Fl") {
            a.kind = Atom::Kind::macro_f;
            a.fkind = (name == "Fu") ? FKind::u : (name == "Fm") ? FKind::m : FKind::l;
            lx_.expect('(');
            a.fa = lx_.integer();
            lx_.expect(',');
            a.fb = lx_.integer();
            lx_.expect(',');
            a.fc = lx_.integer();
            lx_.expect(',');
            a.fd = lx_.integer();
            lx_.expect(')');
            parse_postfixes(a);
            return a;
        }
        if (name == "braid") {
            a.kind = Atom::Kind::raw;
            lx_.expect('(');
            if (!lx_.eat(')')) {
                a.raw.push_back(lx_.integer());
                while (lx_.eat(',')) a.raw.push_back(lx_.integer());
                lx_.expect(')');
            }
            return a;
        }

        a.side = Side::below;
        std::string base = name;
        if (base.rfind("Zbar", 0) == 0) {
            a.side = Side::above;
            base = "Z" + base.substr(4);
        }
        if (base == "Z") a.exponent = 1;
        else if (base == "Z2") a.exponent = 2;
        else if (base == "Z3") a.exponent = 3;
        else if (base == "Z4") a.exponent = 4;
        else if (base == "Delta2") a.kind = Atom::Kind::sub_twist;
        else lx_.fail("unknown factor name '" + name + "'");

        lx_.expect('[');
        if (a.kind == Atom::Kind::sub_twist) {
            a.support.push_back(lx_.label());
            while (lx_.eat(',')) a.support.push_back(lx_.label());
            a.exponent = 1;
        } else {
            a.endpoints.push_back(parse_endpoint());
            lx_.expect(',');
            a.endpoints.push_back(parse_endpoint());
        }
        lx_.expect(']');
        parse_postfixes(a);
        return a;
    }

    Endpoint parse_endpoint() {
        Endpoint e;
        e.first = lx_.label();
        lx_.skip_space();
        if (std::isdigit(lx_.peek())) {
            Label second = lx_.label();
            if (second.base != e.first.base || !second.primed || e.first.primed)
                lx_.fail("doubled endpoint must be \"a a'\"");
            e.pair = true;
        }
        return e;
    }

    void parse_postfixes(Atom& a) {
        while (true) {
            lx_.skip_space();
            int c = lx_.peek();
            if (c == 'd') {
                size_t save = lx_.pos;
                std::string id = lx_.ident();
                if (id != "det") { lx_.pos = save; return; }
                lx_.expect('(');
                Label lo = lx_.label();
                lx_.expect('-');
                Label hi = lx_.label();
                lx_.expect(',');
                std::string side = lx_.ident();
                lx_.expect(')');
                a.detours.push_back(
                    Detour{lo, hi, side == "below" ? Side::below : Side::above});
                continue;
            }
            if (c == '^' || c == '_') {
                lx_.get();
                if (lx_.eat('{')) {
                    // conjugator expression up to matching '}'
                    while (true) {
                        lx_.skip_space();
                        if (lx_.peek() == '}') { lx_.get(); break; }
                        if (lx_.peek() < 0) lx_.fail("unterminated conjugator");
                        Atom inner = parse_atom();
                        auto cs = atom_to_conj(inner);
                        a.conj.insert(a.conj.end(), cs.begin(), cs.end());
                    }
                } else if (c == '^') {
                    a.power = lx_.integer();
                } else {
                    lx_.fail("'_' must be followed by '{'");
                }
                continue;
            }
            return;
        }
    }

    // expands doubled-pair endpoints into the regeneration-rule factor lists
    std::vector<SymFactor> expand_atom(const Atom& a, bool top_level) {
        if (a.kind == Atom::Kind::raw) lx_.fail("raw braids are not factors");
        std::vector<SymFactor> out;
        if (a.kind == Atom::Kind::macro_f) {
            out = build_F(a.fkind, a.fa, a.fb, a.fc, a.fd);
            for (auto& s : out) s.conj.insert(s.conj.end(), a.conj.begin(), a.conj.end());
            return out;
        }
        if (a.kind == Atom::Kind::sub_twist) {
            SymFactor s;
            s.kind = Factor::Kind::sub_full_twist;
            s.support = a.support;
            s.exponent = 1;
            s.conj = a.conj;
            out.push_back(std::move(s));
            return out;
        }

        if (top_level && a.power != 1) lx_.fail("top-level factors cannot carry powers");

        const Endpoint& e1 = a.endpoints[0];
        const Endpoint& e2 = a.endpoints[1];
        SymFactor base;
        base.path = PathSpec{e1.first, e2.first, a.side, a.detours};
        base.exponent = a.exponent;
        base.conj = a.conj;

        if (!e1.pair && !e2.pair) {
            out.push_back(base);
            return out;
        }
        // the doubled endpoint is written as a pair; lower/upper refers to
        // the pair's position on the axis relative to the other endpoint
        bool pair_is_left = e1.pair ? label_left(e1.first, e2.first)
                                    : !label_left(e1.first, e2.first);
        if (a.exponent == 2) {
            NodeMode mode = (e1.pair && e2.pair) ? NodeMode::both
                            : pair_is_left       ? NodeMode::lower
                                                 : NodeMode::upper;
            return regenerate_node(base, mode);
        }
        if (a.exponent == 3) {
            if (e1.pair && e2.pair) lx_.fail("cusp factors double exactly one endpoint");
            base.exponent = 4;  // rule-3 input is the tangency factor
            return regenerate_tangent(base,
                                      pair_is_left ? TangentSide::lower : TangentSide::upper);
        }
        lx_.fail("pair endpoints are only meaningful for Z2/Z3 factors");
    }

    static bool label_left(const Label& x, const Label& y) {
        if (x.base != y.base) return x.base < y.base;
        return !x.primed && y.primed;
    }
};

}  // namespace

Factorization parse_dsl(const std::string& text) {
    Parser p(text);
    return p.parse_file();
}

BraidWord parse_braid_expr(const std::string& text, const PunctureSet& K) {
    Parser p(text);
    return p.parse_expr(K);
}

namespace {

void print_label(std::ostream& out, const Label& l) { out << l.str(); }

void print_path_atom(std::ostream& out, const PathSpec& p, int exponent) {
    out << (p.base_side == Side::above ? "Zbar" : "Z");
    if (exponent != 1) out << exponent;
    out << '[';
    print_label(out, p.from);
    out << ',';
    print_label(out, p.to);
    out << ']';
    for (const auto& d : p.detours) {
        out << " det(" << d.lo.str() << '-' << d.hi.str() << ','
            << (d.side == Side::below ? "below" : "above") << ')';
    }
}

void print_word(std::ostream& out, const BraidWord& w) {
    out << "braid(";
    for (size_t i = 0; i < w.letters().size(); ++i) {
        if (i) out << ',';
        out << w.letters()[i];
    }
    out << ')';
}

}  // namespace

std::string print_dsl(const Factorization& f) {
    std::ostringstream out;
    out << "ambient " << (f.ambient.is_doubled() ? "doubled " : "base ") << f.ambient.base_count()
        << "\n";
    std::string group = "\x01";
    Provenance prov = Provenance::paper;
    bool first = true;
    for (const auto& fac : f.factors) {
        if (fac.group != group) {
            out << "group " << fac.group << "\n";
            group = fac.group;
        }
        if (first || fac.provenance != prov) {
            out << "provenance "
                << (fac.provenance == Provenance::paper         ? "paper"
                    : fac.provenance == Provenance::reconstructed ? "reconstructed"
                                                                  : "derived")
                << "\n";
            prov = fac.provenance;
            first = false;
        }
        if (fac.kind == Factor::Kind::sub_full_twist) {
            out << "Delta2[";
            for (size_t i = 0; i < fac.twist_support.size(); ++i) {
                if (i) out << ',';
                out << fac.twist_support[i].str();
            }
            out << ']';
        } else {
            print_path_atom(out, fac.path, fac.exponent);
        }
        if (!fac.conjugator.empty()) {
            out << " ^{";
            print_word(out, fac.conjugator);
            out << '}';
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace braidforge
