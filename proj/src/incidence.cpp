#include "braidforge/incidence.hpp"

#include <algorithm>
#include <sstream>

namespace braidforge {

const IncidenceLine& IncidenceModel::line(int label) const {
    for (const auto& l : lines)
        if (l.label == label) return l;
    throw braid_error("no line labeled " + std::to_string(label));
}

std::vector<int> IncidenceModel::lines_through(int vertex) const {
    std::vector<int> r;
    for (const auto& l : lines)
        if (l.lo == vertex || l.hi == vertex) r.push_back(l.label);
    return r;
}

bool IncidenceModel::lines_share_vertex(int p, int t) const {
    const auto& a = line(p);
    const auto& b = line(t);
    return a.lo == b.lo || a.lo == b.hi || a.hi == b.lo || a.hi == b.hi;
}

std::array<int, 2> IncidenceModel::planes_of_line(int label) const {
    std::array<int, 2> r{-1, -1};
    int found = 0;
    for (size_t i = 0; i < planes.size(); ++i) {
        const auto& pl = planes[i];
        if (pl[0] == label || pl[1] == label || pl[2] == label) {
            if (found == 2) throw braid_error("line on more than two planes");
            r[found++] = static_cast<int>(i);
        }
    }
    if (found != 2)
        throw braid_error("line " + std::to_string(label) + " bounds " +
                          std::to_string(found) + " planes, expected 2");
    return r;
}

void IncidenceModel::validate() const {
    for (const auto& l : lines) {
        if (l.lo >= l.hi || l.lo < 1 || l.hi > vertex_count)
            throw braid_error("bad line endpoints");
        for (const auto& o : lines)
            if (o.label != l.label && o.lo == l.lo && o.hi == l.hi)
                throw braid_error("duplicate line endpoints");
    }
    for (const auto& pl : planes) {
        // the three lines must form a triangle on three vertices
        std::vector<int> vs;
        for (int lab : pl) {
            const auto& l = line(lab);
            vs.push_back(l.lo);
            vs.push_back(l.hi);
        }
        std::sort(vs.begin(), vs.end());
        auto mid = std::unique(vs.begin(), vs.end());
        if (mid - vs.begin() != 3) throw braid_error("plane is not a triangle");
    }
    for (const auto& l : lines) planes_of_line(l.label);
    order_lines(*this);
}

std::vector<IncidenceLine> order_lines(const IncidenceModel& m) {
    std::vector<IncidenceLine> sorted = m.lines;
    std::sort(sorted.begin(), sorted.end(), [](const IncidenceLine& a, const IncidenceLine& b) {
        if (a.hi != b.hi) return a.hi < b.hi;
        return a.lo < b.lo;
    });
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].label != static_cast<int>(i) + 1)
            throw braid_error("stored line labels violate the ordering rule at label " +
                              std::to_string(sorted[i].label));
    }
    return sorted;
}

std::vector<VertexClass> classify_vertices(const IncidenceModel& m) {
    std::vector<VertexClass> r;
    for (int v = 1; v <= m.vertex_count; ++v) {
        VertexClass c;
        c.vertex = v;
        c.lines_through = m.lines_through(v);
        c.k = static_cast<int>(c.lines_through.size());
        r.push_back(std::move(c));
    }
    return r;
}

std::vector<ParasiticEntry> parasitic_block(const IncidenceModel& m, int t) {
    std::vector<ParasiticEntry> r;
    const int upper = m.line(t).hi;
    for (const auto& lp : order_lines(m)) {
        int p = lp.label;
        if (p >= t) break;
        if (m.lines_share_vertex(p, t)) continue;
        ParasiticEntry e;
        e.p = p;
        e.t = t;
        for (int q = p + 1; q < t; ++q) {
            const auto& lq = m.line(q);
            bool through_upper = (lq.lo == upper || lq.hi == upper);
            e.sides.emplace_back(q, through_upper ? Side::below : Side::above);
        }
        for (const auto& o : m.overrides) {
            if (o.t == t && o.p == p) {
                e.sides = o.sides;
                e.overridden = true;
            }
        }
        r.push_back(std::move(e));
    }
    return r;
}

std::vector<int> c_block_lines(const IncidenceModel& m, int vertex) {
    std::vector<int> r;
    for (const auto& l : order_lines(m))
        if (l.lo == vertex) r.push_back(l.label);
    return r;
}

std::vector<ParasiticEntry> all_parasitic(const IncidenceModel& m) {
    std::vector<ParasiticEntry> r;
    for (int v = m.vertex_count; v >= 1; --v)
        for (int t : c_block_lines(m, v))
            for (auto& e : parasitic_block(m, t)) r.push_back(std::move(e));
    return r;
}

namespace {

// PathSpec over base labels for one parasitic entry: below runs stay on the
// base side, above runs become detours.
PathSpec entry_path(const ParasiticEntry& e) {
    PathSpec p{lab(e.p), lab(e.t), Side::below, {}};
    int run_start = 0;
    const auto& s = e.sides;
    for (size_t i = 0; i <= s.size(); ++i) {
        bool above = i < s.size() && s[i].second == Side::above;
        if (above && run_start == 0) run_start = s[i].first;
        if (!above && run_start != 0) {
            p.detours.push_back(Detour{lab(run_start), lab(s[i - 1].first), Side::above});
            run_start = 0;
        }
    }
    return p;
}

}  // namespace

Factorization parasitic_factorization_base(const IncidenceModel& m) {
    Factorization f;
    f.ambient = PunctureSet::base(static_cast<int>(m.lines.size()));
    for (int v = m.vertex_count; v >= 1; --v) {
        for (int t : c_block_lines(m, v)) {
            for (const auto& e : parasitic_block(m, t)) {
                Factor fac;
                fac.path = entry_path(e);
                fac.exponent = 2;
                fac.group = "C" + std::to_string(v);
                fac.provenance = Provenance::paper;
                f.factors.push_back(std::move(fac));
            }
        }
    }
    return f;
}

IncidenceModel parse_incidence(const std::string& text) {
    IncidenceModel m;
    std::istringstream in(text);
    std::string tok;
    enum Section { none, sec_lines, sec_planes, sec_overrides } sec = none;
    int pending = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "name") { ls >> m.name; continue; }
        if (head == "provenance") {
            std::string p;
            ls >> p;
            m.provenance = (p == "paper") ? Provenance::paper : Provenance::reconstructed;
            continue;
        }
        if (head == "vertices") { ls >> m.vertex_count; continue; }
        if (head == "lines") { ls >> pending; sec = sec_lines; continue; }
        if (head == "planes") { ls >> pending; sec = sec_planes; continue; }
        if (head == "overrides") { sec = sec_overrides; continue; }
        if (head == "end") { sec = none; continue; }

        if (sec == sec_lines) {
            IncidenceLine l;
            l.label = std::stoi(head);
            ls >> l.lo >> l.hi;
            m.lines.push_back(l);
        } else if (sec == sec_planes) {
            std::array<int, 3> pl;
            pl[0] = std::stoi(head);
            ls >> pl[1] >> pl[2];
            m.planes.push_back(pl);
        } else if (sec == sec_overrides) {
            if (head != "dside") throw braid_error("unknown override kind: " + head);
            ParasiticOverride o;
            ls >> o.t >> o.p;
            std::string item;
            while (ls >> item) {
                auto colon = item.find(':');
                if (colon == std::string::npos) throw braid_error("bad override item " + item);
                int q = std::stoi(item.substr(0, colon));
                std::string side = item.substr(colon + 1);
                o.sides.emplace_back(q, side == "below" ? Side::below : Side::above);
            }
            m.overrides.push_back(std::move(o));
        } else {
            throw braid_error("unexpected incidence line: " + line);
        }
    }
    std::sort(m.lines.begin(), m.lines.end(),
              [](const IncidenceLine& a, const IncidenceLine& b) { return a.label < b.label; });
    m.validate();
    return m;
}

std::string print_incidence(const IncidenceModel& m) {
    std::ostringstream out;
    out << "name " << m.name << "\n";
    out << "provenance " << (m.provenance == Provenance::paper ? "paper" : "reconstructed")
        << "\n";
    out << "vertices " << m.vertex_count << "\n";
    out << "lines " << m.lines.size() << "\n";
    for (const auto& l : m.lines) out << l.label << " " << l.lo << " " << l.hi << "\n";
    out << "planes " << m.planes.size() << "\n";
    for (const auto& pl : m.planes) out << pl[0] << " " << pl[1] << " " << pl[2] << "\n";
    if (!m.overrides.empty()) {
        out << "overrides\n";
        for (const auto& o : m.overrides) {
            out << "dside " << o.t << " " << o.p;
            for (auto [q, s] : o.sides)
                out << " " << q << ":" << (s == Side::below ? "below" : "above");
            out << "\n";
        }
        out << "end\n";
    }
    return out.str();
}

}  // namespace braidforge
