#ifndef BRAIDFORGE_INCIDENCE_HPP
#define BRAIDFORGE_INCIDENCE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "braidforge/factorization.hpp"

namespace braidforge {

/// Intersection line of a degenerated surface, joining two of the numbered
/// singular points. lo < hi.
struct IncidenceLine {
    int label = 0;
    int lo = 0, hi = 0;
};

/// Override of the generated parasitic-path annotation: the published table
/// wins where it disagrees with the generation rule.
struct ParasiticOverride {
    int t = 0, p = 0;
    std::vector<std::pair<int, Side>> sides;  // full schedule over (p, t)
};

/// Planes/lines/vertices of a degenerated surface. Planes are triangles,
/// given as triples of line labels; every line bounds exactly two planes.
struct IncidenceModel {
    std::string name;
    Provenance provenance = Provenance::reconstructed;
    int vertex_count = 0;
    std::vector<IncidenceLine> lines;             // sorted by label
    std::vector<std::array<int, 3>> planes;       // line labels
    std::vector<ParasiticOverride> overrides;

    const IncidenceLine& line(int label) const;
    std::vector<int> lines_through(int vertex) const;
    bool lines_share_vertex(int p, int t) const;
    /// The two planes bounded by a line (indices into `planes`).
    std::array<int, 2> planes_of_line(int label) const;
    /// Both planes as sorted vertex triples, for the monodromy representation.
    int plane_count() const { return static_cast<int>(planes.size()); }

    void validate() const;
};

/// The quoted ordering rule: L<M if b<d, or b=d and a<c. Returns the lines
/// in rule order; throws if the stored labels disagree with the rule.
std::vector<IncidenceLine> order_lines(const IncidenceModel& m);

struct VertexClass {
    int vertex = 0;
    int k = 0;
    std::vector<int> lines_through;
};

std::vector<VertexClass> classify_vertices(const IncidenceModel& m);

/// One parasitic factor Z^2_{p,t} of the block D_t, with its side schedule.
struct ParasiticEntry {
    int p = 0, t = 0;
    std::vector<std::pair<int, Side>> sides;  // per base label strictly between
    bool overridden = false;
};

/// D_t = prod over p < t, L_p disjoint from L_t, of Z~^2_{p,t}. The path from
/// p to t runs below exactly the earlier lines through t's upper vertex and
/// above every other intermediate point; published overrides win.
std::vector<ParasiticEntry> parasitic_block(const IncidenceModel& m, int t);

/// The C~ block of a vertex: the D_t blocks of the lines whose lower
/// endpoint is that vertex (each line is assigned to exactly one block).
std::vector<int> c_block_lines(const IncidenceModel& m, int vertex);

/// All parasitic entries grouped per vertex in assembly order j = 10..1.
std::vector<ParasiticEntry> all_parasitic(const IncidenceModel& m);

/// Parasitic factors over the undoubled line punctures (one Z^2 per entry).
Factorization parasitic_factorization_base(const IncidenceModel& m);

IncidenceModel parse_incidence(const std::string& text);
std::string print_incidence(const IncidenceModel& m);

}  // namespace braidforge

#endif
