#ifndef BRAIDFORGE_REGENERATION_HPP
#define BRAIDFORGE_REGENERATION_HPP

#include <map>
#include <optional>

#include "braidforge/factorization.hpp"
#include "braidforge/incidence.hpp"

namespace braidforge {

/// One conjugating twist, kept symbolic so factors can be lifted to the
/// doubled model and relabeled before compilation.
struct ConjAtom {
    enum class Kind { path_twist, sub_twist, raw };
    Kind kind = Kind::path_twist;
    PathSpec path;               // path_twist: H(path)^power
    std::vector<Label> support;  // sub_twist: full twist on the sub-disk, ^power
    int power = 1;
    std::vector<int> raw_letters;  // raw: generator letters over the ambient
    // after doubling, endpoints whose base label is listed here move as the
    // whole pair bundle {x, x'}
    std::vector<int> bundle_labels;

    BraidWord word(const PunctureSet& K) const;
};

/// Half-twist of two bundles along a path: each endpoint is either a single
/// puncture or an adjacent pair moving as one object; intermediates are
/// passed per the side schedule.
BraidWord object_twist_word(const PathSpec& p, const PunctureSet& K,
                            const std::vector<int>& bundle_labels);

/// A factor before compilation: conjugated power of a half-twist or of a
/// sub-disk full twist, with the conjugator as a left-to-right atom list.
struct SymFactor {
    Factor::Kind kind = Factor::Kind::half_twist_power;
    PathSpec path;
    std::vector<Label> support;
    int exponent = 1;
    std::vector<ConjAtom> conj;
    std::string group;
    Provenance provenance = Provenance::derived;

    Factor compile(const PunctureSet& K) const;
};

using SymFactors = std::vector<SymFactor>;

Factorization compile_factors(const SymFactors& fs, const PunctureSet& K);

/// Applies a base-label substitution to every label of the factor.
SymFactor relabel(const SymFactor& f, const std::map<int, int>& base_map);

/// Re-reads paths over the doubled set: detour ranges extend to cover the
/// primed partner of their right end.
SymFactor lift(const SymFactor& f);

// --- regeneration rules -------------------------------------------------

/// First rule: a branch factor Z_{i,j} becomes Z_{i',j} . Z_{i,j'}^{(j)}
/// (the second path detours above j). `doubles` picks which endpoint label
/// is replaced by a pair... both are, but i is the line the rule doubles.
SymFactors regenerate_branch(const SymFactor& f);

enum class NodeMode { lower, upper, both };

/// Second rule: Z^2_{ij} -> Z^2_{i'j}.Z^2_{ij} / Z^2_{ij'}.Z^2_{ij} /
/// the four-factor Z^2_{ii',jj'}.
SymFactors regenerate_node(const SymFactor& f, NodeMode mode);

enum class TangentSide { lower, upper };

/// Third rule: Z^4_{ij} becomes the cusp triple
/// (Z^3)^{Z_pair} . Z^3 . (Z^3)^{Z_pair^-1}
/// where the doubled pair is the lower or upper endpoint label and the base
/// twist joins the pair-adjacent member to the far endpoint.
SymFactors regenerate_tangent(const SymFactor& f, TangentSide side);

// --- the 4-point constructors -------------------------------------------

enum class FKind { u, m, l };

/// Side choices inside the 4-point constructors that the published displays
/// leave to their figures: base sides of the template paths and the passage
/// sides around the pair partners. The defaults are pinned by the
/// forgetting-degree audit (deg f_i values of Prop 3.5).
struct FSideConvention {
    // F_u
    Side u_triple_a = Side::below;   // base of Z^(3)_{bb',a}
    Side u_triple_d = Side::below;   // base of Z^(3)_{bb',d}
    bool u_swap_a = false;           // conjugator order of the first triple
    bool u_swap_d = false;
    bool u_wind_a = true;            // wound third cusp (conjugator power -3)
    bool u_wind_d = true;
    Side u_nf = Side::below;         // Z^2_{a'd}
    Side u_nf2 = Side::below;        // Z^2_{ad}
    Side u_cb = Side::below;         // (Z_{cb'})
    Side u_cb_at_b = Side::below;    // its passage of b
    Side u_cb_at_cp = Side::below;   // its passage of c'
    Side u_cpb = Side::below;        // (Z_{c'b})
    // F_l
    Side l_triple_d = Side::below;   // base of Z^(3)_{d',cc'}
    Side l_triple_a = Side::below;   // base of Z^(3)_{a',cc'}
    bool l_swap_d = false;
    bool l_swap_a = false;
    bool l_wind_d = true;
    bool l_wind_a = true;
    Side l_nf = Side::below;         // Z^2_{a'd}
    Side l_nf2 = Side::below;        // Z^2_{a'd'}
    Side l_cb1 = Side::above;        // (Zbar_{cb'}) as printed
    Side l_cb2 = Side::below;        // (Z_{cb'})
    Side l_cb_at_cp = Side::below;   // their passage of c' (when c < b)
    Side l_cb_at_b = Side::below;    // their passage of b (when c < b)
};

FSideConvention& f_side_convention();

/// The regenerated 4-point factorizations F_u / F_m / F_l over doubled
/// labels: the literal factor sequences of the published displays, each
/// half repeated conjugated by Z^-1_{aa'} Z^-1_{dd'}. 20 factors, degree 48.
SymFactors build_F(FKind kind, int a, int b, int c, int d, bool strict_order = false);

// --- local BMF from a singularity table ----------------------------------

struct TableRow {
    std::vector<Label> skeleton;           // 2 labels = path, more = sub-disk
    int eps = 2;                           // 1 branch, 2 node, 4 tangent
    std::optional<std::vector<ConjAtom>> conj_override;  // replaces transport
};

/// phi(delta_j) = Delta<(lambda_j)(prod delta_m)>^eps: every skeleton is
/// pushed through the earlier rows' local diffeomorphisms, accumulated as
/// conjugating atoms. Branch rows (eps 1) have no braid-valued diffeo; rows
/// after one must carry a conjugator override.
SymFactors local_bmf(const std::vector<TableRow>& rows);

/// The published 8-row table of the 5-point v_3 over {1,2,3,3',4,5}.
std::vector<TableRow> prop32_table();

/// The fully regenerated v_3 block in global numeration (lines 1,3,9,16,21),
/// derived from the table by the rules, with the published tail
/// (F_u(16,3,1,21) conjugated by Z^2_{33',9} Z^2_{11',9}).
SymFactors phi23_block();

// --- assembly -------------------------------------------------------------

/// Doubled parasitic factors of one entry: Z^2_{p',t'} Z^2_{p',t} Z^2_{p,t'}
/// Z^2_{p,t}, sides inherited over both members of each pair.
SymFactors doubled_parasitic(const ParasiticEntry& e, const std::string& group);

/// Delta~ = prod_{j=10..1} C_{2,j} phi_{2,j} over B_48.
Factorization assemble_phi2_prebranch(const IncidenceModel& m);

/// Extra branch factors b_n: for each line with deg(f_i(Delta~)) = k < 2,
/// (2-k) copies of Z_{i,i'}; k > 2 is a hard error.
std::vector<Factor> extra_branch_factors(const IncidenceModel& m, const Factorization& prebranch);

Factorization assemble_phi2(const IncidenceModel& m);
Factorization assemble_phi1(const IncidenceModel& m);

/// deg(f_i(w)) per base label i of a doubled model.
std::vector<long long> forgetting_degrees(const Factorization& f);

}  // namespace braidforge

#endif
