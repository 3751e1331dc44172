#ifndef BRAIDFORGE_VANKAMPEN_HPP
#define BRAIDFORGE_VANKAMPEN_HPP

#include <map>
#include <optional>

#include "braidforge/coset.hpp"
#include "braidforge/factorization.hpp"
#include "braidforge/fpgroup.hpp"
#include "braidforge/incidence.hpp"

namespace braidforge {

/// The loop pair of a half-twist V: B is the free generator of the left
/// endpoint of V's transposition, A its image under the inverse action,
/// so that (A)V = B. The relator is A.B^-1 / [A,B] / <A,B> by the factor's
/// exponent.
struct LoopPair {
    FreeWord A, B;
};

LoopPair loop_pair(const BraidWord& realized_half_twist);

enum class RelationStyle { classified, fallback };

/// Zariski-van Kampen relations of a factorization with exponents in
/// {1,2,3}. Classified: one relator per factor from its loop pair.
/// Fallback: relators x^-1 (x)V^nu for every moved generator (presents the
/// same group; used as the soundness cross-check). With `projective`, the
/// product of all generators is appended.
FPGroup vk_relations(const Factorization& f, bool projective,
                     RelationStyle style = RelationStyle::classified);

/// Generator names for the punctures of K ("G3", "G3p" for 3').
std::vector<std::string> puncture_generator_names(const PunctureSet& K);

struct PermutationRep {
    int sheet_count = 0;
    std::vector<Perm> images;  // per generator of the presentation

    Perm evaluate(const FreeWord& w) const;
};

struct MonodromyReport {
    PermutationRep rep;
    bool all_relators_vanish = true;
    std::vector<size_t> failing_relators;
    bool generates_symmetric_group = false;
};

/// Theta: each generator Gamma_j / Gamma_j' maps to the transposition of
/// the two planes glued along line j. Checks every relator of `g` and the
/// transitivity of the image.
MonodromyReport geometric_monodromy(const FPGroup& g, const IncidenceModel& m,
                                    const PunctureSet& K);

/// B~_n: the quotient of an Artin-style presentation by one transversal
/// commutator [X, Y]. The designated pair is checked to be transversal
/// (transpositions sharing no point, paths crossing an odd number of times).
FPGroup btilde_presentation(const FPGroup& base, const FreeWord& x, const FreeWord& y,
                            const PermutationRep& rep);

/// The published B_16 frame for the magician surface: generators T_i over
/// the spanning-tree lines, braid relations for consecutive pairs, commuting
/// relations for disjoint pairs and one star relator, plus the defining
/// words of the missing T_j. Built from the incidence model; the embedding
/// of the tree is the reconstructed part.
struct BtildeFrame {
    FPGroup presentation;
    std::vector<int> tree_lines;                 // generator labels, in order
    std::map<int, FreeWord> missing_definitions; // line -> word in the frame
};

BtildeFrame btilde16_frame(const IncidenceModel& m);

}  // namespace braidforge

#endif
