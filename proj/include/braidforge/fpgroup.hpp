#ifndef BRAIDFORGE_FPGROUP_HPP
#define BRAIDFORGE_FPGROUP_HPP

#include <string>
#include <vector>

#include "braidforge/freegroup.hpp"

namespace braidforge {

/// Finitely presented group: generator labels and freely plus cyclically
/// reduced relator words.
struct FPGroup {
    std::vector<std::string> generators;
    std::vector<FreeWord> relators;

    void add_relator(FreeWord w);
    int generator_index(const std::string& name) const;  // 1-based, 0 if absent
};

/// Invariant factors of the abelianization: torsion coefficients (each
/// dividing the next) and the free rank.
struct AbelianInvariants {
    std::vector<long long> torsion;
    int free_rank = 0;

    bool operator==(const AbelianInvariants& o) const {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
    std::string str() const;
};

AbelianInvariants abelianize(const FPGroup& g);

/// Smith normal form diagonal of an integer matrix (destructive helper,
/// exposed for the oracle tests).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

/// Eliminates generators defined by relators g * w^-1 with |w| <= budget,
/// rewriting all other relators; each step is a Tietze transformation.
FPGroup tietze_simplify(const FPGroup& g, size_t budget);

/// Presentation text in the external format: relators as G1*G9*G1^-1 lines.
std::string print_presentation(const FPGroup& g);
FPGroup parse_presentation(const std::string& text);

}  // namespace braidforge

#endif
