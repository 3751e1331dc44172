#ifndef BRAIDFORGE_COSET_HPP
#define BRAIDFORGE_COSET_HPP

#include "braidforge/fpgroup.hpp"

namespace braidforge {

struct CosetResult {
    enum class Status { finished, exceeded };
    Status status = Status::exceeded;
    long long index = 0;
    size_t cosets_defined = 0;
    /// table[c][2g-2] = c.x_g, table[c][2g-1] = c.x_g^-1 (0-based cosets)
    std::vector<std::vector<int>> table;
    bool certified = false;
};

/// HLT-style coset enumeration over a subgroup with a hard limit on the
/// number of live cosets. On completion every relator is re-scanned at
/// every coset and the subgroup generators at coset 0; only then is the
/// table reported as a certificate. Exceeding the limit never misreports.
CosetResult todd_coxeter(const FPGroup& g, const std::vector<FreeWord>& subgroup_gens,
                         size_t limit);

}  // namespace braidforge

#endif
