#ifndef BRAIDFORGE_FACTORIZATION_HPP
#define BRAIDFORGE_FACTORIZATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidforge/disk.hpp"
#include "braidforge/normal_form.hpp"

namespace braidforge {

enum class Provenance { paper, derived, reconstructed };

/// One factor of a braid monodromy factorization: a conjugated power of a
/// half-twist (exponent 1 branch, 2 node, 3 cusp, 4 tangent), or a
/// conjugated full twist on a sub-disk (the Delta^2<...> blocks).
struct Factor {
    enum class Kind { half_twist_power, sub_full_twist };
    Kind kind = Kind::half_twist_power;

    PathSpec path;                      // half_twist_power
    std::vector<Label> twist_support;   // sub_full_twist: punctures of the sub-disk
    int exponent = 1;                   // half_twist_power: 1..4
    BraidWord conjugator;               // realized = conjugator^-1 base conjugator
    std::string group;                  // audit ledger label
    Provenance provenance = Provenance::derived;

    BraidWord base_word(const PunctureSet& K) const;
    BraidWord realized(const PunctureSet& K) const;
    long long degree() const;
};

/// Full twist on the sub-disk spanned by `support`: the punctures are
/// gathered to the left end of the support below the axis, twisted, and
/// returned.
BraidWord sub_full_twist_word(const std::vector<Label>& support, const PunctureSet& K);

struct Factorization {
    PunctureSet ambient;
    std::vector<Factor> factors;

    BraidWord product() const;
    long long total_degree() const;
    Perm product_permutation() const;
};

enum class Direction { forward, inverse };

/// Hurwitz move R_k (1-based k < factor count):
/// forward (.., t_k, t_{k+1}, ..) -> (.., t_k t_{k+1} t_k^-1, t_k, ..).
Factorization hurwitz_move(const Factorization& f, int k, Direction dir);

enum class CheckStatus { pass, fail, unavailable };

struct BmfReport {
    bool degree_ok = false;
    bool permutation_ok = false;
    CheckStatus delta_squared = CheckStatus::unavailable;
    long long total_degree = 0;
    long long expected_degree = 0;
};

/// Checks deg = n(n-1), product permutation = id, and (within nf_letter_budget
/// word letters; 0 = unlimited) normal-form equality with Delta^2.
BmfReport verify_bmf(const Factorization& f, size_t nf_letter_budget = 0);

struct AuditRow {
    std::string group;
    int factor_count = 0;
    long long degree = 0;
};

struct AuditReport {
    std::vector<AuditRow> rows;  // insertion order of first appearance
    long long total = 0;
};

AuditReport degree_audit(const Factorization& f);

/// Geometric strand deletion: keeps the crossings both of whose strands
/// start at kept positions, re-indexed over the kept punctures.
BraidWord forget_strands(const BraidWord& w, const std::vector<int>& keep_positions);
BraidWord forget_strands(const BraidWord& w, const PunctureSet& K,
                         const std::vector<Label>& keep);

/// Conjugates every factor by h (distributed into the conjugator slots).
Factorization conjugate_factorization(const Factorization& f, const BraidWord& h);

struct OrbitResult {
    size_t states_visited = 0;
    bool budget_exhausted = false;
};

/// BFS over Hurwitz moves R_k^{+-1}; states keyed by the tuple of per-factor
/// (normal form, exponent). Visits at most `budget` states.
OrbitResult orbit_search(const Factorization& f, size_t budget);

struct EquivalenceResult {
    enum class Status { equivalent, not_within_budget };
    Status status = Status::not_within_budget;
    std::vector<int> certificate;  // moves +k = R_k, -k = R_k^-1
    size_t states_visited = 0;
};

/// Bounded search for a Hurwitz path f1 -> f2. Never reports inequivalence:
/// a miss is "not_within_budget". A returned certificate is replay-verified.
EquivalenceResult equivalent(const Factorization& f1, const Factorization& f2, size_t budget);

struct InvarianceResult {
    enum class Status { invariant, unknown };
    Status status = Status::unknown;
    std::vector<int> certificate;
    size_t states_visited = 0;
};

InvarianceResult invariance_check(const Factorization& f, const BraidWord& h, size_t budget);

}  // namespace braidforge

#endif
