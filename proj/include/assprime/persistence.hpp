#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "assprime/ass_engine.hpp"
#include "assprime/monomial_ideal.hpp"

namespace assprime {

// Verdicts for the inclusion chain Ass(A/I^n) ⊆ Ass(A/I^{n+1}) on a window.
struct PersistenceReport {
    MonomialIdeal ideal;
    int max_n = 0;
    // [n-1] holds the verdict for n = 1..max_n-1.
    std::vector<bool> inclusions;
    // First failing n, with a prime in Ass(A/I^n) \ Ass(A/I^{n+1}).
    std::optional<std::pair<int, PrimeSupport>> first_failure;

    bool passed() const { return !first_failure.has_value(); }
};

// Result of iterating C_i = I^{i+1} : I^i.  The chain ascends and its union
// is the Ratliff-Rush closure; cap_hit means the iteration stopped before
// two consecutive colons agreed, so closure is only a lower approximation.
struct RatliffRushReport {
    MonomialIdeal closure;
    int stabilized_at = 0;
    bool cap_hit = false;
};

// Windowed strong-persistence equivalences, per n = 1..max_n:
//   colon_stable:        I^{n+1} : I = I^n
//   colon_meet_stable:   (I^{n+1} : I) ∩ I^{n-1} = I^n
//   ratliff_rush_closed: I^n equals its Ratliff-Rush closure (iterated to
//                        the same window)
// The depth criterion on the associated graded ring is not computed.
struct EquivalenceReport {
    MonomialIdeal ideal;
    int max_n = 0;
    std::vector<bool> colon_stable;
    std::vector<bool> colon_meet_stable;
    std::vector<bool> ratliff_rush_closed;
    bool verdicts_agree = false;    // the three windowed conjunctions coincide
    bool implication_holds = false; // windowed colon stability => persistence
};

enum class TransferStatus {
    passed,
    hypothesis_not_met, // the left ideal fails persistence on the window
    theorem_violation,  // hypothesis held yet the sum failed: a bug
};

struct TransferReport {
    TransferStatus status = TransferStatus::passed;
    PersistenceReport left;
    // Inclusion verdicts for the joined ideal, n = 1..max_n-1; empty when
    // the hypothesis already failed.
    std::vector<bool> sum_inclusions;
};

PersistenceReport persistence_check(const MonomialIdeal& I, int max_n);

// [n-1] holds the verdict of I^{n+1} : I == I^n for n = 1..max_n.
std::vector<bool> strong_persistence_check(const MonomialIdeal& I, int max_n);

RatliffRushReport ratliff_rush(const MonomialIdeal& I, int cap = 10);

EquivalenceReport strong_persistence_equivalences(const MonomialIdeal& I,
                                                  int max_n);

// [n-2] holds the verdict of I^n : (x_1,...,x_v) ⊆ I^{n-1} for n = 2..max_n.
std::vector<bool> socle_colon_check(const MonomialIdeal& I, int max_n);

// Persistence of I transfers to sum_disjoint(I, J); J is unconstrained.
// The joined profile is computed power by power in the joined ring.
TransferReport persistence_transfer_check(const MonomialIdeal& I,
                                          const MonomialIdeal& J, int max_n);

} // namespace assprime
