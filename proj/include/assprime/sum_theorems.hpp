#pragma once

#include <utility>

#include "assprime/ass_engine.hpp"

namespace assprime {

// All four Ass(R/(I+J)^n) computations side by side, in the joined ring.
struct SumAssReport {
    int n = 0;
    SupportSet lower_bound;
    SupportSet upper_bound;
    SupportSet formula_value;
    SupportSet direct_value;
    bool match = false; // formula_value == direct_value
};

// Windowed asymptotic description of Ass(R/(I+J)^n).
struct AsymptoticReport {
    int window = 0;
    // Windowed stabilization points of the two factors; absent when the
    // window shows no constant tail.
    std::optional<int> astab_left;
    std::optional<int> astab_right;
    // astab_left + astab_right - 1 when both are present.
    std::optional<int> threshold;
    bool conclusive = false; // both astabs found and threshold <= window
    // Union of joins over Ass* x Ass∞ and Ass∞ x Ass*; empty when
    // inconclusive.
    SupportSet asymptotic_set;
    // Closed interval of powers compared against the direct value;
    // empty (from > to) when inconclusive.
    int verified_from = 1;
    int verified_to = 0;
    bool matches_direct = false;
};

// Exact formula for monomial ideals:
// Ass(R/(I+J)^n) = ⋃_{i=1}^{n} { p ⊔ q : p ∈ Ass(A/I^i), q ∈ Ass(B/J^{n-i+1}) }.
// I and J live in rings with disjoint variable names.
SupportSet formula_ass_sum(const MonomialIdeal& I, const MonomialIdeal& J,
                           int n);

// General containments, evaluated with the consecutive-quotient sets:
// lower = ⋃_i joins of Ass(I^{i-1}/I^i) x Ass(J^{n-i}/J^{n-i+1}),
// upper = ⋃_i joins of Ass(A/I^i)      x Ass(J^{n-i}/J^{n-i+1}).
std::pair<SupportSet, SupportSet> bounds_ass_sum(const MonomialIdeal& I,
                                                 const MonomialIdeal& J,
                                                 int n);

// Ground truth: Ass of R/Q^n for Q = sum_disjoint(I, J), computed by
// the decomposition route in the joined ring.  Guarded: at most 12
// joined variables and generator degree at most 12.
SupportSet direct_ass_sum(const MonomialIdeal& I, const MonomialIdeal& J,
                          int n);

// Runs all four and checks the sandwich lower ⊆ direct ⊆ upper (a
// TheoremViolationError if it fails) plus formula == direct (reported,
// not thrown).
SumAssReport verify_sum_formula(const MonomialIdeal& I, const MonomialIdeal& J,
                                int n);

// Degreewise check of Q^{n-1}/Q^n ≅ ⊕_i (I^{i-1}/I^i ⊗ J^{n-i}/J^{n-i+1}):
// for every d ≤ dmax the Hilbert counts of both sides agree.
bool verify_decomposition(const MonomialIdeal& I, const MonomialIdeal& J,
                          int n, int dmax);

// Windowed evaluation of the asymptotic description and the threshold
// astab*(I) + astab*(J) - 1.
AsymptoticReport asymptotic_ass_sum(const MonomialIdeal& I,
                                    const MonomialIdeal& J, int window);

} // namespace assprime
