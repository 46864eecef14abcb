#pragma once

#include <optional>
#include <vector>

#include "assprime/monomial_ideal.hpp"

namespace assprime {

// An irreducible monomial ideal (x_i^{a_i} : i), held as (variable,
// exponent) pairs sorted by variable index.
struct IrreducibleComponent {
    Ring ring;
    std::vector<std::pair<int, int>> pure_powers;

    PrimeSupport radical() const;
    MonomialIdeal to_ideal() const;

    friend bool operator==(const IrreducibleComponent& a,
                           const IrreducibleComponent& b) {
        return a.ring == b.ring && a.pure_powers == b.pure_powers;
    }
};

// Irredundant irreducible decomposition of a proper nonzero monomial
// ideal by recursive generator splitting.  The intersection of the
// returned components equals I, and dropping any component strictly
// enlarges the intersection.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& I);

// Ass(A/I) via irreducible decomposition: the supports of the
// irredundant components.  I must be proper and nonzero.
SupportSet ass_ring_quotient(const MonomialIdeal& I);

// Ass(U/V) via witness-box search, an algorithm independent of the
// decomposition route.  Requires V ⊆ U and V nonzero; U = V yields the
// empty set.  ass_module searches candidate supports concurrently;
// ass_module_serial is the reference loop.
SupportSet ass_module(const MonomialIdeal& U, const MonomialIdeal& V);
SupportSet ass_module_serial(const MonomialIdeal& U, const MonomialIdeal& V);

// Per-power associated-prime data for I, I^2, ..., I^max_n.
struct AssProfile {
    MonomialIdeal ideal;
    int max_n = 0;
    // [n-1] holds Ass(A/I^n).
    std::vector<SupportSet> ass_ring_quotients;
    // [n-1] holds Ass(I^{n-1}/I^n), with I^0 the unit ideal.
    std::vector<SupportSet> ass_consecutive;
    // Least m < max_n with both families constant on [m, max_n]; absent
    // when only the final entry would qualify (no evidence of a tail).
    std::optional<int> astab_window;
};

AssProfile ass_profile(const MonomialIdeal& I, int max_n);

// Prefix-union identity: ⋃_{i<=n} Ass(A/I^i) = ⋃_{i<=n} Ass(I^{i-1}/I^i),
// checked for each n up to max_n.
std::vector<bool> union_ass_check_per_n(const AssProfile& profile);
bool union_ass_check(const AssProfile& profile);

} // namespace assprime
