#pragma once

#include "assprime/monomial_ideal.hpp"

namespace assprime {

// Number of monomials of total degree d lying in U but not in V.
// Requires V ⊆ U.  Refuses when the ambient count C(d+v-1, v-1)
// exceeds the enumeration guard (10^7).
//
// hilbert_count splits the enumeration across threads by the first
// exponent; hilbert_count_serial is the plain recursive reference the
// tests and benchmarks compare against.
long long hilbert_count(const MonomialIdeal& U, const MonomialIdeal& V,
                        int d);
long long hilbert_count_serial(const MonomialIdeal& U, const MonomialIdeal& V,
                               int d);

} // namespace assprime
