#pragma once

#include <cstdint>
#include <utility>

#include "assprime/monomial_ideal.hpp"

namespace assprime {

struct CorpusParams {
    int max_vars = 3; // 1..6, bounded by the variable name pools
    int max_gens = 4; // at least 1
    int max_deg = 4;  // at least 1; exponents are drawn from [0, max_deg]
};

// Deterministic corpus of random monomial ideals.  The stream is fixed by
// (seed, params) alone: splitmix64 drives every draw, bounded draws take
// next() mod n, and each ideal consumes draws in a fixed order (variable
// count, generator count, then per generator one exponent per variable,
// rejecting the zero vector).  Left and right ideals use disjoint variable
// name pools so pairs always live in joinable rings.
class CorpusGenerator {
public:
    CorpusGenerator(uint64_t seed, CorpusParams params);

    MonomialIdeal next_ideal();                            // left name pool
    std::pair<MonomialIdeal, MonomialIdeal> next_pair();   // left, right

private:
    uint64_t next();
    uint64_t below(uint64_t n);
    MonomialIdeal draw(const char* const* pool);

    uint64_t state_;
    CorpusParams params_;
};

} // namespace assprime
