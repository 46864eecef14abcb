#include "assprime/gf.hpp"

#include <string>

#include "assprime/errors.hpp"

namespace assprime {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldSpec::FieldSpec(long long p) : p_(p) {
    if (p >= (1LL << 31) || !is_prime(p))
        throw DomainError("field characteristic must be a prime below 2^31, got " +
                          std::to_string(p));
}

long long FieldSpec::inv(long long a) const {
    if (a % p_ == 0) throw DomainError("division by zero in GF(p)");
    // Extended Euclid on (a, p); p prime makes every nonzero a invertible.
    long long r0 = reduce(a), r1 = p_, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return reduce(s0);
}

} // namespace assprime
