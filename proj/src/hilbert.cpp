#include "assprime/hilbert.hpp"

#include "assprime/errors.hpp"

namespace assprime {

namespace {

constexpr long long kEnumerationGuard = 10'000'000;

// C(n, k) capped at the guard so overflow cannot occur.
long long binom_capped(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kEnumerationGuard) return kEnumerationGuard + 1;
    }
    return r;
}

// Counts completions of exps[0..pos) to a degree-d vector, restricted
// to members of U that are not in V.
long long count_tail(const MonomialIdeal& U, const MonomialIdeal& V,
                     std::vector<int>& exps, int pos, int remaining) {
    int v = static_cast<int>(exps.size());
    if (pos == v - 1) {
        exps[pos] = remaining;
        Monomial m(exps);
        long long hit = (contains(U, m) && !contains(V, m)) ? 1 : 0;
        exps[pos] = 0;
        return hit;
    }
    long long total = 0;
    for (int e = 0; e <= remaining; ++e) {
        exps[pos] = e;
        total += count_tail(U, V, exps, pos + 1, remaining - e);
    }
    exps[pos] = 0;
    return total;
}

void check_inputs(const MonomialIdeal& U, const MonomialIdeal& V, int d) {
    require_same_ring(U.ring(), V.ring(), "hilbert_count");
    if (d < 0) throw DomainError("hilbert_count requires d >= 0");
    if (!contains(U, V))
        throw ContainmentError("hilbert_count requires V to be contained in U");
    int v = U.ring().num_vars();
    if (binom_capped(static_cast<long long>(d) + v - 1, v - 1) >
        kEnumerationGuard)
        throw ResourceError(
            "hilbert_count: C(d+v-1, v-1) exceeds the 10^7 enumeration guard");
}

} // namespace

long long hilbert_count_serial(const MonomialIdeal& U, const MonomialIdeal& V,
                               int d) {
    check_inputs(U, V, d);
    int v = U.ring().num_vars();
    if (v == 0) {
        Monomial m(std::vector<int>{});
        return (d == 0 && contains(U, m) && !contains(V, m)) ? 1 : 0;
    }
    std::vector<int> exps(v, 0);
    return count_tail(U, V, exps, 0, d);
}

long long hilbert_count(const MonomialIdeal& U, const MonomialIdeal& V,
                        int d) {
    check_inputs(U, V, d);
    int v = U.ring().num_vars();
    if (v == 0) {
        Monomial m(std::vector<int>{});
        return (d == 0 && contains(U, m) && !contains(V, m)) ? 1 : 0;
    }
    if (v == 1) {
        std::vector<int> exps(1, 0);
        return count_tail(U, V, exps, 0, d);
    }
    long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (int e0 = 0; e0 <= d; ++e0) {
        std::vector<int> exps(v, 0);
        exps[0] = e0;
        total += count_tail(U, V, exps, 1, d - e0);
    }
    return total;
}

} // namespace assprime
