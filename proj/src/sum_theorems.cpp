#include "assprime/sum_theorems.hpp"

#include "assprime/errors.hpp"
#include "assprime/hilbert.hpp"

namespace assprime {

namespace {

constexpr int kMaxJoinedVars = 12;
constexpr long long kMaxGeneratorDegree = 12;

void check_sum_inputs(const MonomialIdeal& I, const MonomialIdeal& J, int n,
                      const char* where) {
    if (!I.is_proper() || !J.is_proper())
        throw DomainError(std::string(where) +
                          ": both ideals must be proper and nonzero");
    if (n < 1) throw DomainError(std::string(where) + ": requires n >= 1");
}

std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& I, int n) {
    std::vector<MonomialIdeal> P;
    P.reserve(n + 1);
    P.push_back(MonomialIdeal::unit(I.ring()));
    for (int k = 1; k <= n; ++k) P.push_back(multiply(P.back(), I));
    return P;
}

SupportSet join_all(const SupportSet& left, const SupportSet& right,
                    const Ring& joined) {
    std::vector<PrimeSupport> out;
    out.reserve(left.size() * right.size());
    for (const auto& p : left)
        for (const auto& q : right) out.push_back(join_supports(p, q, joined));
    return sorted_support_set(std::move(out));
}

} // namespace

SupportSet formula_ass_sum(const MonomialIdeal& I, const MonomialIdeal& J,
                           int n) {
    check_sum_inputs(I, J, n, "formula_ass_sum");
    Ring joined = join_rings(I.ring(), J.ring());
    auto PI = powers_up_to(I, n), PJ = powers_up_to(J, n);
    SupportSet out;
    for (int i = 1; i <= n; ++i)
        out = support_set_union(
            out, join_all(ass_ring_quotient(PI[i]),
                          ass_ring_quotient(PJ[n - i + 1]), joined));
    return out;
}

std::pair<SupportSet, SupportSet> bounds_ass_sum(const MonomialIdeal& I,
                                                 const MonomialIdeal& J,
                                                 int n) {
    check_sum_inputs(I, J, n, "bounds_ass_sum");
    Ring joined = join_rings(I.ring(), J.ring());
    auto PI = powers_up_to(I, n), PJ = powers_up_to(J, n);
    SupportSet lower, upper;
    for (int i = 1; i <= n; ++i) {
        SupportSet cons_I = ass_module(PI[i - 1], PI[i]);
        SupportSet cons_J = ass_module(PJ[n - i], PJ[n - i + 1]);
        SupportSet ring_I = ass_ring_quotient(PI[i]);
        lower = support_set_union(lower, join_all(cons_I, cons_J, joined));
        upper = support_set_union(upper, join_all(ring_I, cons_J, joined));
    }
    return {lower, upper};
}

SupportSet direct_ass_sum(const MonomialIdeal& I, const MonomialIdeal& J,
                          int n) {
    check_sum_inputs(I, J, n, "direct_ass_sum");
    MonomialIdeal Q = sum_disjoint(I, J);
    if (Q.ring().num_vars() > kMaxJoinedVars)
        throw ResourceError("direct_ass_sum: joined ring has more than " +
                            std::to_string(kMaxJoinedVars) + " variables");
    if (Q.max_degree() > kMaxGeneratorDegree)
        throw ResourceError("direct_ass_sum: generator degree exceeds " +
                            std::to_string(kMaxGeneratorDegree));
    return ass_ring_quotient(power(Q, n));
}

SumAssReport verify_sum_formula(const MonomialIdeal& I, const MonomialIdeal& J,
                                int n) {
    SumAssReport report;
    report.n = n;
    auto [lower, upper] = bounds_ass_sum(I, J, n);
    report.lower_bound = std::move(lower);
    report.upper_bound = std::move(upper);
    report.formula_value = formula_ass_sum(I, J, n);
    report.direct_value = direct_ass_sum(I, J, n);
    if (!is_subset(report.lower_bound, report.direct_value) ||
        !is_subset(report.direct_value, report.upper_bound))
        throw TheoremViolationError(
            "verify_sum_formula: sandwich lower ⊆ direct ⊆ upper failed");
    report.match = report.formula_value == report.direct_value;
    return report;
}

bool verify_decomposition(const MonomialIdeal& I, const MonomialIdeal& J,
                          int n, int dmax) {
    check_sum_inputs(I, J, n, "verify_decomposition");
    if (dmax < 0)
        throw DomainError("verify_decomposition: requires dmax >= 0");
    MonomialIdeal Q = sum_disjoint(I, J);
    MonomialIdeal Qprev = power(Q, n - 1), Qn = multiply(Qprev, Q);
    auto PI = powers_up_to(I, n), PJ = powers_up_to(J, n);

    // count[i][d] for the two factor families, d <= dmax.
    auto counts = [&](const std::vector<MonomialIdeal>& P, int k, int d) {
        return hilbert_count(P[k], P[k + 1], d);
    };
    for (int d = 0; d <= dmax; ++d) {
        long long lhs = hilbert_count(Qprev, Qn, d);
        long long rhs = 0;
        for (int i = 1; i <= n; ++i)
            for (int a = 0; a <= d; ++a) {
                long long ca = counts(PI, i - 1, a);
                if (ca == 0) continue;
                rhs += ca * counts(PJ, n - i, d - a);
            }
        if (lhs != rhs) return false;
    }
    return true;
}

AsymptoticReport asymptotic_ass_sum(const MonomialIdeal& I,
                                    const MonomialIdeal& J, int window) {
    check_sum_inputs(I, J, window, "asymptotic_ass_sum");
    AsymptoticReport report;
    report.window = window;
    AssProfile left = ass_profile(I, window);
    AssProfile right = ass_profile(J, window);
    report.astab_left = left.astab_window;
    report.astab_right = right.astab_window;
    if (!left.astab_window || !right.astab_window) return report;
    int threshold = *left.astab_window + *right.astab_window - 1;
    report.threshold = threshold;
    if (threshold > window) return report;
    report.conclusive = true;

    Ring joined = join_rings(I.ring(), J.ring());
    SupportSet star_I, star_J;
    for (int i = 1; i <= window; ++i) {
        star_I = support_set_union(star_I, left.ass_ring_quotients[i - 1]);
        star_J = support_set_union(star_J, right.ass_ring_quotients[i - 1]);
    }
    const SupportSet& inf_I = left.ass_ring_quotients[window - 1];
    const SupportSet& inf_J = right.ass_ring_quotients[window - 1];

    std::vector<PrimeSupport> all;
    for (const auto& p : star_I)
        for (const auto& q : inf_J) all.push_back(join_supports(p, q, joined));
    for (const auto& p : inf_I)
        for (const auto& q : star_J) all.push_back(join_supports(p, q, joined));
    report.asymptotic_set = sorted_support_set(std::move(all));

    report.verified_from = threshold;
    report.verified_to = window;
    report.matches_direct = true;
    for (int n = threshold; n <= window; ++n)
        if (direct_ass_sum(I, J, n) != report.asymptotic_set) {
            report.matches_direct = false;
            break;
        }
    return report;
}

} // namespace assprime
