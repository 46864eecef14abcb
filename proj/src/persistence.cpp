#include "assprime/persistence.hpp"

#include <algorithm>

#include "assprime/errors.hpp"
#include "assprime/sum_theorems.hpp"

namespace assprime {

namespace {

void check_window(const MonomialIdeal& I, int max_n, const char* where) {
    if (!I.is_proper())
        throw DomainError(std::string(where) +
                          ": ideal must be proper and nonzero");
    if (max_n < 1) throw DomainError(std::string(where) + ": requires max_n >= 1");
}

// Verdicts plus first failure for a precomputed Ass(A/I^n) family.
void scan_inclusions(const std::vector<SupportSet>& ass, PersistenceReport& out) {
    int max_n = static_cast<int>(ass.size());
    for (int n = 1; n < max_n; ++n) {
        bool ok = is_subset(ass[n - 1], ass[n]);
        out.inclusions.push_back(ok);
        if (!ok && !out.first_failure) {
            for (const auto& p : ass[n - 1])
                if (!support_set_contains(ass[n], p)) {
                    out.first_failure = {n, p};
                    break;
                }
        }
    }
}

} // namespace

PersistenceReport persistence_check(const MonomialIdeal& I, int max_n) {
    check_window(I, max_n, "persistence_check");
    AssProfile profile = ass_profile(I, max_n);
    PersistenceReport report;
    report.ideal = I;
    report.max_n = max_n;
    scan_inclusions(profile.ass_ring_quotients, report);
    return report;
}

std::vector<bool> strong_persistence_check(const MonomialIdeal& I, int max_n) {
    check_window(I, max_n, "strong_persistence_check");
    std::vector<bool> verdicts;
    verdicts.reserve(max_n);
    MonomialIdeal Pn = I;
    for (int n = 1; n <= max_n; ++n) {
        MonomialIdeal Pnext = multiply(Pn, I);
        verdicts.push_back(colon(Pnext, I) == Pn);
        Pn = std::move(Pnext);
    }
    return verdicts;
}

RatliffRushReport ratliff_rush(const MonomialIdeal& I, int cap) {
    check_window(I, cap, "ratliff_rush");
    MonomialIdeal Pi = I;
    MonomialIdeal Pnext = multiply(I, I);
    MonomialIdeal cur = colon(Pnext, Pi);
    for (int i = 1; i < cap; ++i) {
        Pi = Pnext;
        Pnext = multiply(Pnext, I);
        MonomialIdeal nxt = colon(Pnext, Pi);
        if (nxt == cur) return {std::move(cur), i, false};
        cur = std::move(nxt);
    }
    return {std::move(cur), cap, true};
}

EquivalenceReport strong_persistence_equivalences(const MonomialIdeal& I,
                                                  int max_n) {
    check_window(I, max_n, "strong_persistence_equivalences");
    EquivalenceReport report;
    report.ideal = I;
    report.max_n = max_n;

    std::vector<MonomialIdeal> P;
    P.push_back(MonomialIdeal::unit(I.ring()));
    for (int k = 1; k <= max_n + 1; ++k) P.push_back(multiply(P.back(), I));

    for (int n = 1; n <= max_n; ++n) {
        MonomialIdeal C = colon(P[n + 1], I);
        report.colon_stable.push_back(C == P[n]);
        report.colon_meet_stable.push_back(intersect(C, P[n - 1]) == P[n]);
        report.ratliff_rush_closed.push_back(
            ratliff_rush(P[n], max_n).closure == P[n]);
    }

    auto all = [](const std::vector<bool>& v) {
        return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    bool a = all(report.colon_stable);
    bool b = all(report.colon_meet_stable);
    bool c = all(report.ratliff_rush_closed);
    report.verdicts_agree = (a == b) && (b == c);
    report.implication_holds = !a || persistence_check(I, max_n).passed();
    return report;
}

std::vector<bool> socle_colon_check(const MonomialIdeal& I, int max_n) {
    check_window(I, max_n, "socle_colon_check");
    std::vector<Monomial> vars;
    for (int i = 0; i < I.ring().num_vars(); ++i)
        vars.push_back(Monomial::variable(I.ring().num_vars(), i));
    MonomialIdeal maximal = minimalize(I.ring(), std::move(vars));

    std::vector<bool> verdicts;
    MonomialIdeal Pprev = I;
    for (int n = 2; n <= max_n; ++n) {
        MonomialIdeal Pn = multiply(Pprev, I);
        verdicts.push_back(contains(Pprev, colon(Pn, maximal)));
        Pprev = std::move(Pn);
    }
    return verdicts;
}

TransferReport persistence_transfer_check(const MonomialIdeal& I,
                                          const MonomialIdeal& J, int max_n) {
    check_window(I, max_n, "persistence_transfer_check");
    check_window(J, max_n, "persistence_transfer_check");
    TransferReport report;
    report.left = persistence_check(I, max_n);
    if (!report.left.passed()) {
        report.status = TransferStatus::hypothesis_not_met;
        return report;
    }
    std::vector<SupportSet> joined;
    joined.reserve(max_n);
    for (int n = 1; n <= max_n; ++n) joined.push_back(direct_ass_sum(I, J, n));
    report.status = TransferStatus::passed;
    for (int n = 1; n < max_n; ++n) {
        bool ok = is_subset(joined[n - 1], joined[n]);
        report.sum_inclusions.push_back(ok);
        if (!ok) report.status = TransferStatus::theorem_violation;
    }
    return report;
}

} // namespace assprime
