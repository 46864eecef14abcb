#include "assprime/ass_engine.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "assprime/errors.hpp"

namespace assprime {

namespace {

constexpr long long kWitnessBoxGuard = 10'000'000;
constexpr int kSupportEnumerationCap = 20;

void require_proper_nonzero(const MonomialIdeal& I, const char* where) {
    if (I.is_zero())
        throw DomainError(std::string(where) + ": ideal must be nonzero");
    if (I.is_unit())
        throw DomainError(std::string(where) + ": ideal must be proper");
}

using GensKey = std::vector<std::vector<int>>;

GensKey key_of(const MonomialIdeal& I) {
    GensKey k;
    k.reserve(I.num_gens());
    for (const auto& g : I.gens()) k.push_back(g.exps());
    return k;
}

bool component_less(const IrreducibleComponent& a,
                    const IrreducibleComponent& b) {
    return a.pure_powers < b.pure_powers;
}

// Splits until every generator is a pure power.  Revisited ideals are
// skipped: they contribute the same components along every path.
void split_rec(const MonomialIdeal& I, std::set<GensKey>& seen,
               std::vector<IrreducibleComponent>& out) {
    if (!seen.insert(key_of(I)).second) return;

    // Pivot: the generator with the largest support (first such in
    // canonical order), split off its highest variable power.
    int pivot = -1, pivot_size = 1;
    for (int g = 0; g < I.num_gens(); ++g) {
        int s = static_cast<int>(I.gens()[g].support().size());
        if (s > pivot_size) {
            pivot = g;
            pivot_size = s;
        }
    }
    if (pivot < 0) {
        // All generators are pure powers: one exponent per variable
        // since the set is minimal.
        IrreducibleComponent c{I.ring(), {}};
        for (const auto& g : I.gens())
            for (int i : g.support()) c.pure_powers.emplace_back(i, g.exp(i));
        std::sort(c.pure_powers.begin(), c.pure_powers.end());
        out.push_back(std::move(c));
        return;
    }

    const Monomial& g = I.gens()[pivot];
    int var = 0, best = -1;
    for (int i = 0; i < g.num_vars(); ++i)
        if (g.exp(i) > best) {
            best = g.exp(i);
            var = i;
        }
    std::vector<int> u_exps(g.num_vars(), 0), v_exps = g.exps();
    u_exps[var] = g.exp(var);
    v_exps[var] = 0;
    Monomial u(std::move(u_exps)), v(std::move(v_exps));

    std::vector<Monomial> with_u = I.gens(), with_v = I.gens();
    with_u.push_back(u);
    with_v.push_back(v);
    split_rec(minimalize(I.ring(), std::move(with_u)), seen, out);
    split_rec(minimalize(I.ring(), std::move(with_v)), seen, out);
}

bool component_contains(const IrreducibleComponent& c,
                        const std::vector<int>& exps) {
    for (auto [var, a] : c.pure_powers)
        if (exps[var] >= a) return true;
    return false;
}

// Keeps exactly the components of the unique minimal decomposition.
// C_i is irredundant iff its corner monomial (exponent a-1 on the
// component's variables, a common large value elsewhere) lies in every
// other component.
std::vector<IrreducibleComponent> drop_redundant(
    std::vector<IrreducibleComponent> comps, int num_vars) {
    std::sort(comps.begin(), comps.end(), component_less);
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    int big = 1;
    for (const auto& c : comps)
        for (auto [var, a] : c.pure_powers) {
            (void)var;
            big = std::max(big, a + 1);
        }
    std::vector<char> keep(comps.size(), 1);
    for (size_t i = 0; i < comps.size(); ++i) {
        std::vector<int> corner(num_vars, big);
        for (auto [var, a] : comps[i].pure_powers) corner[var] = a - 1;
        for (size_t j = 0; j < comps.size() && keep[i]; ++j)
            if (j != i && !component_contains(comps[j], corner)) keep[i] = 0;
    }
    std::vector<IrreducibleComponent> kept;
    for (size_t i = 0; i < comps.size(); ++i)
        if (keep[i]) kept.push_back(std::move(comps[i]));
    return kept;
}

// Image of I in the localization that inverts every variable off S:
// exponents outside S are deleted, then the generators re-minimalized.
MonomialIdeal delete_off_support(const MonomialIdeal& I,
                                 const std::vector<char>& in_S) {
    std::vector<Monomial> gens;
    gens.reserve(I.num_gens());
    for (const auto& g : I.gens()) {
        std::vector<int> e = g.exps();
        for (size_t i = 0; i < e.size(); ++i)
            if (!in_S[i]) e[i] = 0;
        gens.emplace_back(std::move(e));
    }
    return minimalize(I.ring(), std::move(gens));
}

// Decides whether the prime on S is associated to U/V by searching the
// witness box: m with support in S, m ∈ U[S], m ∉ V[S], x_i·m ∈ V[S]
// for all i ∈ S.  Any witness has exp_i < (max x_i-exponent in V[S]).
bool support_is_associated(const MonomialIdeal& U, const MonomialIdeal& V,
                           const std::vector<int>& S) {
    int v = U.ring().num_vars();
    std::vector<char> in_S(v, 0);
    for (int i : S) in_S[i] = 1;
    MonomialIdeal US = delete_off_support(U, in_S);
    MonomialIdeal VS = delete_off_support(V, in_S);

    long long volume = 1;
    std::vector<int> box(S.size());
    for (size_t k = 0; k < S.size(); ++k) {
        box[k] = VS.max_exp(S[k]);
        if (box[k] == 0) return false;
        volume *= box[k];
        if (volume > kWitnessBoxGuard)
            throw ResourceError(
                "ass_module: witness box exceeds the 10^7 guard");
    }

    std::vector<int> exps(v, 0);
    for (long long code = 0; code < volume; ++code) {
        long long rest = code;
        for (size_t k = 0; k < S.size(); ++k) {
            exps[S[k]] = static_cast<int>(rest % box[k]);
            rest /= box[k];
        }
        Monomial m(exps);
        if (!contains(US, m) || contains(VS, m)) continue;
        bool socle = true;
        for (size_t k = 0; k < S.size() && socle; ++k) {
            ++exps[S[k]];
            if (!contains(VS, Monomial(exps))) socle = false;
            --exps[S[k]];
        }
        if (socle) return true;
    }
    return false;
}

// Candidate supports: all nonempty subsets of supp(V) (no associated
// prime can involve a variable absent from V).  Past the enumeration
// cap, falls back to unions of generator supports — a documented
// heuristic, unreachable at the scale the guards allow.
std::vector<std::vector<int>> candidate_supports(const MonomialIdeal& V) {
    std::vector<int> supp = V.support();
    int s = static_cast<int>(supp.size());
    std::vector<std::vector<int>> out;
    if (s <= kSupportEnumerationCap) {
        for (unsigned long long mask = 1; mask < (1ULL << s); ++mask) {
            std::vector<int> S;
            for (int k = 0; k < s; ++k)
                if (mask >> k & 1) S.push_back(supp[k]);
            out.push_back(std::move(S));
        }
        return out;
    }
    std::set<std::vector<int>> closure;
    for (const auto& g : V.gens()) closure.insert(g.support());
    for (;;) {
        std::set<std::vector<int>> next = closure;
        for (const auto& a : closure)
            for (const auto& b : closure) {
                std::vector<int> u;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                               std::back_inserter(u));
                next.insert(std::move(u));
            }
        if (next.size() == closure.size()) break;
        if (next.size() > (1ULL << kSupportEnumerationCap))
            throw ResourceError("ass_module: support closure too large");
        closure.swap(next);
    }
    out.assign(closure.begin(), closure.end());
    return out;
}

void check_module_inputs(const MonomialIdeal& U, const MonomialIdeal& V) {
    require_same_ring(U.ring(), V.ring(), "ass_module");
    if (V.is_zero()) throw DomainError("ass_module: V must be nonzero");
    if (!contains(U, V))
        throw ContainmentError("ass_module requires V to be contained in U");
}

SupportSet collect_associated(const MonomialIdeal& U, const MonomialIdeal& V,
                              bool parallel) {
    std::vector<std::vector<int>> cands = candidate_supports(V);
    int n = static_cast<int>(cands.size());
    std::vector<char> hit(n, 0);
    if (parallel) {
        // Exceptions (the witness-box guard) must not cross the omp join.
        std::exception_ptr pending = nullptr;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            try {
                hit[i] = support_is_associated(U, V, cands[i]) ? 1 : 0;
            } catch (...) {
#pragma omp critical
                if (!pending) pending = std::current_exception();
            }
        }
        if (pending) std::rethrow_exception(pending);
    } else {
        for (int i = 0; i < n; ++i)
            hit[i] = support_is_associated(U, V, cands[i]) ? 1 : 0;
    }
    std::vector<PrimeSupport> found;
    for (int i = 0; i < n; ++i)
        if (hit[i]) found.push_back(PrimeSupport{U.ring(), cands[i]});
    return sorted_support_set(std::move(found));
}

} // namespace

PrimeSupport IrreducibleComponent::radical() const {
    PrimeSupport p{ring, {}};
    p.vars.reserve(pure_powers.size());
    for (auto [var, a] : pure_powers) {
        (void)a;
        p.vars.push_back(var);
    }
    return p;
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(pure_powers.size());
    for (auto [var, a] : pure_powers) {
        std::vector<int> e(ring.num_vars(), 0);
        e[var] = a;
        gens.emplace_back(std::move(e));
    }
    return minimalize(ring, std::move(gens));
}

std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& I) {
    require_proper_nonzero(I, "irreducible_decomposition");
    std::set<GensKey> seen;
    std::vector<IrreducibleComponent> comps;
    split_rec(I, seen, comps);
    return drop_redundant(std::move(comps), I.ring().num_vars());
}

SupportSet ass_ring_quotient(const MonomialIdeal& I) {
    require_proper_nonzero(I, "ass_ring_quotient");
    std::vector<PrimeSupport> supports;
    for (const auto& c : irreducible_decomposition(I))
        supports.push_back(c.radical());
    return sorted_support_set(std::move(supports));
}

SupportSet ass_module(const MonomialIdeal& U, const MonomialIdeal& V) {
    check_module_inputs(U, V);
    return collect_associated(U, V, true);
}

SupportSet ass_module_serial(const MonomialIdeal& U, const MonomialIdeal& V) {
    check_module_inputs(U, V);
    return collect_associated(U, V, false);
}

AssProfile ass_profile(const MonomialIdeal& I, int max_n) {
    require_proper_nonzero(I, "ass_profile");
    if (max_n < 1) throw DomainError("ass_profile requires max_n >= 1");
    AssProfile profile;
    profile.ideal = I;
    profile.max_n = max_n;
    MonomialIdeal prev = MonomialIdeal::unit(I.ring());
    MonomialIdeal cur = I;
    for (int n = 1; n <= max_n; ++n) {
        profile.ass_ring_quotients.push_back(ass_ring_quotient(cur));
        profile.ass_consecutive.push_back(ass_module(prev, cur));
        if (n < max_n) {
            prev = cur;
            cur = multiply(cur, I);
        }
    }
    int m0 = max_n;
    while (m0 > 1 &&
           profile.ass_ring_quotients[m0 - 2] ==
               profile.ass_ring_quotients[max_n - 1] &&
           profile.ass_consecutive[m0 - 2] ==
               profile.ass_consecutive[max_n - 1])
        --m0;
    if (m0 < max_n) profile.astab_window = m0;
    return profile;
}

std::vector<bool> union_ass_check_per_n(const AssProfile& profile) {
    std::vector<bool> ok;
    SupportSet lhs, rhs;
    for (int n = 1; n <= profile.max_n; ++n) {
        lhs = support_set_union(lhs, profile.ass_ring_quotients[n - 1]);
        rhs = support_set_union(rhs, profile.ass_consecutive[n - 1]);
        ok.push_back(lhs == rhs);
    }
    return ok;
}

bool union_ass_check(const AssProfile& profile) {
    auto per_n = union_ass_check_per_n(profile);
    return std::all_of(per_n.begin(), per_n.end(), [](bool b) { return b; });
}

} // namespace assprime
