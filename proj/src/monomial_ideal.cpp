#include "assprime/monomial_ideal.hpp"

#include <algorithm>

#include "assprime/errors.hpp"

namespace assprime {

namespace {

void require_fits(const Ring& ring, const Monomial& m, const char* where) {
    if (m.num_vars() != ring.num_vars())
        throw RingMismatchError(std::string(where) +
                                ": monomial does not fit ring");
}

bool is_left_factor(const Ring& part, const Ring& joined) {
    if (part.num_vars() > joined.num_vars()) return false;
    for (int i = 0; i < part.num_vars(); ++i)
        if (part.name(i) != joined.name(i)) return false;
    return true;
}

bool is_right_factor(const Ring& part, const Ring& joined) {
    int off = joined.num_vars() - part.num_vars();
    if (off < 0) return false;
    for (int i = 0; i < part.num_vars(); ++i)
        if (part.name(i) != joined.name(off + i)) return false;
    return true;
}

} // namespace

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens) {
    for (const auto& g : gens) require_fits(ring, g, "minimalize");
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Ascending canonical order, so any strict divisor of g precedes g.
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& k : kept)
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    MonomialIdeal I(ring);
    I.gens_ = std::move(kept);
    return I;
}

MonomialIdeal MonomialIdeal::unit(const Ring& ring) {
    return minimalize(ring, {Monomial::unit(ring.num_vars())});
}

MonomialIdeal make_ideal(const Ring& ring,
                         const std::vector<std::vector<int>>& exps) {
    std::vector<Monomial> gens;
    gens.reserve(exps.size());
    for (const auto& e : exps) gens.emplace_back(e);
    return minimalize(ring, std::move(gens));
}

int MonomialIdeal::max_exp(int i) const {
    int m = 0;
    for (const auto& g : gens_) m = std::max(m, g.exp(i));
    return m;
}

long long MonomialIdeal::max_degree() const {
    long long d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::vector<int> MonomialIdeal::support() const {
    std::vector<int> s;
    for (int i = 0; i < ring_.num_vars(); ++i)
        if (max_exp(i) > 0) s.push_back(i);
    return s;
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    require_fits(I.ring(), m, "contains");
    for (const auto& g : I.gens())
        if (divides(g, m)) return true;
    return false;
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "contains");
    for (const auto& g : J.gens())
        if (!contains(I, g)) return false;
    return true;
}

MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "add");
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "multiply");
    std::vector<Monomial> gens;
    gens.reserve(static_cast<size_t>(I.num_gens()) * J.num_gens());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) gens.push_back(product(a, b));
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int n) {
    if (n < 0) throw DomainError("ideal power requires n >= 0");
    if (n == 0) return MonomialIdeal::unit(I.ring());
    MonomialIdeal R = I;
    for (int k = 1; k < n; ++k) R = multiply(R, I);
    return R;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "intersect");
    std::vector<Monomial> gens;
    gens.reserve(static_cast<size_t>(I.num_gens()) * J.num_gens());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) gens.push_back(lcm(a, b));
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
    require_fits(I.ring(), m, "colon");
    std::vector<Monomial> gens;
    gens.reserve(I.num_gens());
    for (const auto& g : I.gens()) gens.push_back(colon_quotient(g, m));
    return minimalize(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I.ring(), J.ring(), "colon");
    if (J.is_zero())
        throw DomainError("colon by the zero ideal is undefined");
    bool first = true;
    MonomialIdeal R;
    for (const auto& g : J.gens()) {
        MonomialIdeal C = colon(I, g);
        R = first ? C : intersect(R, C);
        first = false;
    }
    return R;
}

MonomialIdeal saturate(const MonomialIdeal& I, const Monomial& m) {
    MonomialIdeal R = I;
    for (;;) {
        MonomialIdeal next = colon(R, m);
        if (next == R) return R;
        R = next;
    }
}

MonomialIdeal lift(const MonomialIdeal& I, const Ring& joined, Side side) {
    const Ring& part = I.ring();
    int pad = joined.num_vars() - part.num_vars();
    if (side == Side::left ? !is_left_factor(part, joined)
                           : !is_right_factor(part, joined))
        throw RingMismatchError("lift: ideal ring is not a factor of the "
                                "joined ring on the requested side");
    std::vector<Monomial> gens;
    gens.reserve(I.num_gens());
    for (const auto& g : I.gens()) {
        std::vector<int> e;
        e.reserve(joined.num_vars());
        if (side == Side::right) e.assign(pad, 0);
        e.insert(e.end(), g.exps().begin(), g.exps().end());
        if (side == Side::left) e.insert(e.end(), pad, 0);
        gens.emplace_back(std::move(e));
    }
    return minimalize(joined, std::move(gens));
}

MonomialIdeal sum_disjoint(const MonomialIdeal& I, const MonomialIdeal& J) {
    Ring joined = join_rings(I.ring(), J.ring());
    return add(lift(I, joined, Side::left), lift(J, joined, Side::right));
}

std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "(0)";
    std::string out = "(";
    for (int i = 0; i < I.num_gens(); ++i) {
        if (i) out += ", ";
        out += to_string(I.gens()[i], I.ring());
    }
    return out + ")";
}

std::vector<std::string> PrimeSupport::names() const {
    std::vector<std::string> out;
    out.reserve(vars.size());
    for (int v : vars) out.push_back(ring.name(v));
    return out;
}

bool support_less(const PrimeSupport& a, const PrimeSupport& b) {
    if (a.vars.size() != b.vars.size())
        return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
}

SupportSet sorted_support_set(std::vector<PrimeSupport> supports) {
    std::sort(supports.begin(), supports.end(), support_less);
    supports.erase(std::unique(supports.begin(), supports.end()),
                   supports.end());
    return supports;
}

bool support_set_contains(const SupportSet& set, const PrimeSupport& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

bool is_subset(const SupportSet& a, const SupportSet& b) {
    return std::all_of(a.begin(), a.end(), [&](const PrimeSupport& p) {
        return support_set_contains(b, p);
    });
}

SupportSet support_set_union(const SupportSet& a, const SupportSet& b) {
    std::vector<PrimeSupport> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return sorted_support_set(std::move(all));
}

PrimeSupport join_supports(const PrimeSupport& p, const PrimeSupport& q,
                           const Ring& joined) {
    if (p.ring.num_vars() + q.ring.num_vars() != joined.num_vars() ||
        !is_left_factor(p.ring, joined) || !is_right_factor(q.ring, joined))
        throw RingMismatchError(
            "join_supports: rings do not compose to the joined ring");
    PrimeSupport out{joined, p.vars};
    for (int v : q.vars) out.vars.push_back(v + p.ring.num_vars());
    return out;
}

std::string to_string(const PrimeSupport& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.vars.size(); ++i) {
        if (i) out += ",";
        out += p.ring.name(p.vars[i]);
    }
    return out + ")";
}

std::string to_string(const SupportSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += to_string(s[i]);
    }
    return out + "}";
}

} // namespace assprime
