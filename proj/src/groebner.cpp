#include "assprime/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "assprime/errors.hpp"

namespace assprime {

namespace {

// Packed exponent keys use 4 bits per variable, which bounds the engine.
constexpr int kMaxPackedVars = 16;
constexpr int kMaxTruncationDegree = 15;

uint64_t packed_key(const Monomial& m) {
    uint64_t key = 0;
    for (int i = 0; i < m.num_vars(); ++i)
        key |= static_cast<uint64_t>(m.exp(i)) << (4 * i);
    return key;
}

void require_query(const Polynomial& f, const GroebnerBasis& G,
                   const char* where) {
    require_same_ring(f.ring(), G.ring(), where);
    if (f.field() != G.field())
        throw RingMismatchError(std::string(where) +
                                ": mixed field characteristics");
    if (!f.is_homogeneous())
        throw DomainError(std::string(where) +
                          ": requires a homogeneous polynomial");
    if (f.degree() > G.truncation_degree())
        throw ResourceError(std::string(where) + ": degree " +
                            std::to_string(f.degree()) +
                            " exceeds the truncation degree " +
                            std::to_string(G.truncation_degree()));
}

Polynomial drop_leading_term(const Polynomial& f) {
    std::vector<Term> tail(f.terms().begin() + 1, f.terms().end());
    return Polynomial::from_terms(f.ring(), f.field(), std::move(tail));
}

} // namespace

void GroebnerBasis::insert(Polynomial monic_poly) {
    const Monomial& lm = monic_poly.leading_monomial();
    auto deg = static_cast<size_t>(lm.degree());
    if (lm_index_.size() <= deg) lm_index_.resize(deg + 1);
    lm_index_[deg][packed_key(lm)] = static_cast<int>(gens_.size());
    gens_.push_back(std::move(monic_poly));
}

int GroebnerBasis::find_reducer(const Monomial& m) const {
    long long deg = m.degree();
    uint64_t base = packed_key(m);
    int top = static_cast<int>(
        std::min(deg, static_cast<long long>(lm_index_.size()) - 1));
    const auto& exps = m.exps();
    for (int d = top; d >= 0; --d) {
        const auto& bucket = lm_index_[d];
        if (bucket.empty()) continue;
        // Enumerate the smaller of divisor/co-divisor exponent vectors:
        // every degree-d divisor of m is base minus a degree-(deg-d)
        // sub-vector, and nibble arithmetic on keys is exact because
        // sub-vectors never exceed m's per-variable exponents.
        int co = static_cast<int>(deg) - d;
        bool direct = d <= co;
        int target = direct ? d : co;
        int best = -1;
        auto rec = [&](auto&& self, int i, int remaining,
                       uint64_t partial) -> void {
            if (remaining == 0) {
                uint64_t key = direct ? partial : base - partial;
                auto it = bucket.find(key);
                if (it != bucket.end() && (best < 0 || it->second < best))
                    best = it->second;
                return;
            }
            if (i == static_cast<int>(exps.size())) return;
            int cap = std::min(exps[i], remaining);
            for (int v = 0; v <= cap; ++v)
                self(self, i + 1, remaining - v,
                     partial | (static_cast<uint64_t>(v) << (4 * i)));
        };
        rec(rec, 0, target, 0);
        if (best >= 0) return best;
    }
    return -1;
}

DivisionResult divide(const Polynomial& f, const GroebnerBasis& G) {
    require_query(f, G, "divide");
    size_t n = G.generators().size();
    std::vector<std::vector<Term>> quotient_terms(n);
    std::vector<Term> remainder_terms;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term lt = work.leading_term();
        int idx = G.find_reducer(lt.monomial);
        if (idx < 0) {
            remainder_terms.push_back(lt);
            work = drop_leading_term(work);
            continue;
        }
        const Polynomial& g = G.generators()[idx];
        // Basis elements are monic, so the cofactor coefficient is lt's.
        Monomial shift = colon_quotient(lt.monomial, g.leading_monomial());
        quotient_terms[idx].push_back({shift, lt.coeff});
        work = subtract(work, term_multiply(g, shift, lt.coeff));
    }
    DivisionResult out{std::vector<Polynomial>(),
                       Polynomial::from_terms(f.ring(), f.field(),
                                              std::move(remainder_terms))};
    out.quotients.reserve(n);
    for (auto& terms : quotient_terms)
        out.quotients.push_back(
            Polynomial::from_terms(f.ring(), f.field(), std::move(terms)));
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    return divide(f, G).remainder;
}

GroebnerBasis buchberger_truncated(std::vector<Polynomial> gens, int dmax) {
    if (gens.empty())
        throw DomainError("buchberger_truncated: no generators");
    const Ring ring = gens.front().ring();
    const FieldSpec field = gens.front().field();
    long long max_gen_degree = 0;
    for (const auto& g : gens) {
        if (g.is_zero())
            throw DomainError("buchberger_truncated: zero generator");
        require_same_ring(ring, g.ring(), "buchberger_truncated");
        if (g.field() != field)
            throw RingMismatchError(
                "buchberger_truncated: mixed field characteristics");
        if (!g.is_homogeneous())
            throw DomainError(
                "buchberger_truncated: inhomogeneous generator; truncation "
                "is only sound for homogeneous ideals");
        max_gen_degree = std::max(max_gen_degree, g.degree());
    }
    if (ring.num_vars() > kMaxPackedVars)
        throw ResourceError("buchberger_truncated: more than " +
                            std::to_string(kMaxPackedVars) + " variables");
    if (dmax > kMaxTruncationDegree)
        throw ResourceError("buchberger_truncated: truncation degree above " +
                            std::to_string(kMaxTruncationDegree));
    if (dmax < max_gen_degree)
        throw DomainError(
            "buchberger_truncated: truncation degree below a generator "
            "degree");

    std::sort(gens.begin(), gens.end(), polynomial_order_less);

    GroebnerBasis G(ring, field, dmax);

    // Normal selection strategy: lowest lcm degree first, ties by (i, j).
    std::set<std::tuple<long long, int, int>> queue;
    auto add_pairs = [&](int j) {
        const Monomial& lmj = G.generators()[j].leading_monomial();
        for (int i = 0; i < j; ++i) {
            const Monomial& lmi = G.generators()[i].leading_monomial();
            if (gcd(lmi, lmj).is_unit()) continue; // S-poly reduces to zero
            long long d = lcm(lmi, lmj).degree();
            if (d > dmax) continue;
            queue.insert({d, i, j});
        }
    };

    for (const auto& g : gens) {
        Polynomial r = divide(g, G).remainder;
        if (r.is_zero()) continue;
        G.insert(r.monic());
        add_pairs(static_cast<int>(G.generators().size()) - 1);
    }

    while (!queue.empty()) {
        auto [d, i, j] = *queue.begin();
        (void)d;
        queue.erase(queue.begin());
        const Polynomial& gi = G.generators()[i];
        const Polynomial& gj = G.generators()[j];
        Monomial l = lcm(gi.leading_monomial(), gj.leading_monomial());
        Polynomial s = subtract(
            term_multiply(gi, colon_quotient(l, gi.leading_monomial()), 1),
            term_multiply(gj, colon_quotient(l, gj.leading_monomial()), 1));
        Polynomial r = divide(s, G).remainder;
        if (r.is_zero()) continue;
        G.insert(r.monic());
        add_pairs(static_cast<int>(G.generators().size()) - 1);
    }

    // Minimalize: keep only elements whose leading monomial is not divisible
    // by another element's.  Distinct leading monomials make this safe in
    // one pass (divisibility between them is strict and transitive).
    std::vector<Polynomial> kept;
    for (size_t k = 0; k < G.generators().size(); ++k) {
        const Monomial& lmk = G.generators()[k].leading_monomial();
        bool redundant = false;
        for (size_t l = 0; l < G.generators().size() && !redundant; ++l)
            if (l != k &&
                divides(G.generators()[l].leading_monomial(), lmk))
                redundant = true;
        if (!redundant) kept.push_back(G.generators()[k]);
    }

    // Tail-reduce against the minimal set; leading monomials are untouched,
    // so the result is the reduced truncated basis, which is canonical.
    GroebnerBasis minimal(ring, field, dmax);
    for (auto& g : kept) minimal.insert(std::move(g));
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.generators().size());
    for (const auto& g : minimal.generators()) {
        Polynomial tail = drop_leading_term(g);
        Polynomial r = divide(tail, minimal).remainder;
        std::vector<Term> terms = r.terms();
        terms.insert(terms.begin(), g.leading_term());
        reduced.push_back(
            Polynomial::from_terms(ring, field, std::move(terms)));
    }
    std::sort(reduced.begin(), reduced.end(), polynomial_order_less);

    GroebnerBasis out(ring, field, dmax);
    for (auto& g : reduced) out.insert(std::move(g));
    return out;
}

std::vector<Polynomial> derivative_ideal(const std::vector<Polynomial>& gens) {
    if (gens.empty())
        throw DomainError("derivative_ideal: no generators");
    std::vector<Polynomial> out;
    for (const auto& g : gens) {
        if (g.is_zero())
            throw DomainError("derivative_ideal: zero generator");
        for (int v = 0; v < g.ring().num_vars(); ++v) {
            Polynomial d = partial_derivative(g, v);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    }
    return out;
}

QuadrupleReport check_quadruple(const Polynomial& f,
                                const std::vector<Polynomial>& ideal_gens,
                                const std::vector<Polynomial>& square_gens,
                                int dmax) {
    if (f.is_zero())
        throw DomainError("check_quadruple: zero polynomial");
    if (!f.is_homogeneous())
        throw DomainError("check_quadruple: requires a homogeneous f");
    if (dmax < f.degree() + 1)
        throw DomainError(
            "check_quadruple: truncation degree must reach deg(f) + 1");
    GroebnerBasis G_ideal = buchberger_truncated(ideal_gens, dmax);
    GroebnerBasis G_square = buchberger_truncated(square_gens, dmax);

    QuadrupleReport report;
    report.f_not_in_ideal = !normal_form(f, G_ideal).is_zero();
    report.f_not_in_square = !normal_form(f, G_square).is_zero();
    report.socle_witness = report.f_not_in_ideal && report.f_not_in_square;
    int nv = f.ring().num_vars();
    for (int v = 0; v < nv; ++v) {
        Polynomial fv = term_multiply(f, Monomial::variable(nv, v), 1);
        bool in_square = normal_form(fv, G_square).is_zero();
        report.products_in_square.push_back(in_square);
        report.socle_witness = report.socle_witness && in_square;
    }
    return report;
}

int linear_span_dimension(const std::vector<Polynomial>& polys) {
    for (const auto& p : polys) {
        require_same_ring(polys.front().ring(), p.ring(),
                          "linear_span_dimension");
        if (p.field() != polys.front().field())
            throw RingMismatchError(
                "linear_span_dimension: mixed field characteristics");
    }
    std::vector<Polynomial> pivots;
    for (const auto& p : polys) {
        Polynomial f = p;
        while (!f.is_zero()) {
            const Polynomial* hit = nullptr;
            for (const auto& pivot : pivots)
                if (pivot.leading_monomial() == f.leading_monomial()) {
                    hit = &pivot;
                    break;
                }
            if (!hit) break;
            f = subtract(f, term_multiply(*hit, Monomial::unit(f.ring().num_vars()),
                                          f.leading_term().coeff));
        }
        if (!f.is_zero()) pivots.push_back(f.monic());
    }
    return static_cast<int>(pivots.size());
}

} // namespace assprime
