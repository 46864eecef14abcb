#include "assprime/polynomial.hpp"

#include <algorithm>

#include "assprime/errors.hpp"

namespace assprime {

namespace {

// Descending grevlex on terms, the storage order.
bool term_before(const Term& a, const Term& b) {
    return grevlex_less(b.monomial, a.monomial);
}

void require_compatible(const Polynomial& f, const Polynomial& g,
                        const char* where) {
    require_same_ring(f.ring(), g.ring(), where);
    if (f.field() != g.field())
        throw RingMismatchError(std::string(where) +
                                ": mixed field characteristics");
}

} // namespace

Polynomial Polynomial::zero(const Ring& ring, const FieldSpec& field) {
    return Polynomial(ring, field);
}

Polynomial Polynomial::from_terms(const Ring& ring, const FieldSpec& field,
                                  std::vector<Term> terms) {
    Polynomial f(ring, field);
    for (auto& t : terms) {
        if (t.monomial.num_vars() != ring.num_vars())
            throw DomainError(
                "polynomial term does not match the ring's variable count");
        t.coeff = field.reduce(t.coeff);
    }
    std::sort(terms.begin(), terms.end(), term_before);
    for (auto& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
            f.terms_.back().coeff = field.add(f.terms_.back().coeff, t.coeff);
            if (f.terms_.back().coeff == 0) f.terms_.pop_back();
        } else if (t.coeff != 0) {
            f.terms_.push_back(t);
        }
    }
    // Merging can re-expose an earlier zero-sum only between equal
    // monomials, which sorting has made adjacent; one pass suffices.
    return f;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw DomainError("zero polynomial has no leading term");
    return terms_.front();
}

long long Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.monomial.degree() != terms_.front().monomial.degree())
            return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    long long c = field_.inv(terms_.front().coeff);
    Polynomial f(ring_, field_);
    f.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        f.terms_.push_back({t.monomial, field_.mul(t.coeff, c)});
    return f;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.ring_ != g.ring_ || f.field_ != g.field_ ||
        f.terms_.size() != g.terms_.size())
        return false;
    for (size_t i = 0; i < f.terms_.size(); ++i)
        if (f.terms_[i].monomial != g.terms_[i].monomial ||
            f.terms_[i].coeff != g.terms_[i].coeff)
            return false;
    return true;
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
    require_compatible(f, g, "add");
    std::vector<Term> merged;
    merged.reserve(f.terms().size() + g.terms().size());
    size_t i = 0, j = 0;
    const auto& a = f.terms();
    const auto& b = g.terms();
    while (i < a.size() || j < b.size()) {
        if (j == b.size() ||
            (i < a.size() && grevlex_less(b[j].monomial, a[i].monomial))) {
            merged.push_back(a[i++]);
        } else if (i == a.size() ||
                   grevlex_less(a[i].monomial, b[j].monomial)) {
            merged.push_back(b[j++]);
        } else {
            long long c = f.field().add(a[i].coeff, b[j].coeff);
            if (c != 0) merged.push_back({a[i].monomial, c});
            ++i;
            ++j;
        }
    }
    return Polynomial::from_terms(f.ring(), f.field(), std::move(merged));
}

Polynomial negate(const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms())
        terms.push_back({t.monomial, f.field().neg(t.coeff)});
    return Polynomial::from_terms(f.ring(), f.field(), std::move(terms));
}

Polynomial subtract(const Polynomial& f, const Polynomial& g) {
    return add(f, negate(g));
}

Polynomial term_multiply(const Polynomial& f, const Monomial& a, long long c) {
    c = f.field().reduce(c);
    std::vector<Term> terms;
    if (c != 0) {
        terms.reserve(f.terms().size());
        for (const auto& t : f.terms())
            terms.push_back({product(t.monomial, a), f.field().mul(t.coeff, c)});
    }
    return Polynomial::from_terms(f.ring(), f.field(), std::move(terms));
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
    require_compatible(f, g, "multiply");
    std::vector<Term> terms;
    terms.reserve(f.terms().size() * g.terms().size());
    for (const auto& s : f.terms())
        for (const auto& t : g.terms())
            terms.push_back({product(s.monomial, t.monomial),
                             f.field().mul(s.coeff, t.coeff)});
    return Polynomial::from_terms(f.ring(), f.field(), std::move(terms));
}

Polynomial partial_derivative(const Polynomial& f, int var) {
    if (var < 0 || var >= f.ring().num_vars())
        throw DomainError("partial_derivative: variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        int e = t.monomial.exp(var);
        if (e == 0) continue;
        long long c = f.field().mul(t.coeff, f.field().reduce(e));
        if (c == 0) continue;
        std::vector<int> exps = t.monomial.exps();
        exps[var] -= 1;
        terms.push_back({Monomial(std::move(exps)), c});
    }
    return Polynomial::from_terms(f.ring(), f.field(), std::move(terms));
}

bool polynomial_order_less(const Polynomial& f, const Polynomial& g) {
    const auto& a = f.terms();
    const auto& b = g.terms();
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].monomial != b[i].monomial)
            return grevlex_less(a[i].monomial, b[i].monomial);
        if (a[i].coeff != b[i].coeff) return a[i].coeff < b[i].coeff;
    }
    return a.size() < b.size();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        if (t.monomial.is_unit()) {
            out += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += to_string(t.monomial, f.ring());
        } else {
            out += std::to_string(t.coeff) + "*" +
                   to_string(t.monomial, f.ring());
        }
    }
    return out;
}

} // namespace assprime
