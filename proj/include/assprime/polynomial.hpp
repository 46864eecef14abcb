#pragma once

#include <string>
#include <vector>

#include "assprime/gf.hpp"
#include "assprime/monomial.hpp"
#include "assprime/ring.hpp"

namespace assprime {

struct Term {
    Monomial monomial;
    long long coeff = 0; // canonical residue; nonzero once stored
};

// Sparse polynomial over GF(p).  Terms are held in strictly descending
// graded reverse lexicographic order, so terms().front() is the leading
// term of a nonzero polynomial.
class Polynomial {
public:
    static Polynomial zero(const Ring& ring, const FieldSpec& field);
    // Reduces coefficients, merges equal monomials, drops zero terms.
    static Polynomial from_terms(const Ring& ring, const FieldSpec& field,
                                 std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().monomial; }
    // Degree of the leading term; -1 for the zero polynomial.
    long long degree() const;
    bool is_homogeneous() const;

    Polynomial monic() const;

    friend bool operator==(const Polynomial& f, const Polynomial& g);
    friend bool operator!=(const Polynomial& f, const Polynomial& g) {
        return !(f == g);
    }

private:
    Polynomial(Ring ring, FieldSpec field)
        : ring_(std::move(ring)), field_(field) {}

    Ring ring_;
    FieldSpec field_;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial subtract(const Polynomial& f, const Polynomial& g);
Polynomial negate(const Polynomial& f);
// c * x^a * f.
Polynomial term_multiply(const Polynomial& f, const Monomial& a, long long c);
Polynomial multiply(const Polynomial& f, const Polynomial& g);
// d/dx_var; terms whose exponent is divisible by p vanish.
Polynomial partial_derivative(const Polynomial& f, int var);

// Total order used to sort polynomial lists deterministically: degree, then
// grevlex on leading monomials, then remaining terms and coefficients.
bool polynomial_order_less(const Polynomial& f, const Polynomial& g);

std::string to_string(const Polynomial& f);

} // namespace assprime
