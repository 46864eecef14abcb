#pragma once

#include <string>
#include <vector>

#include "assprime/ring.hpp"

namespace assprime {

// Exponent vector of a monomial.  The ring is carried separately; all
// binary operations require equal lengths.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    // Monomial 1 in an n-variable ring.
    static Monomial unit(int num_vars);

    // Variable x_i in an n-variable ring.
    static Monomial variable(int num_vars, int i);

    int num_vars() const { return static_cast<int>(exps_.size()); }
    int exp(int i) const { return exps_[i]; }
    const std::vector<int>& exps() const { return exps_; }
    long long degree() const;
    bool is_unit() const;

    // Indices of variables with positive exponent, ascending.
    std::vector<int> support() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

private:
    std::vector<int> exps_;
};

// a | b, i.e. every exponent of a is <= the matching exponent of b.
bool divides(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// a * b.  Throws DomainError if an exponent would overflow.
Monomial product(const Monomial& a, const Monomial& b);

// a^k for k >= 0.
Monomial power(const Monomial& a, int k);

// Componentwise max(a_i - b_i, 0); generator of the colon (a) : b.
Monomial colon_quotient(const Monomial& a, const Monomial& b);

// Canonical generator order: by total degree, ties broken
// lexicographically on the exponent vector.
bool canonical_less(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic order, a < b.  Later variables are
// cheaper: among equal degrees the monomial with the larger exponent on
// the last differing variable is smaller.
bool grevlex_less(const Monomial& a, const Monomial& b);

// Render against a ring, e.g. "a^4*b" or "1".
std::string to_string(const Monomial& m, const Ring& ring);

} // namespace assprime
