#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "assprime/polynomial.hpp"

namespace assprime {

// Degree-truncated Groebner basis of a homogeneous ideal: every S-pair of
// lcm degree <= truncation_degree reduces to zero, which decides membership
// of any homogeneous polynomial of degree <= truncation_degree.  Elements
// are monic, interreduced, and sorted ascending by (degree, grevlex), so a
// finished basis is the reduced basis and compares deterministically.
class GroebnerBasis {
public:
    const std::vector<Polynomial>& generators() const { return gens_; }
    int truncation_degree() const { return dmax_; }
    const Ring& ring() const { return ring_; }
    const FieldSpec& field() const { return field_; }

    // Index of a basis element whose leading monomial divides m, or -1.
    // Highest reducer degree wins, then the lowest basis index.
    int find_reducer(const Monomial& m) const;

private:
    friend GroebnerBasis buchberger_truncated(std::vector<Polynomial> gens,
                                              int dmax);

    GroebnerBasis(Ring ring, FieldSpec field, int dmax)
        : ring_(std::move(ring)), field_(field), dmax_(dmax) {}

    void insert(Polynomial monic_poly);

    Ring ring_;
    FieldSpec field_;
    int dmax_;
    std::vector<Polynomial> gens_;
    // Per-degree map from packed leading-monomial key to basis index.
    std::vector<std::unordered_map<uint64_t, int>> lm_index_;
};

struct DivisionResult {
    std::vector<Polynomial> quotients; // aligned with G.generators()
    Polynomial remainder;
};

// Multivariate division: f = sum quotients[i] * g_i + remainder, with no
// remainder term divisible by any basis leading monomial.
DivisionResult divide(const Polynomial& f, const GroebnerBasis& G);

// Remainder of division; zero iff f lies in the ideal, provided f is
// homogeneous of degree <= the truncation degree.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

// Buchberger with the normal selection strategy (lowest lcm degree first,
// ties by pair index), the coprime-leading-term criterion, and pairs of lcm
// degree > dmax discarded.  Inputs must be nonzero, homogeneous, and share
// one ring and field; dmax must reach the largest generator degree.
GroebnerBasis buchberger_truncated(std::vector<Polynomial> gens, int dmax);

// All first partial derivatives of all generators, zero derivatives
// dropped.
std::vector<Polynomial> derivative_ideal(const std::vector<Polynomial>& gens);

// Socle-style membership quadruple for one polynomial f against an ideal
// and its square: f outside both, every f*x_i inside the square.
struct QuadrupleReport {
    bool f_not_in_ideal = false;
    bool f_not_in_square = false;
    std::vector<bool> products_in_square; // one verdict per ring variable
    bool socle_witness = false;           // conjunction of all of the above
};

QuadrupleReport check_quadruple(const Polynomial& f,
                                const std::vector<Polynomial>& ideal_gens,
                                const std::vector<Polynomial>& square_gens,
                                int dmax);

// Dimension over GF(p) of the linear span of the given polynomials.  For an
// ideal generated in a single degree this counts its minimal generators.
int linear_span_dimension(const std::vector<Polynomial>& polys);

} // namespace assprime
