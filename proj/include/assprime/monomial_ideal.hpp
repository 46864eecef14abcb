#pragma once

#include <string>
#include <vector>

#include "assprime/monomial.hpp"
#include "assprime/ring.hpp"

namespace assprime {

// A monomial ideal held by its unique minimal generating set, sorted in
// canonical order (degree, then lex on exponents).  The zero ideal has an
// empty generator list; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(const Ring& ring) { return MonomialIdeal(ring); }
    static MonomialIdeal unit(const Ring& ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const {
        return gens_.size() == 1 && gens_[0].is_unit();
    }
    // Proper: neither zero nor unit.
    bool is_proper() const { return !is_zero() && !is_unit(); }

    // Largest exponent of x_i over all generators.
    int max_exp(int i) const;
    // Largest total degree over all generators (0 for the zero ideal).
    long long max_degree() const;
    // Union of generator supports, ascending.
    std::vector<int> support() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

    friend MonomialIdeal minimalize(const Ring& ring,
                                    std::vector<Monomial> gens);

private:
    explicit MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

    Ring ring_;
    std::vector<Monomial> gens_;
};

// Drop generators divisible by another generator, dedupe, sort
// canonically.  The result is the unique minimal generating set.
MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens);

// Convenience: build from exponent vectors.
MonomialIdeal make_ideal(const Ring& ring,
                         const std::vector<std::vector<int>>& exps);

// m in I.
bool contains(const MonomialIdeal& I, const Monomial& m);
// J subseteq I.
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);
// I^n; power(I, 0) is the unit ideal for every I.
MonomialIdeal power(const MonomialIdeal& I, int n);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
// I : m.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
// I : J = intersection of I : g over generators g of J.  J must be
// nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
// Saturation (I : m^inf), computed by iterating colon until stable.
MonomialIdeal saturate(const MonomialIdeal& I, const Monomial& m);

// Map an ideal of A (resp. B) into A*B = join_rings(A, B) by padding
// exponents with zeros on the right (resp. left).
enum class Side { left, right };
MonomialIdeal lift(const MonomialIdeal& I, const Ring& joined, Side side);

// I + J inside join_rings(I.ring(), J.ring()); the standard way to form
// a sum of ideals in disjoint variable sets.
MonomialIdeal sum_disjoint(const MonomialIdeal& I, const MonomialIdeal& J);

std::string to_string(const MonomialIdeal& I);

// A monomial prime, identified by the set of variables it is generated
// by.  Always attached to a ring; vars are ascending indices.
struct PrimeSupport {
    Ring ring;
    std::vector<int> vars;

    std::vector<std::string> names() const;

    friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
        return a.ring == b.ring && a.vars == b.vars;
    }
    friend bool operator!=(const PrimeSupport& a, const PrimeSupport& b) {
        return !(a == b);
    }
};

// Order on supports within one ring: by size, then lex on indices.
bool support_less(const PrimeSupport& a, const PrimeSupport& b);

// Canonically sorted duplicate-free set of PrimeSupport values.
using SupportSet = std::vector<PrimeSupport>;

SupportSet sorted_support_set(std::vector<PrimeSupport> supports);
bool support_set_contains(const SupportSet& set, const PrimeSupport& p);
bool is_subset(const SupportSet& a, const SupportSet& b);
SupportSet support_set_union(const SupportSet& a, const SupportSet& b);

// P in A, Q in B, embedded as P + Q in the joined ring; Q's indices are
// shifted by A's variable count.
PrimeSupport join_supports(const PrimeSupport& p, const PrimeSupport& q,
                           const Ring& joined);

std::string to_string(const PrimeSupport& p);
std::string to_string(const SupportSet& s);

} // namespace assprime
