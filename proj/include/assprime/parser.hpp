#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assprime/gf.hpp"
#include "assprime/monomial_ideal.hpp"
#include "assprime/polynomial.hpp"
#include "assprime/ring.hpp"

namespace assprime {

// One parsed generator term: an integer coefficient (sign applied, not yet
// reduced into any field) times a monomial resolved against the file's ring.
struct ParsedTerm {
    long long coeff = 1;
    Monomial monomial;
};

using ParsedGenerator = std::vector<ParsedTerm>;

struct NamedGenerators {
    std::string name;
    std::vector<ParsedGenerator> generators;
};

// Contents of an ideal file:
//   ring x y z            one declaration, first
//   field 32003           optional, for polynomial inputs
//   ideal I = x^2*y, z^3  any number of named ideals
//   # comment
struct IdealFile {
    Ring ring;
    std::optional<long long> characteristic;
    std::vector<NamedGenerators> ideals;

    bool has_ideal(const std::string& name) const;
    const NamedGenerators& entry(const std::string& name) const;

    // The named ideal as a monomial ideal; every generator must be a single
    // term with coefficient 1.
    MonomialIdeal monomial_ideal(const std::string& name) const;

    // The named ideal's generators as polynomials over the given field.
    std::vector<Polynomial> polynomials(const std::string& name,
                                        const FieldSpec& field) const;
};

// Throws ParseError with 1-based line and column on malformed input.
IdealFile parse_ideal_file(const std::string& text);

} // namespace assprime
