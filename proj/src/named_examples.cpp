#include "assprime/named_examples.hpp"

#include <algorithm>
#include <utility>

#include "assprime/errors.hpp"
#include "assprime/groebner.hpp"

namespace assprime {

namespace {

Monomial mono(int num_vars,
              std::initializer_list<std::pair<int, int>> powers) {
    std::vector<int> exps(num_vars, 0);
    for (auto [v, k] : powers) exps[v] += k;
    return Monomial(std::move(exps));
}

void finalize(NamedExampleReport& report) {
    report.all_pass = true;
    for (const auto& fact : report.facts)
        if (fact.actual != fact.expected) report.all_pass = false;
    if (report.expected_generator_count &&
        report.generator_count != report.expected_generator_count)
        report.all_pass = false;
}

// Nine-variable Gorenstein quadric instance: the 2x2 minors of a 3x3
// matrix of distinct variables plus every same-row and same-column
// quadric.  Verifies the minimal generator count and a socle membership
// quadruple for the cyclic cubic f.
NamedExampleReport gorenstein_char2(long long characteristic, int dmax) {
    NamedExampleReport report;
    report.name = "gorenstein-char2";
    report.characteristic = characteristic;
    report.char_proxy = false;
    report.dmax = dmax;
    report.instance =
        "I = 2x2 minors of [[x1,x2,x3],[y1,y2,y3],[z1,z2,z3]] plus the "
        "squares of the row and column ideals; f = x1*y2*z3 + x2*y3*z1 + "
        "x3*y1*z2";

    Ring ring({"x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"});
    FieldSpec field(characteristic);
    int nv = ring.num_vars();
    auto var = [](int row, int col) { return row * 3 + col; };

    std::vector<Polynomial> raw;
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = c1 + 1; c2 < 3; ++c2)
                    raw.push_back(Polynomial::from_terms(
                        ring, field,
                        {{mono(nv, {{var(r1, c1), 1}, {var(r2, c2), 1}}), 1},
                         {mono(nv, {{var(r1, c2), 1}, {var(r2, c1), 1}}),
                          -1}}));
    // Same-column squares (x_i, y_i, z_i)^2 and same-row squares
    // (x_1, x_2, x_3)^2 and so on; the plain squares repeat across groups.
    for (int c = 0; c < 3; ++c)
        for (int r1 = 0; r1 < 3; ++r1)
            for (int r2 = r1; r2 < 3; ++r2)
                raw.push_back(Polynomial::from_terms(
                    ring, field,
                    {{mono(nv, {{var(r1, c), 1}, {var(r2, c), 1}}), 1}}));
    for (int r = 0; r < 3; ++r)
        for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = c1; c2 < 3; ++c2)
                raw.push_back(Polynomial::from_terms(
                    ring, field,
                    {{mono(nv, {{var(r, c1), 1}, {var(r, c2), 1}}), 1}}));

    report.generator_count = linear_span_dimension(raw);
    report.expected_generator_count = 36;

    std::vector<Polynomial> gens = raw;
    std::sort(gens.begin(), gens.end(), polynomial_order_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Polynomial> squares;
    squares.reserve(gens.size() * (gens.size() + 1) / 2);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            squares.push_back(multiply(gens[i], gens[j]));

    Polynomial f = Polynomial::from_terms(
        ring, field,
        {{mono(nv, {{var(0, 0), 1}, {var(1, 1), 1}, {var(2, 2), 1}}), 1},
         {mono(nv, {{var(0, 1), 1}, {var(1, 2), 1}, {var(2, 0), 1}}), 1},
         {mono(nv, {{var(0, 2), 1}, {var(1, 0), 1}, {var(2, 1), 1}}), 1}});

    QuadrupleReport quad = check_quadruple(f, gens, squares, dmax);
    report.facts.push_back({"f not in I", true, quad.f_not_in_ideal});
    report.facts.push_back({"f not in I^2", true, quad.f_not_in_square});
    for (int v = 0; v < nv; ++v)
        report.facts.push_back({"f*" + ring.name(v) + " in I^2", true,
                                quad.products_in_square[v]});
    finalize(report);
    return report;
}

// Four-variable instance whose second power picks up an embedded prime:
// one quintuple-generated ideal, one socle element of its square, and one
// socle element of the ideal itself.
NamedExampleReport gr_depth_zero(long long characteristic, int dmax) {
    NamedExampleReport report;
    report.name = "gr-depth-zero";
    report.characteristic = characteristic;
    report.char_proxy = true;
    report.dmax = dmax;
    report.instance =
        "I = (x^4 + y^3*z, x^3*y, x^2*t^2, y^4, y^2*z^2) in k[x,y,z,t]; "
        "membership of x^2*y^3*z against I^2 and of x^2*y^3*z*t against I";

    Ring ring({"x", "y", "z", "t"});
    FieldSpec field(characteristic);
    int nv = ring.num_vars();

    std::vector<Polynomial> gens;
    gens.push_back(Polynomial::from_terms(
        ring, field, {{mono(nv, {{0, 4}}), 1}, {mono(nv, {{1, 3}, {2, 1}}), 1}}));
    gens.push_back(Polynomial::from_terms(
        ring, field, {{mono(nv, {{0, 3}, {1, 1}}), 1}}));
    gens.push_back(Polynomial::from_terms(
        ring, field, {{mono(nv, {{0, 2}, {3, 2}}), 1}}));
    gens.push_back(Polynomial::from_terms(
        ring, field, {{mono(nv, {{1, 4}}), 1}}));
    gens.push_back(Polynomial::from_terms(
        ring, field, {{mono(nv, {{1, 2}, {2, 2}}), 1}}));

    std::vector<Polynomial> squares;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            squares.push_back(multiply(gens[i], gens[j]));

    GroebnerBasis G_ideal = buchberger_truncated(gens, dmax);
    GroebnerBasis G_square = buchberger_truncated(squares, dmax);

    Polynomial w = Polynomial::from_terms(
        ring, field, {{mono(nv, {{0, 2}, {1, 3}, {2, 1}}), 1}});
    Polynomial wt = Polynomial::from_terms(
        ring, field, {{mono(nv, {{0, 2}, {1, 3}, {2, 1}, {3, 1}}), 1}});

    report.facts.push_back({"x^2*y^3*z not in I", true,
                            !normal_form(w, G_ideal).is_zero()});
    for (const auto& g : gens)
        report.facts.push_back(
            {"x^2*y^3*z * (" + to_string(g) + ") in I^2", true,
             normal_form(multiply(w, g), G_square).is_zero()});
    report.facts.push_back({"x^2*y^3*z*t not in I", true,
                            !normal_form(wt, G_ideal).is_zero()});
    for (int v = 0; v < nv; ++v)
        report.facts.push_back(
            {"x^2*y^3*z*t * " + ring.name(v) + " in I", true,
             normal_form(term_multiply(wt, Monomial::variable(nv, v), 1),
                         G_ideal)
                 .is_zero()});
    finalize(report);
    return report;
}

// Three-variable instance comparing a product ideal f*(x, y) with the
// ideal of first partial derivatives of its generators.
NamedExampleReport derivative_remark(long long characteristic, int dmax) {
    NamedExampleReport report;
    report.name = "derivative-remark";
    report.characteristic = characteristic;
    report.char_proxy = true;
    report.dmax = dmax;
    report.instance =
        "f = x^5 + x^4*y + y^4*z; I = (x*f, y*f) in k[x,y,z]; membership "
        "against the ideal of first partials of I's generators";

    Ring ring({"x", "y", "z"});
    FieldSpec field(characteristic);
    int nv = ring.num_vars();

    Polynomial f = Polynomial::from_terms(ring, field,
                                          {{mono(nv, {{0, 5}}), 1},
                                           {mono(nv, {{0, 4}, {1, 1}}), 1},
                                           {mono(nv, {{1, 4}, {2, 1}}), 1}});
    Polynomial xf = term_multiply(f, Monomial::variable(nv, 0), 1);
    Polynomial yf = term_multiply(f, Monomial::variable(nv, 1), 1);
    Polynomial zf = term_multiply(f, Monomial::variable(nv, 2), 1);

    std::vector<Polynomial> partials = derivative_ideal({xf, yf});
    GroebnerBasis G = buchberger_truncated(partials, dmax);

    report.facts.push_back(
        {"x*f in the derivative ideal", true, normal_form(xf, G).is_zero()});
    report.facts.push_back(
        {"y*f in the derivative ideal", true, normal_form(yf, G).is_zero()});
    report.facts.push_back(
        {"f not in the derivative ideal", true, !normal_form(f, G).is_zero()});
    report.facts.push_back({"z*f not in the derivative ideal", true,
                            !normal_form(zf, G).is_zero()});
    finalize(report);
    return report;
}

struct RegistryEntry {
    const char* name;
    long long default_characteristic;
    int default_dmax;
    NamedExampleReport (*run)(long long, int);
};

constexpr RegistryEntry kRegistry[] = {
    {"gorenstein-char2", 2, 5, gorenstein_char2},
    {"gr-depth-zero", 32003, 10, gr_depth_zero},
    {"derivative-remark", 32003, 6, derivative_remark},
};

} // namespace

std::vector<std::string> named_example_ids() {
    std::vector<std::string> ids;
    for (const auto& entry : kRegistry) ids.push_back(entry.name);
    return ids;
}

NamedExampleReport run_named_example(const std::string& name,
                                     std::optional<long long> char_override,
                                     std::optional<int> dmax_override) {
    for (const auto& entry : kRegistry) {
        if (name != entry.name) continue;
        return entry.run(char_override.value_or(entry.default_characteristic),
                         dmax_override.value_or(entry.default_dmax));
    }
    std::string known;
    for (const auto& entry : kRegistry) {
        if (!known.empty()) known += ", ";
        known += entry.name;
    }
    throw DomainError("unknown named example '" + name + "'; known: " + known);
}

} // namespace assprime
