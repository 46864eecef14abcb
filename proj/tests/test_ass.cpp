#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "assprime/ass_engine.hpp"
#include "assprime/corpus.hpp"
#include "assprime/errors.hpp"
#include "assprime/monomial_ideal.hpp"

using namespace assprime;

namespace {

MonomialIdeal quartic_embedded_ideal(const Ring& R) {
    return make_ideal(R, {{4, 0, 0}, {3, 1, 0}, {1, 3, 0}, {0, 4, 0},
                          {2, 2, 1}});
}

PrimeSupport prime_of(const Ring& R, std::vector<int> vars) {
    return PrimeSupport{R, std::move(vars)};
}

// Exhaustive third route: scan the full exponent box bounded by the
// per-variable maxima of the generators; keep monomials whose colon is
// generated by distinct single variables.
SupportSet brute_force_ass(const MonomialIdeal& I) {
    const Ring& ring = I.ring();
    int v = ring.num_vars();
    std::vector<int> box(v);
    for (int i = 0; i < v; ++i) box[i] = I.max_exp(i);

    std::vector<PrimeSupport> found;
    std::vector<int> exps(v, 0);
    while (true) {
        Monomial m(exps);
        if (!contains(I, m)) {
            MonomialIdeal C = colon(I, m);
            bool all_vars = !C.is_unit();
            std::vector<int> vars;
            for (const auto& g : C.gens()) {
                if (g.degree() != 1) {
                    all_vars = false;
                    break;
                }
                vars.push_back(g.support().front());
            }
            if (all_vars) {
                std::sort(vars.begin(), vars.end());
                found.push_back(PrimeSupport{ring, vars});
            }
        }
        int i = 0;
        while (i < v && exps[i] == box[i]) exps[i++] = 0;
        if (i == v) break;
        ++exps[i];
    }
    return sorted_support_set(std::move(found));
}

MonomialIdeal intersection_of(const Ring& R,
                              const std::vector<IrreducibleComponent>& comps,
                              int skip = -1) {
    MonomialIdeal X = MonomialIdeal::unit(R);
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        if (i != skip) X = intersect(X, comps[i].to_ideal());
    return X;
}

} // namespace

TEST_CASE("decomposition of a single mixed generator") {
    Ring R({"x", "y"});
    auto comps = irreducible_decomposition(make_ideal(R, {{1, 1}}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].to_ideal() == make_ideal(R, {{1, 0}}));
    CHECK(comps[1].to_ideal() == make_ideal(R, {{0, 1}}));
}

TEST_CASE("decomposition with an embedded component") {
    Ring R({"x", "y"});
    MonomialIdeal I = make_ideal(R, {{2, 0}, {1, 1}});
    auto comps = irreducible_decomposition(I);
    REQUIRE(comps.size() == 2);
    CHECK(intersection_of(R, comps) == I);
    SupportSet rads;
    for (const auto& c : comps) rads.push_back(c.radical());
    CHECK(sorted_support_set(rads) ==
          SupportSet{prime_of(R, {0}), prime_of(R, {0, 1})});
}

TEST_CASE("decomposition is irredundant: dropping any component grows it") {
    Ring R({"a", "b", "c"});
    for (const MonomialIdeal& I :
         {quartic_embedded_ideal(R),
          make_ideal(R, {{2, 0, 0}, {1, 1, 0}, {0, 3, 1}}),
          make_ideal(R, {{1, 1, 0}, {1, 0, 1}})}) {
        auto comps = irreducible_decomposition(I);
        CHECK(intersection_of(R, comps) == I);
        for (int skip = 0; skip < static_cast<int>(comps.size()); ++skip)
            CHECK(intersection_of(R, comps, skip) != I);
    }
}

TEST_CASE("decomposition components of the quartic ideal") {
    Ring R({"a", "b", "c"});
    auto comps = irreducible_decomposition(quartic_embedded_ideal(R));
    for (const auto& c : comps) {
        auto vars = c.radical().vars;
        bool ab = vars == std::vector<int>{0, 1};
        bool abc = vars == std::vector<int>{0, 1, 2};
        CHECK((ab || abc));
    }
}

TEST_CASE("associated primes of ring quotients") {
    Ring R({"a", "b", "c"});
    CHECK(ass_ring_quotient(quartic_embedded_ideal(R)) ==
          SupportSet{prime_of(R, {0, 1}), prime_of(R, {0, 1, 2})});

    Ring Rxy({"x", "y"});
    CHECK(ass_ring_quotient(make_ideal(Rxy, {{2, 0}})) ==
          SupportSet{prime_of(Rxy, {0})});

    Ring Rxyz({"x", "y", "z"});
    CHECK(ass_ring_quotient(make_ideal(Rxyz, {{1, 1, 0}, {1, 0, 1}})) ==
          SupportSet{prime_of(Rxyz, {0}), prime_of(Rxyz, {1, 2})});

    CHECK_THROWS_AS(ass_ring_quotient(MonomialIdeal::zero(R)), DomainError);
    CHECK_THROWS_AS(ass_ring_quotient(MonomialIdeal::unit(R)), DomainError);
}

TEST_CASE("witness-box module route") {
    Ring Rx({"x"});
    CHECK(ass_module(make_ideal(Rx, {{1}}), make_ideal(Rx, {{2}})) ==
          SupportSet{prime_of(Rx, {0})});

    Ring R({"a", "b", "c"});
    MonomialIdeal I = quartic_embedded_ideal(R);
    CHECK(ass_module(MonomialIdeal::unit(R), I) ==
          SupportSet{prime_of(R, {0, 1}), prime_of(R, {0, 1, 2})});
    CHECK(ass_module(I, power(I, 2)) == SupportSet{prime_of(R, {0, 1})});

    // U = V gives the zero module
    CHECK(ass_module(I, I).empty());
    CHECK_THROWS_AS(ass_module(power(I, 2), I), ContainmentError);
}

TEST_CASE("serial and parallel witness searches agree") {
    CorpusGenerator gen(31, CorpusParams{4, 4, 4});
    for (int k = 0; k < 25; ++k) {
        MonomialIdeal I = gen.next_ideal();
        MonomialIdeal unit = MonomialIdeal::unit(I.ring());
        CHECK(ass_module(unit, I) == ass_module_serial(unit, I));
    }
}

TEST_CASE("three independent routes agree on a seeded corpus") {
    CorpusGenerator gen(77, CorpusParams{4, 4, 5});
    for (int k = 0; k < 60; ++k) {
        MonomialIdeal I = gen.next_ideal();
        SupportSet by_decomposition = ass_ring_quotient(I);
        SupportSet by_witness = ass_module(MonomialIdeal::unit(I.ring()), I);
        SupportSet by_box = brute_force_ass(I);
        CHECK(by_decomposition == by_witness);
        CHECK(by_witness == by_box);
    }
}

TEST_CASE("profile of a principal ideal stabilizes immediately") {
    Ring R({"x", "y"});
    AssProfile p = ass_profile(make_ideal(R, {{2, 0}}), 3);
    for (int n = 1; n <= 3; ++n) {
        CHECK(p.ass_ring_quotients[n - 1] == SupportSet{prime_of(R, {0})});
        CHECK(p.ass_consecutive[n - 1] == SupportSet{prime_of(R, {0})});
    }
    REQUIRE(p.astab_window.has_value());
    CHECK(*p.astab_window == 1);
}

TEST_CASE("profile of the quartic ideal drops its embedded prime") {
    Ring R({"a", "b", "c"});
    AssProfile p = ass_profile(quartic_embedded_ideal(R), 4);
    CHECK(p.ass_ring_quotients[0] ==
          SupportSet{prime_of(R, {0, 1}), prime_of(R, {0, 1, 2})});
    for (int n = 2; n <= 4; ++n)
        CHECK(p.ass_ring_quotients[n - 1] ==
              SupportSet{prime_of(R, {0, 1})});
    REQUIRE(p.astab_window.has_value());
    CHECK(*p.astab_window == 2);
    // consecutive quotients see the same sets (monomial invariant)
    for (int n = 1; n <= 4; ++n)
        CHECK(p.ass_consecutive[n - 1] == p.ass_ring_quotients[n - 1]);
}

TEST_CASE("profile of a two-variable primary ideal") {
    Ring R({"x", "y"});
    MonomialIdeal I = make_ideal(R, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
    AssProfile p = ass_profile(I, 3);
    for (int n = 1; n <= 3; ++n)
        CHECK(p.ass_ring_quotients[n - 1] == SupportSet{prime_of(R, {0, 1})});
}

TEST_CASE("no stabilization evidence within a window of one") {
    Ring R({"x", "y"});
    AssProfile p = ass_profile(make_ideal(R, {{2, 0}}), 1);
    CHECK(!p.astab_window.has_value());
}

TEST_CASE("prefix unions of the two families agree") {
    Ring R({"a", "b", "c"});
    AssProfile p = ass_profile(quartic_embedded_ideal(R), 4);
    CHECK(union_ass_check(p));
    for (bool ok : union_ass_check_per_n(p)) CHECK(ok);

    CorpusGenerator gen(4, CorpusParams{3, 4, 4});
    for (int k = 0; k < 15; ++k)
        CHECK(union_ass_check(ass_profile(gen.next_ideal(), 3)));
}

TEST_CASE("minimal primes stay constant across the profile") {
    CorpusGenerator gen(5, CorpusParams{3, 3, 3});
    for (int k = 0; k < 10; ++k) {
        AssProfile p = ass_profile(gen.next_ideal(), 3);
        auto minimal_of = [](const SupportSet& s) {
            SupportSet mins;
            for (const auto& p1 : s) {
                bool is_min = true;
                for (const auto& p2 : s) {
                    if (p1 == p2 || p2.vars.size() >= p1.vars.size())
                        continue;
                    if (std::includes(p1.vars.begin(), p1.vars.end(),
                                      p2.vars.begin(), p2.vars.end()))
                        is_min = false;
                }
                if (is_min) mins.push_back(p1);
            }
            return sorted_support_set(mins);
        };
        SupportSet first = minimal_of(p.ass_ring_quotients[0]);
        for (int n = 2; n <= 3; ++n)
            CHECK(minimal_of(p.ass_ring_quotients[n - 1]) == first);
    }
}
