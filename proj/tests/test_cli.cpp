#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "assprime/corpus.hpp"
#include "assprime/errors.hpp"
#include "assprime/gf.hpp"
#include "assprime/monomial_ideal.hpp"
#include "assprime/parser.hpp"
#include "assprime/version.hpp"

using namespace assprime;
using nlohmann::json;

namespace {

constexpr const char* kQuarticText =
    "ring a b c\nideal I = a^4, a^3*b, a*b^3, b^4, a^2*b^2*c\n";

// ---------------------------------------------------------------------------
// Subprocess harness
// ---------------------------------------------------------------------------

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_tool(const std::string& args) {
    std::string cmd =
        "\"" + std::string(TOOL_PATH) + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

// Variant that prefixes the command (for environment variables).
RunResult run_tool_env(const std::string& env, const std::string& args) {
    std::string cmd = env + " \"" + std::string(TOOL_PATH) + "\" " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::filesystem::path p =
        std::filesystem::temp_directory_path() / ("assprime_test_" + name);
    std::ofstream out(p);
    out << text;
    out.close();
    return p.string();
}

json parse_envelope(const RunResult& r) {
    json j = json::parse(r.out);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["inputs_digest"].get<std::string>().size() == 16);
    CHECK(j["timing_ms"].is_number());
    CHECK(j["caveats"].is_array());
    CHECK(j["command"].get<std::string>().rfind("assprime ", 0) == 0);
    return j;
}

int parse_line(const std::string& text) {
    try {
        parse_ideal_file(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

int parse_col(const std::string& text) {
    try {
        parse_ideal_file(text);
    } catch (const ParseError& e) {
        return e.column();
    }
    return -1;
}

} // namespace

// ---------------------------------------------------------------------------
// Ideal-file parser
// ---------------------------------------------------------------------------

TEST_CASE("ideal files parse into rings and monomial ideals") {
    IdealFile f = parse_ideal_file(kQuarticText);
    CHECK(f.ring.names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(!f.characteristic.has_value());
    REQUIRE(f.has_ideal("I"));
    MonomialIdeal I = f.monomial_ideal("I");
    CHECK(I == make_ideal(f.ring, {{4, 0, 0},
                                   {3, 1, 0},
                                   {1, 3, 0},
                                   {0, 4, 0},
                                   {2, 2, 1}}));

    IdealFile g = parse_ideal_file("ring x\nideal I = x^2\n");
    CHECK(g.monomial_ideal("I") == make_ideal(g.ring, {{2}}));

    // no trailing newline, comments, blank lines, CRLF, repeated variables
    IdealFile h = parse_ideal_file(
        "# a comment\nring x y\r\n\n# another\nideal I = x*y*x, y^2");
    CHECK(h.monomial_ideal("I") ==
          make_ideal(h.ring, {{2, 1}, {0, 2}}));

    // several ideals in one file
    IdealFile two = parse_ideal_file("ring x\nideal I = x\nideal J = x^3\n");
    CHECK(two.has_ideal("I"));
    CHECK(two.has_ideal("J"));
    CHECK(two.monomial_ideal("J") == make_ideal(two.ring, {{3}}));
    CHECK(!two.has_ideal("K"));
    CHECK_THROWS_AS(two.entry("K"), DomainError);
}

TEST_CASE("polynomial generators with fields and signs") {
    IdealFile f = parse_ideal_file(
        "ring x y\nfield 7\nideal I = x^2 - y^2, 2*x*y\nideal M = x^2, y\n");
    REQUIRE(f.characteristic.has_value());
    CHECK(*f.characteristic == 7);

    std::vector<Polynomial> polys = f.polynomials("I", FieldSpec(7));
    REQUIRE(polys.size() == 2);
    CHECK(polys[0].terms().size() == 2);
    CHECK(polys[0].terms()[0].coeff == 1);
    CHECK(polys[0].terms()[1].coeff == 6); // -1 reduced mod 7
    CHECK(polys[1].terms().size() == 1);
    CHECK(polys[1].terms()[0].coeff == 2);

    // multi-term and non-unit-coefficient generators are not monomial
    CHECK_THROWS_AS(f.monomial_ideal("I"), DomainError);
    CHECK(f.monomial_ideal("M") == make_ideal(f.ring, {{2, 0}, {0, 1}}));

    // an explicit unit coefficient is still a monomial generator
    IdealFile u = parse_ideal_file("ring x\nideal I = 1*x^2\n");
    CHECK(u.monomial_ideal("I") == make_ideal(u.ring, {{2}}));

    // constants parse as unit-monomial terms
    IdealFile c = parse_ideal_file("ring x\nideal I = 3\n");
    CHECK_THROWS_AS(c.monomial_ideal("I"), DomainError);
    std::vector<Polynomial> cp = c.polynomials("I", FieldSpec(5));
    REQUIRE(cp.size() == 1);
    CHECK(cp[0].degree() == 0);
    CHECK(cp[0].terms()[0].coeff == 3);
}

TEST_CASE("parse errors carry exact one-based positions") {
    CHECK(parse_line("ring x y\nideal I = x^^2\n") == 2);
    CHECK(parse_col("ring x y\nideal I = x^^2\n") == 13);

    CHECK(parse_line("ring x y\nideal I = x*z\n") == 2);
    CHECK(parse_col("ring x y\nideal I = x*z\n") == 13);

    CHECK(parse_line("ring x\nring y\n") == 2);
    CHECK(parse_col("ring x\nring y\n") == 1);

    CHECK(parse_line("ideal I = x\n") == 1);
    CHECK(parse_col("ideal I = x\n") == 1);

    CHECK(parse_line("ring x\nfield 10000000000000\n") == 2);
    CHECK(parse_col("ring x\nfield 10000000000000\n") == 7);

    CHECK(parse_line("ring x\nideal I = x?\n") == 2);
    CHECK(parse_col("ring x\nideal I = x?\n") == 12);

    CHECK(parse_line("ring x x\n") == 1);
    CHECK(parse_col("ring x x\n") == 8);

    CHECK(parse_line("ring x\nideal I = \n") == 2);
    CHECK(parse_line("ring x\nideal I = x\nideal I = x^2\n") == 3);
    CHECK(parse_line("ring x\nideal I = x^2000000\n") == 2);

    // exponents may accumulate up to the cap through repeated factors
    CHECK_THROWS_AS(parse_ideal_file("ring x\nideal I = x^900000*x^200000\n"),
                    ParseError);

    // well-formed input reports no position at all
    CHECK(parse_line(kQuarticText) == -1);

    // empty input is a valid file with no ring and no ideals
    IdealFile empty = parse_ideal_file("");
    CHECK(empty.ring.num_vars() == 0);
    CHECK(empty.ideals.empty());
}

// ---------------------------------------------------------------------------
// Deterministic corpus
// ---------------------------------------------------------------------------

TEST_CASE("the corpus stream is a pure function of seed and params") {
    CorpusParams params{3, 4, 4};
    CorpusGenerator a(2024, params), b(2024, params);
    for (int k = 0; k < 10; ++k) {
        auto [ia, ja] = a.next_pair();
        auto [ib, jb] = b.next_pair();
        CHECK(ia == ib);
        CHECK(ja == jb);
    }

    CorpusGenerator c(2024, params), d(2025, params);
    bool all_equal = true;
    for (int k = 0; k < 5; ++k) {
        MonomialIdeal ic = c.next_ideal(), id = d.next_ideal();
        if (!(ic == id)) all_equal = false;
    }
    CHECK(!all_equal);
}

TEST_CASE("corpus ideals respect their parameters") {
    CorpusParams params{3, 4, 4};
    CorpusGenerator gen(7, params);
    const std::string left_pool = "abcdef", right_pool = "uvwrst";
    for (int k = 0; k < 25; ++k) {
        auto [I, J] = gen.next_pair();
        for (const auto* ideal : {&I, &J}) {
            CHECK(ideal->is_proper());
            CHECK(ideal->ring().num_vars() <= params.max_vars);
            CHECK(ideal->num_gens() <= params.max_gens);
            std::vector<Monomial> gens = ideal->gens();
            CHECK(minimalize(ideal->ring(), std::move(gens)) == *ideal);
            for (const auto& g : ideal->gens())
                for (int i = 0; i < ideal->ring().num_vars(); ++i)
                    CHECK(g.exp(i) <= params.max_deg);
        }
        for (const auto& n : I.ring().names())
            CHECK(left_pool.find(n) != std::string::npos);
        for (const auto& n : J.ring().names())
            CHECK(right_pool.find(n) != std::string::npos);
    }
}

TEST_CASE("corpus parameters are validated") {
    CHECK_THROWS_AS(CorpusGenerator(1, CorpusParams{0, 4, 4}), DomainError);
    CHECK_THROWS_AS(CorpusGenerator(1, CorpusParams{7, 4, 4}), DomainError);
    CHECK_THROWS_AS(CorpusGenerator(1, CorpusParams{3, 0, 4}), DomainError);
    CHECK_THROWS_AS(CorpusGenerator(1, CorpusParams{3, 4, 0}), DomainError);
}

// ---------------------------------------------------------------------------
// End-to-end CLI runs
// ---------------------------------------------------------------------------

TEST_CASE("version and help exit cleanly") {
    RunResult v = run_tool("--version");
    CHECK(v.status == 0);
    CHECK(v.out.find("assprime 1.0.0 (schema assprime-report/1)") !=
          std::string::npos);

    CHECK(run_tool("--help").status == 0);
    CHECK(run_tool("").status == 2);           // a subcommand is required
    CHECK(run_tool("no-such-command").status == 2);
    CHECK(run_tool("ass").status == 2);        // missing required options
}

TEST_CASE("ass reports the profile of the quartic ideal") {
    std::string file = write_temp("quartic.txt", kQuarticText);
    RunResult r = run_tool("ass " + file + " --ideal I -n 2");
    REQUIRE(r.status == 0);
    json j = parse_envelope(r);
    CHECK(j["caveats"] == json::array({"windowed"}));
    json quotients = j["result"]["ass_ring_quotients"];
    REQUIRE(quotients.size() == 2);
    CHECK(quotients[0] == json::parse(R"([["a","b"],["a","b","c"]])"));
    CHECK(quotients[1] == json::parse(R"([["a","b"]])"));

    // envelope serialization is a fixpoint of parse + dump
    CHECK(json::parse(r.out).dump(2) + "\n" == r.out);

    // a second run differs at most in its timing field
    RunResult r2 = run_tool("ass " + file + " --ideal I -n 2");
    REQUIRE(r2.status == 0);
    json j2 = json::parse(r2.out);
    json j1 = json::parse(r.out);
    j1["timing_ms"] = 0;
    j2["timing_ms"] = 0;
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("ass-module reports subquotient primes") {
    std::string file = write_temp(
        "module.txt", "ring x y\nideal U = x\nideal V = x^2\n");
    RunResult r = run_tool("ass-module " + file + " --upper U --lower V");
    REQUIRE(r.status == 0);
    json j = parse_envelope(r);
    CHECK(j["result"]["ass"] == json::parse(R"([["x"]])"));
}

TEST_CASE("sum-verify confirms the formula on the quartic pair") {
    std::string a = write_temp("sum_a.txt", kQuarticText);
    std::string b = write_temp("sum_b.txt", "ring y\nideal J = y^2\n");
    RunResult r =
        run_tool("sum-verify " + a + " " + b + " --left I --right J -n 2");
    REQUIRE(r.status == 0);
    json j = parse_envelope(r);
    CHECK(j["result"]["match"] == true);
    CHECK(j["result"]["formula_value"] ==
          json::parse(R"([["a","b","y"],["a","b","c","y"]])"));
}

TEST_CASE("persistence reports the quartic failure with witness") {
    std::string file = write_temp("quartic.txt", kQuarticText);
    RunResult r =
        run_tool("persistence " + file + " --ideal I --max-n 3 --strong");
    REQUIRE(r.status == 0);
    json j = parse_envelope(r);
    json p = j["result"]["persistence"];
    CHECK(p["passed"] == false);
    CHECK(p["first_failure"]["n"] == 1);
    CHECK(p["first_failure"]["witness"] == json::parse(R"(["a","b","c"])"));
    CHECK(j["result"]["strong"] == json::parse("[false, true, true]"));
    CHECK(j["result"]["equivalences"]["verdicts_agree"] == true);
    CHECK(j["result"]["equivalences"]["implication_holds"] == true);
}

TEST_CASE("persistence transfers to a disjoint sum via --transfer") {
    std::string a = write_temp(
        "edges.txt", "ring x y z\nideal E = x*y, y*z, x*z\n");
    std::string b = write_temp("quartic.txt", kQuarticText);
    RunResult r = run_tool("persistence " + a + " --ideal E --max-n 3" +
                           " --transfer " + b + " --right I");
    REQUIRE(r.status == 0);
    json j = parse_envelope(r);
    CHECK(j["result"]["transfer"]["status"] == "passed");
    CHECK(j["result"]["transfer"]["sum_inclusions"] ==
          json::parse("[true, true]"));

    // --transfer without --right is a usage error
    CHECK(run_tool("persistence " + a + " --ideal E --max-n 3 --transfer " +
                   b)
              .status == 2);
}

TEST_CASE("ratliff-rush reports closure and stabilization") {
    std::string file = write_temp(
        "gap.txt", "ring x y\nideal I = x^4, x^3*y, x*y^3, y^4\n");
    RunResult r = run_tool("ratliff-rush " + file + " --ideal I --cap 10");
    REQUIRE(r.status == 0);
    json j = parse_envelope(r);
    CHECK(j["result"]["stabilized_at"] == 1);
    CHECK(j["result"]["cap_hit"] == false);
    CHECK(j["result"]["closure"]["generators"].size() == 5);
}

TEST_CASE("socle-check passes on the quartic ideal") {
    std::string file = write_temp("quartic.txt", kQuarticText);
    RunResult r = run_tool("socle-check " + file + " --ideal I --max-n 4");
    REQUIRE(r.status == 0);
    json j = parse_envelope(r);
    CHECK(j["result"]["all_pass"] == true);
    CHECK(j["result"]["verdicts"] == json::parse("[true, true, true]"));
}

TEST_CASE("gb-example runs registered instances") {
    RunResult g = run_tool("gb-example gorenstein-char2");
    REQUIRE(g.status == 0);
    json jg = parse_envelope(g);
    CHECK(jg["caveats"] == json::array()); // genuinely characteristic two
    CHECK(jg["result"]["all_pass"] == true);
    CHECK(jg["result"]["generator_count"] == 36);

    RunResult d = run_tool("gb-example gr-depth-zero");
    REQUIRE(d.status == 0);
    json jd = parse_envelope(d);
    CHECK(jd["caveats"] == json::array({"char-proxy"}));
    CHECK(jd["result"]["all_pass"] == true);

    // overriding the registered parameters reports but never fails the run
    RunResult o = run_tool("gb-example gorenstein-char2 --char 3");
    CHECK(o.status == 0);
    json jo = parse_envelope(o);
    CHECK(jo["result"]["characteristic"] == 3);

    CHECK(run_tool("gb-example no-such-example").status == 2);
}

TEST_CASE("fuzz passes small deterministic batches") {
    RunResult s = run_tool("fuzz --mode sum --count 3 --seed 5 --max-n 2");
    REQUIRE(s.status == 0);
    json js = parse_envelope(s);
    CHECK(js["result"]["summary"] == "3/3 match");
    CHECK(js["result"]["matched"] == 3);
    CHECK(js["result"]["first_counterexample"].is_null());

    RunResult t = run_tool("fuzz --mode triangle --count 5 --seed 9");
    REQUIRE(t.status == 0);
    CHECK(parse_envelope(t)["result"]["summary"] == "5/5 match");

    CHECK(run_tool("fuzz --mode bogus --count 1").status == 2);
}

TEST_CASE("reproduce replays registry cases and verifies expectations") {
    for (const std::string id :
         {"sect5-persistence-failure", "thm4-monomial-formula",
          "prop21-decomposition"}) {
        RunResult r = run_tool("reproduce " + id);
        REQUIRE(r.status == 0);
        json j = parse_envelope(r);
        CHECK(j["result"]["matched"] == true);
        CHECK(j["result"]["id"] == id);
        for (const auto& check : j["result"]["checks"])
            CHECK(check["pass"] == true);
    }
    CHECK(run_tool("reproduce nonexistent-case").status == 2);
}

TEST_CASE("exit codes distinguish failure classes") {
    std::string good = write_temp("quartic.txt", kQuarticText);
    std::string bad = write_temp("bad.txt", "ring x y\nideal I = x^^2\n");
    std::string huge = write_temp(
        "huge.txt", "ring x y z\nideal I = x^500*y^500*z^500\n");

    CHECK(run_tool("ass " + bad + " --ideal I").status == 3);
    CHECK(run_tool("ass " + huge + " --ideal I").status == 4);
    CHECK(run_tool("ass " + good + " --ideal NoSuchIdeal").status == 2);
    CHECK(run_tool("ass /no/such/file.txt --ideal I").status == 2);
    CHECK(run_tool("ass " + good + " --ideal I -n 0").status == 2);
}

TEST_CASE("thread budgets come from the flag or the environment") {
    std::string file = write_temp("quartic.txt", kQuarticText);
    CHECK(run_tool("--jobs 2 ass " + file + " --ideal I").status == 0);
    CHECK(run_tool_env("ASSPRIME_JOBS=2", "ass " + file + " --ideal I")
              .status == 0);
    // an unusable value falls back to the default silently
    CHECK(run_tool_env("ASSPRIME_JOBS=banana", "ass " + file + " --ideal I")
              .status == 0);
}
