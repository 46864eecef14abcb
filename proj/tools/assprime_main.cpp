// assprime — command-line surface over the associated-primes library.
//
// Every command prints a single JSON report envelope to stdout:
//   { "caveats": [...], "command": "...", "inputs_digest": "...",
//     "result": {...}, "schema": "...", "timing_ms": N, "tool_version": "..." }
// Keys are emitted in sorted order, so parse + re-serialize is the identity
// on bytes.  Exit codes: 0 ok, 2 usage, 3 parse error, 4 resource guard,
// 5 theorem violation (an internal-bug detector, unreachable when the
// library is correct).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "assprime/ass_engine.hpp"
#include "assprime/corpus.hpp"
#include "assprime/errors.hpp"
#include "assprime/json_io.hpp"
#include "assprime/monomial_ideal.hpp"
#include "assprime/named_examples.hpp"
#include "assprime/parser.hpp"
#include "assprime/persistence.hpp"
#include "assprime/sum_theorems.hpp"
#include "assprime/version.hpp"

namespace {

using nlohmann::json;
using namespace assprime;

// ---------------------------------------------------------------------------
// Report envelope plumbing
// ---------------------------------------------------------------------------

uint64_t fnv1a64(const std::vector<std::string>& parts) {
    uint64_t h = 0xCBF29CE484222325ULL;
    auto mix = [&h](unsigned char byte) {
        h ^= byte;
        h *= 0x00000100000001B3ULL;
    };
    for (const auto& part : parts) {
        for (unsigned char byte : part) mix(byte);
        mix(0); // separator so part boundaries matter
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Clock {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Prints the envelope.  `digest_parts` should begin with the command echo
// and continue with every input file's raw contents.
void emit(const std::string& command_echo,
          const std::vector<std::string>& digest_parts,
          const std::vector<std::string>& caveats, json result,
          long long timing_ms) {
    json envelope{
        {"schema", kSchemaVersion},
        {"tool_version", kToolVersion},
        {"command", command_echo},
        {"inputs_digest", hex64(fnv1a64(digest_parts))},
        {"caveats", caveats},
        {"result", std::move(result)},
        {"timing_ms", timing_ms},
    };
    std::cout << envelope.dump(2) << "\n";
}

int default_jobs() {
    if (const char* env = std::getenv("ASSPRIME_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024)
            return static_cast<int>(v);
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void apply_jobs(int jobs) {
#ifdef _OPENMP
    omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

// ---------------------------------------------------------------------------
// Brute-force associated-primes oracle (third route for `fuzz --mode
// triangle`).  Witnesses of I : m prime live inside the box bounded by the
// per-variable maximum exponents of the generators, so a full scan of that
// box is exhaustive.
// ---------------------------------------------------------------------------

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
            bool all_variables = !C.is_unit();
            std::vector<int> vars;
            for (const auto& g : C.gens()) {
                if (g.degree() != 1) {
                    all_variables = false;
                    break;
                }
                vars.push_back(g.support().front());
            }
            if (all_variables) {
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

// ---------------------------------------------------------------------------
// Command runners.  Each returns the process exit code.
// ---------------------------------------------------------------------------

struct CommonArgs {
    std::string echo;
    mutable int jobs = 1;
};

int run_ass(const CommonArgs& common, const std::string& file,
            const std::string& ideal_name, int max_n) {
    apply_jobs(common.jobs);
    std::string text = read_file(file);
    IdealFile parsed = parse_ideal_file(text);
    MonomialIdeal I = parsed.monomial_ideal(ideal_name);
    Clock clock;
    AssProfile profile = ass_profile(I, max_n);
    long long ms = clock.ms();
    emit(common.echo, {common.echo, text}, {"windowed"}, json_of(profile), ms);
    return 0;
}

int run_ass_module(const CommonArgs& common, const std::string& file,
                   const std::string& upper_name,
                   const std::string& lower_name) {
    apply_jobs(common.jobs);
    std::string text = read_file(file);
    IdealFile parsed = parse_ideal_file(text);
    MonomialIdeal U = parsed.monomial_ideal(upper_name);
    MonomialIdeal V = parsed.monomial_ideal(lower_name);
    Clock clock;
    SupportSet ass = ass_module(U, V);
    long long ms = clock.ms();
    json result{{"upper", json_of(U)},
                {"lower", json_of(V)},
                {"ass", json_of(ass)}};
    emit(common.echo, {common.echo, text}, {}, std::move(result), ms);
    return 0;
}

int run_sum_verify(const CommonArgs& common, const std::string& file_a,
                   const std::string& file_b, const std::string& left_name,
                   const std::string& right_name, int n) {
    apply_jobs(common.jobs);
    std::string text_a = read_file(file_a);
    std::string text_b = read_file(file_b);
    MonomialIdeal I = parse_ideal_file(text_a).monomial_ideal(left_name);
    MonomialIdeal J = parse_ideal_file(text_b).monomial_ideal(right_name);
    Clock clock;
    SumAssReport report = verify_sum_formula(I, J, n);
    long long ms = clock.ms();
    emit(common.echo, {common.echo, text_a, text_b}, {}, json_of(report), ms);
    // The formula is exact for monomial inputs; a mismatch is a library bug.
    return report.match ? 0 : 5;
}

int run_sum_asymptotic(const CommonArgs& common, const std::string& file_a,
                       const std::string& file_b, const std::string& left_name,
                       const std::string& right_name, int window) {
    apply_jobs(common.jobs);
    std::string text_a = read_file(file_a);
    std::string text_b = read_file(file_b);
    MonomialIdeal I = parse_ideal_file(text_a).monomial_ideal(left_name);
    MonomialIdeal J = parse_ideal_file(text_b).monomial_ideal(right_name);
    Clock clock;
    AsymptoticReport report = asymptotic_ass_sum(I, J, window);
    long long ms = clock.ms();
    emit(common.echo, {common.echo, text_a, text_b}, {"windowed"},
         json_of(report), ms);
    // An inconclusive window is a valid outcome; a conclusive window whose
    // stable set disagrees with the direct computation is a bug.
    return (report.conclusive && !report.matches_direct) ? 5 : 0;
}

int run_decomp_verify(const CommonArgs& common, const std::string& file_a,
                      const std::string& file_b, const std::string& left_name,
                      const std::string& right_name, int n, int dmax) {
    apply_jobs(common.jobs);
    std::string text_a = read_file(file_a);
    std::string text_b = read_file(file_b);
    MonomialIdeal I = parse_ideal_file(text_a).monomial_ideal(left_name);
    MonomialIdeal J = parse_ideal_file(text_b).monomial_ideal(right_name);
    Clock clock;
    bool holds = verify_decomposition(I, J, n, dmax);
    long long ms = clock.ms();
    json result{{"n", n}, {"dmax", dmax}, {"holds", holds}};
    emit(common.echo, {common.echo, text_a, text_b}, {"windowed"},
         std::move(result), ms);
    return holds ? 0 : 5;
}

int run_persistence(const CommonArgs& common, const std::string& file,
                    const std::string& ideal_name, int max_n, bool strong,
                    const std::string& transfer_file,
                    const std::string& right_name) {
    apply_jobs(common.jobs);
    std::string text = read_file(file);
    MonomialIdeal I = parse_ideal_file(text).monomial_ideal(ideal_name);
    std::vector<std::string> digest_parts{common.echo, text};

    int rc = 0;
    json result;
    Clock clock;
    if (!transfer_file.empty()) {
        std::string text_b = read_file(transfer_file);
        MonomialIdeal J = parse_ideal_file(text_b).monomial_ideal(right_name);
        digest_parts.push_back(text_b);
        TransferReport transfer = persistence_transfer_check(I, J, max_n);
        result["persistence"] = json_of(transfer.left);
        result["transfer"] = json_of(transfer);
        if (transfer.status == TransferStatus::theorem_violation) rc = 5;
    } else {
        result["persistence"] = json_of(persistence_check(I, max_n));
    }
    if (strong) {
        result["strong"] = json(strong_persistence_check(I, max_n));
        EquivalenceReport eq = strong_persistence_equivalences(I, max_n);
        result["equivalences"] = json_of(eq);
        // Windowed colon stability and colon-meet stability are equivalent
        // as window conjunctions, and colon stability forces the
        // associated-prime inclusions; either failing is a library bug.
        bool conj_i = true, conj_ii = true;
        for (bool b : eq.colon_stable) conj_i = conj_i && b;
        for (bool b : eq.colon_meet_stable) conj_ii = conj_ii && b;
        if (conj_i != conj_ii || !eq.implication_holds) rc = 5;
    }
    long long ms = clock.ms();
    emit(common.echo, digest_parts, {"windowed"}, std::move(result), ms);
    return rc;
}

int run_ratliff_rush(const CommonArgs& common, const std::string& file,
                     const std::string& ideal_name, int cap) {
    apply_jobs(common.jobs);
    std::string text = read_file(file);
    MonomialIdeal I = parse_ideal_file(text).monomial_ideal(ideal_name);
    Clock clock;
    RatliffRushReport report = ratliff_rush(I, cap);
    long long ms = clock.ms();
    emit(common.echo, {common.echo, text}, {"windowed"}, json_of(report), ms);
    return 0;
}

int run_socle_check(const CommonArgs& common, const std::string& file,
                    const std::string& ideal_name, int max_n) {
    apply_jobs(common.jobs);
    std::string text = read_file(file);
    MonomialIdeal I = parse_ideal_file(text).monomial_ideal(ideal_name);
    Clock clock;
    std::vector<bool> verdicts = socle_colon_check(I, max_n);
    bool all_pass = true;
    for (bool b : verdicts) all_pass = all_pass && b;
    long long ms = clock.ms();
    json result{{"ideal", json_of(I)},
                {"max_n", max_n},
                {"verdicts", verdicts},
                {"all_pass", all_pass}};
    emit(common.echo, {common.echo, text}, {"windowed"}, std::move(result),
         ms);
    // The socle-colon containment holds for every monomial ideal; a false
    // verdict is a library bug.
    return all_pass ? 0 : 5;
}

int run_gb_example(const CommonArgs& common, const std::string& name,
                   std::optional<long long> char_override,
                   std::optional<int> dmax_override) {
    apply_jobs(common.jobs);
    Clock clock;
    NamedExampleReport report =
        run_named_example(name, char_override, dmax_override);
    long long ms = clock.ms();
    std::vector<std::string> caveats;
    if (report.char_proxy) caveats.push_back("char-proxy");
    emit(common.echo, {common.echo}, caveats, json_of(report), ms);
    // At the registered characteristic and truncation degree the expected
    // facts are exact, so a failure is a bug; under user overrides the
    // facts may legitimately change, so only report them.
    bool defaults = !char_override.has_value() && !dmax_override.has_value();
    return (defaults && !report.all_pass) ? 5 : 0;
}

// --- fuzz ------------------------------------------------------------------

struct FuzzArgs {
    uint64_t seed = 1;
    int count = 100;
    int max_vars = 3;
    int max_gens = 4;
    int max_deg = 4;
    int max_n = 3;
    int dmax = 10;
    std::string mode = "sum";
};

struct InstanceOutcome {
    bool ok = true;
    json detail; // filled only on mismatch
};

InstanceOutcome fuzz_sum_instance(const MonomialIdeal& I,
                                  const MonomialIdeal& J, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        SumAssReport report = verify_sum_formula(I, J, n);
        if (!report.match)
            return {false,
                    json{{"left", json_of(I)},
                         {"right", json_of(J)},
                         {"n", n},
                         {"report", json_of(report)}}};
    }
    return {};
}

InstanceOutcome fuzz_triangle_instance(const MonomialIdeal& I) {
    SupportSet by_decomposition = ass_ring_quotient(I);
    SupportSet by_witness = ass_module(MonomialIdeal::unit(I.ring()), I);
    SupportSet by_brute_force = brute_force_ass(I);
    if (by_decomposition == by_witness && by_witness == by_brute_force)
        return {};
    return {false,
            json{{"ideal", json_of(I)},
                 {"by_decomposition", json_of(by_decomposition)},
                 {"by_witness", json_of(by_witness)},
                 {"by_brute_force", json_of(by_brute_force)}}};
}

InstanceOutcome fuzz_question3_instance(const MonomialIdeal& I, int max_n) {
    AssProfile profile = ass_profile(I, max_n);
    for (int n = 1; n <= max_n; ++n) {
        if (profile.ass_ring_quotients[n - 1] !=
            profile.ass_consecutive[n - 1])
            return {false,
                    json{{"ideal", json_of(I)},
                         {"n", n},
                         {"ass_ring_quotient",
                          json_of(profile.ass_ring_quotients[n - 1])},
                         {"ass_consecutive",
                          json_of(profile.ass_consecutive[n - 1])}}};
    }
    return {};
}

InstanceOutcome fuzz_decomp_instance(const MonomialIdeal& I,
                                     const MonomialIdeal& J, int max_n,
                                     int dmax) {
    Ring joined = join_rings(I.ring(), J.ring());
    MonomialIdeal Il = lift(I, joined, Side::left);
    MonomialIdeal Jl = lift(J, joined, Side::right);
    if (intersect(Il, Jl) != multiply(Il, Jl))
        return {false,
                json{{"left", json_of(I)},
                     {"right", json_of(J)},
                     {"failed", "intersection of disjoint lifts equals their "
                                "product"}}};
    for (int n = 1; n <= max_n; ++n) {
        if (!verify_decomposition(I, J, n, dmax))
            return {false,
                    json{{"left", json_of(I)},
                         {"right", json_of(J)},
                         {"n", n},
                         {"dmax", dmax},
                         {"failed", "degreewise decomposition counts"}}};
    }
    return {};
}

int run_fuzz(const CommonArgs& common, const FuzzArgs& args) {
    apply_jobs(common.jobs);
    CorpusParams params{args.max_vars, args.max_gens, args.max_deg};
    if (args.count < 1) throw DomainError("fuzz: count must be positive");
    if (args.max_n < 1) throw DomainError("fuzz: max-n must be positive");

    Clock clock;
    // Inputs are drawn serially so the stream depends only on (seed, params).
    CorpusGenerator gen(args.seed, params);
    bool needs_pairs = args.mode == "sum" || args.mode == "decomp";
    std::vector<std::pair<MonomialIdeal, MonomialIdeal>> pairs;
    std::vector<MonomialIdeal> ideals;
    for (int k = 0; k < args.count; ++k) {
        if (needs_pairs)
            pairs.push_back(gen.next_pair());
        else
            ideals.push_back(gen.next_ideal());
    }

    std::vector<InstanceOutcome> outcomes(args.count);
    std::exception_ptr pending = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < args.count; ++k) {
        try {
            if (args.mode == "sum")
                outcomes[k] = fuzz_sum_instance(pairs[k].first,
                                                pairs[k].second, args.max_n);
            else if (args.mode == "triangle")
                outcomes[k] = fuzz_triangle_instance(ideals[k]);
            else if (args.mode == "question3")
                outcomes[k] = fuzz_question3_instance(ideals[k], args.max_n);
            else
                outcomes[k] = fuzz_decomp_instance(
                    pairs[k].first, pairs[k].second, args.max_n, args.dmax);
        } catch (...) {
#pragma omp critical
            if (!pending) pending = std::current_exception();
        }
    }
    if (pending) std::rethrow_exception(pending);

    // Merge in input order for a deterministic report.
    int matched = 0;
    json first_counterexample(nullptr);
    int first_index = -1;
    for (int k = 0; k < args.count; ++k) {
        if (outcomes[k].ok) {
            ++matched;
        } else if (first_index < 0) {
            first_index = k;
            first_counterexample = outcomes[k].detail;
            first_counterexample["index"] = k;
        }
    }
    long long ms = clock.ms();

    json result{
        {"mode", args.mode},
        {"seed", args.seed},
        {"count", args.count},
        {"params",
         json{{"max_vars", args.max_vars},
              {"max_gens", args.max_gens},
              {"max_deg", args.max_deg},
              {"max_n", args.max_n},
              {"dmax", args.dmax}}},
        {"matched", matched},
        {"summary",
         std::to_string(matched) + "/" + std::to_string(args.count) +
             " match"},
        {"first_counterexample", first_counterexample},
    };
    emit(common.echo, {common.echo}, {"windowed"}, std::move(result), ms);
    return matched == args.count ? 0 : 5;
}

// --- reproduce ---------------------------------------------------------------

// The registry is data: input texts, parameters, and expected output
// fragments (JSON pointer → value) for each registered case.
struct RegistryEntry {
    const char* id;
    const char* description;
    const char* kind; // persistence | sum-verify | decomp-verify |
                      // sum-asymptotic | gb-example
    const char* text_a;
    const char* name_a;
    const char* text_b;
    const char* name_b;
    int n;    // max_n / n / window, by kind
    int dmax; // decomp-verify only
    const char* expectations; // JSON object literal
};

constexpr const char* kQuarticIdealText =
    "ring a b c\nideal I = a^4, a^3*b, a*b^3, b^4, a^2*b^2*c\n";

const RegistryEntry kRegistry[] = {
    {"sect5-persistence-failure",
     "a three-variable ideal whose embedded prime disappears from the second "
     "power on, so the associated primes do not persist",
     "persistence", kQuarticIdealText, "I", "", "", 3, 0,
     R"({"/passed": false, "/first_failure/n": 1,
         "/first_failure/witness": ["a","b","c"]})"},
    {"thm4-monomial-formula",
     "the closed-form associated primes of a power of a sum of disjoint "
     "monomial ideals agree with the direct computation",
     "sum-verify", kQuarticIdealText, "I", "ring y\nideal J = y^2\n", "J", 2,
     0,
     R"({"/match": true,
         "/formula_value": [["a","b","y"],["a","b","c","y"]]})"},
    {"prop21-decomposition",
     "degreewise counts of consecutive power quotients of a disjoint sum "
     "match the convolution of the factors' counts",
     "decomp-verify", "ring x\nideal I = x^2\n", "I",
     "ring y\nideal J = y^3\n", "J", 2, 8, R"({"/holds": true})"},
    {"gorenstein-char2",
     "over GF(2) the nine-variable quadric ideal has 36 minimal generators "
     "and a socle element of its square that lies outside the ideal",
     "gb-example", "gorenstein-char2", "", "", "", 0, 0,
     R"({"/all_pass": true, "/generator_count": 36,
         "/expected_generator_count": 36})"},
    {"gr-depth-zero",
     "membership facts exhibiting a socle element of the associated graded "
     "ring of a four-variable ideal, checked over a large prime standing in "
     "for characteristic zero",
     "gb-example", "gr-depth-zero", "", "", "", 0, 0,
     R"({"/all_pass": true})"},
    {"derivative-remark",
     "the derivative ideal of f*(x,y) contains x*f and y*f but neither f "
     "nor z*f, checked over a large prime standing in for characteristic "
     "zero",
     "gb-example", "derivative-remark", "", "", "", 0, 0,
     R"({"/all_pass": true})"},
    {"asymptotic-bound",
     "the stabilization index of a disjoint sum is bounded by the sum of "
     "the factors' indices minus one, and the stable set matches the "
     "predicted union",
     "sum-asymptotic", kQuarticIdealText, "I", "ring y\nideal J = y^2\n", "J",
     4, 0,
     R"({"/astab_left": 2, "/astab_right": 1, "/threshold": 2,
         "/conclusive": true, "/matches_direct": true,
         "/asymptotic_set": [["a","b","y"],["a","b","c","y"]]})"},
};

int run_reproduce(const CommonArgs& common, const std::string& id) {
    apply_jobs(common.jobs);
    const RegistryEntry* entry = nullptr;
    for (const auto& candidate : kRegistry)
        if (id == candidate.id) entry = &candidate;
    if (!entry) {
        std::string known;
        for (const auto& candidate : kRegistry) {
            if (!known.empty()) known += ", ";
            known += candidate.id;
        }
        throw DomainError("unknown registry case '" + id + "'; known: " +
                          known);
    }

    std::vector<std::string> digest_parts{common.echo};
    std::vector<std::string> caveats;
    const std::string kind = entry->kind;

    Clock clock;
    json payload;
    if (kind == "gb-example") {
        NamedExampleReport report =
            run_named_example(entry->text_a, std::nullopt, std::nullopt);
        if (report.char_proxy) caveats.push_back("char-proxy");
        payload = json_of(report);
    } else {
        std::string text_a = entry->text_a;
        digest_parts.push_back(text_a);
        MonomialIdeal I = parse_ideal_file(text_a).monomial_ideal(
            entry->name_a);
        if (kind == "persistence") {
            caveats.push_back("windowed");
            payload = json_of(persistence_check(I, entry->n));
        } else {
            std::string text_b = entry->text_b;
            digest_parts.push_back(text_b);
            MonomialIdeal J = parse_ideal_file(text_b).monomial_ideal(
                entry->name_b);
            if (kind == "sum-verify") {
                payload = json_of(verify_sum_formula(I, J, entry->n));
            } else if (kind == "decomp-verify") {
                caveats.push_back("windowed");
                bool holds =
                    verify_decomposition(I, J, entry->n, entry->dmax);
                payload = json{{"n", entry->n},
                               {"dmax", entry->dmax},
                               {"holds", holds}};
            } else { // sum-asymptotic
                caveats.push_back("windowed");
                payload = json_of(asymptotic_ass_sum(I, J, entry->n));
            }
        }
    }

    json expected = json::parse(entry->expectations);
    json checks = json::array();
    bool matched = true;
    for (const auto& [pointer, value] : expected.items()) {
        json actual;
        bool present = true;
        try {
            actual = payload.at(json::json_pointer(pointer));
        } catch (const json::exception&) {
            present = false;
        }
        bool pass = present && actual == value;
        matched = matched && pass;
        checks.push_back(json{{"expectation", pointer},
                              {"expected", value},
                              {"actual", present ? actual : json(nullptr)},
                              {"pass", pass}});
    }
    long long ms = clock.ms();

    json result{{"id", entry->id},
                {"description", entry->description},
                {"kind", entry->kind},
                {"checks", checks},
                {"matched", matched},
                {"payload", std::move(payload)}};
    emit(common.echo, digest_parts, caveats, std::move(result), ms);
    return matched ? 0 : 5;
}

std::string echo_of(int argc, char** argv) {
    std::string echo = "assprime";
    for (int i = 1; i < argc; ++i) {
        echo += ' ';
        echo += argv[i];
    }
    return echo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"associated primes of powers of sums of monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("assprime ") + kToolVersion +
                                          " (schema " + kSchemaVersion + ")");

    CommonArgs common;
    common.echo = echo_of(argc, argv);
    common.jobs = default_jobs();
    app.add_option("--jobs", common.jobs,
                   "thread budget (default: ASSPRIME_JOBS or all cores)")
        ->check(CLI::PositiveNumber);

    int exit_code = 0;

    // ass <file> --ideal I [-n N]
    {
        auto* sub = app.add_subcommand(
            "ass", "associated primes of R/I^n for n = 1..N");
        auto file = std::make_shared<std::string>();
        auto ideal = std::make_shared<std::string>();
        auto max_n = std::make_shared<int>(1);
        sub->add_option("file", *file, "ideal file")->required();
        sub->add_option("--ideal", *ideal, "ideal name")->required();
        sub->add_option("-n,--max-n", *max_n, "largest power")
            ->check(CLI::PositiveNumber);
        sub->callback([&, file, ideal, max_n] {
            exit_code = run_ass(common, *file, *ideal, *max_n);
        });
    }

    // ass-module <file> --upper U --lower V
    {
        auto* sub = app.add_subcommand(
            "ass-module", "associated primes of the subquotient U/V");
        auto file = std::make_shared<std::string>();
        auto upper = std::make_shared<std::string>();
        auto lower = std::make_shared<std::string>();
        sub->add_option("file", *file, "ideal file")->required();
        sub->add_option("--upper", *upper, "numerator ideal name")->required();
        sub->add_option("--lower", *lower, "denominator ideal name")
            ->required();
        sub->callback([&, file, upper, lower] {
            exit_code = run_ass_module(common, *file, *upper, *lower);
        });
    }

    // sum-verify <fileA> <fileB> --left I --right J -n N
    {
        auto* sub = app.add_subcommand(
            "sum-verify",
            "check the associated-prime formula for (I+J)^n against the "
            "direct computation");
        auto file_a = std::make_shared<std::string>();
        auto file_b = std::make_shared<std::string>();
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto n = std::make_shared<int>(1);
        sub->add_option("fileA", *file_a, "left ideal file")->required();
        sub->add_option("fileB", *file_b, "right ideal file")->required();
        sub->add_option("--left", *left, "ideal name in fileA")->required();
        sub->add_option("--right", *right, "ideal name in fileB")->required();
        sub->add_option("-n", *n, "power")->check(CLI::PositiveNumber);
        sub->callback([&, file_a, file_b, left, right, n] {
            exit_code =
                run_sum_verify(common, *file_a, *file_b, *left, *right, *n);
        });
    }

    // sum-asymptotic <fileA> <fileB> --left I --right J --window W
    {
        auto* sub = app.add_subcommand(
            "sum-asymptotic",
            "windowed stabilization of the associated primes of (I+J)^n");
        auto file_a = std::make_shared<std::string>();
        auto file_b = std::make_shared<std::string>();
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto window = std::make_shared<int>(4);
        sub->add_option("fileA", *file_a, "left ideal file")->required();
        sub->add_option("fileB", *file_b, "right ideal file")->required();
        sub->add_option("--left", *left, "ideal name in fileA")->required();
        sub->add_option("--right", *right, "ideal name in fileB")->required();
        sub->add_option("--window", *window, "largest power examined")
            ->check(CLI::PositiveNumber);
        sub->callback([&, file_a, file_b, left, right, window] {
            exit_code = run_sum_asymptotic(common, *file_a, *file_b, *left,
                                           *right, *window);
        });
    }

    // decomp-verify <fileA> <fileB> --left I --right J -n N --dmax D
    {
        auto* sub = app.add_subcommand(
            "decomp-verify",
            "degreewise count check of the consecutive-power decomposition "
            "of a disjoint sum");
        auto file_a = std::make_shared<std::string>();
        auto file_b = std::make_shared<std::string>();
        auto left = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        auto n = std::make_shared<int>(1);
        auto dmax = std::make_shared<int>(10);
        sub->add_option("fileA", *file_a, "left ideal file")->required();
        sub->add_option("fileB", *file_b, "right ideal file")->required();
        sub->add_option("--left", *left, "ideal name in fileA")->required();
        sub->add_option("--right", *right, "ideal name in fileB")->required();
        sub->add_option("-n", *n, "power")->check(CLI::PositiveNumber);
        sub->add_option("--dmax", *dmax, "largest degree checked")
            ->check(CLI::NonNegativeNumber);
        sub->callback([&, file_a, file_b, left, right, n, dmax] {
            exit_code = run_decomp_verify(common, *file_a, *file_b, *left,
                                          *right, *n, *dmax);
        });
    }

    // persistence <file> --ideal I --max-n N [--strong]
    //             [--transfer <fileB> --right J]
    {
        auto* sub = app.add_subcommand(
            "persistence",
            "check that associated primes persist across consecutive powers");
        auto file = std::make_shared<std::string>();
        auto ideal = std::make_shared<std::string>();
        auto max_n = std::make_shared<int>(3);
        auto strong = std::make_shared<bool>(false);
        auto transfer = std::make_shared<std::string>();
        auto right = std::make_shared<std::string>();
        sub->add_option("file", *file, "ideal file")->required();
        sub->add_option("--ideal", *ideal, "ideal name")->required();
        sub->add_option("--max-n", *max_n, "largest power")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_flag("--strong", *strong,
                      "also check colon stability, its meet variant, and "
                      "Ratliff-Rush closedness");
        auto* transfer_opt = sub->add_option(
            "--transfer", *transfer,
            "right ideal file: check persistence of the disjoint sum");
        sub->add_option("--right", *right, "ideal name in the transfer file")
            ->needs(transfer_opt);
        transfer_opt->needs(sub->get_option("--right"));
        sub->callback([&, file, ideal, max_n, strong, transfer, right] {
            exit_code = run_persistence(common, *file, *ideal, *max_n,
                                        *strong, *transfer, *right);
        });
    }

    // ratliff-rush <file> --ideal I --cap C
    {
        auto* sub = app.add_subcommand(
            "ratliff-rush", "iterated-colon closure of a monomial ideal");
        auto file = std::make_shared<std::string>();
        auto ideal = std::make_shared<std::string>();
        auto cap = std::make_shared<int>(10);
        sub->add_option("file", *file, "ideal file")->required();
        sub->add_option("--ideal", *ideal, "ideal name")->required();
        sub->add_option("--cap", *cap, "iteration cap")
            ->check(CLI::PositiveNumber);
        sub->callback([&, file, ideal, cap] {
            exit_code = run_ratliff_rush(common, *file, *ideal, *cap);
        });
    }

    // socle-check <file> --ideal I --max-n N
    {
        auto* sub = app.add_subcommand(
            "socle-check",
            "check I^n : (all variables) is contained in I^(n-1)");
        auto file = std::make_shared<std::string>();
        auto ideal = std::make_shared<std::string>();
        auto max_n = std::make_shared<int>(4);
        sub->add_option("file", *file, "ideal file")->required();
        sub->add_option("--ideal", *ideal, "ideal name")->required();
        sub->add_option("--max-n", *max_n, "largest power")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->callback([&, file, ideal, max_n] {
            exit_code = run_socle_check(common, *file, *ideal, *max_n);
        });
    }

    // gb-example <name> [--char p] [--dmax d]
    {
        auto* sub = app.add_subcommand(
            "gb-example",
            "run a registered polynomial example through the truncated "
            "Groebner engine");
        auto name = std::make_shared<std::string>();
        auto char_p = std::make_shared<long long>(0);
        auto dmax = std::make_shared<int>(0);
        sub->add_option("name", *name, "registered example name")->required();
        auto* char_opt =
            sub->add_option("--char", *char_p, "field characteristic");
        auto* dmax_opt =
            sub->add_option("--dmax", *dmax, "truncation degree");
        sub->callback([&, sub, name, char_p, dmax, char_opt, dmax_opt] {
            (void)sub;
            std::optional<long long> char_override;
            std::optional<int> dmax_override;
            if (char_opt->count() > 0) char_override = *char_p;
            if (dmax_opt->count() > 0) dmax_override = *dmax;
            exit_code =
                run_gb_example(common, *name, char_override, dmax_override);
        });
    }

    // fuzz --seed S --count C ...
    {
        auto* sub = app.add_subcommand(
            "fuzz",
            "random-corpus cross-checks; any mismatch is a library bug");
        auto args = std::make_shared<FuzzArgs>();
        sub->add_option("--seed", args->seed, "corpus seed")
            ->capture_default_str();
        sub->add_option("--count", args->count, "number of instances")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--max-vars", args->max_vars,
                        "variables per side (1..6)")
            ->check(CLI::Range(1, 6))
            ->capture_default_str();
        sub->add_option("--max-gens", args->max_gens, "generators per ideal")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--max-deg", args->max_deg,
                        "largest exponent per variable")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--max-n", args->max_n, "largest power")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--dmax", args->dmax,
                        "largest degree for decomp mode")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        sub->add_option("--mode", args->mode,
                        "sum | triangle | question3 | decomp")
            ->check(CLI::IsMember({"sum", "triangle", "question3", "decomp"}))
            ->capture_default_str();
        sub->callback([&, args] { exit_code = run_fuzz(common, *args); });
    }

    // reproduce <id>
    {
        auto* sub = app.add_subcommand(
            "reproduce",
            "re-run a registered case and compare against its expected "
            "output");
        auto id = std::make_shared<std::string>();
        sub->add_option("id", *id, "registry id")->required();
        sub->callback(
            [&, id] { exit_code = run_reproduce(common, *id); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const TheoremViolationError& e) {
        std::cerr << "theorem violation (library bug): " << e.what() << "\n";
        return 5;
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 4;
    } catch (const RingMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
