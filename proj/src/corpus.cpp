#include "assprime/corpus.hpp"

#include <string>

#include "assprime/errors.hpp"

namespace assprime {

namespace {

const char* const kLeftPool[] = {"a", "b", "c", "d", "e", "f"};
const char* const kRightPool[] = {"u", "v", "w", "r", "s", "t"};
constexpr int kPoolSize = 6;

} // namespace

CorpusGenerator::CorpusGenerator(uint64_t seed, CorpusParams params)
    : state_(seed), params_(params) {
    if (params.max_vars < 1 || params.max_vars > kPoolSize)
        throw DomainError("corpus max_vars must be in [1, " +
                          std::to_string(kPoolSize) + "]");
    if (params.max_gens < 1)
        throw DomainError("corpus max_gens must be at least 1");
    if (params.max_deg < 1)
        throw DomainError("corpus max_deg must be at least 1");
}

uint64_t CorpusGenerator::next() {
    // splitmix64; the reference constants, stable across platforms.
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t CorpusGenerator::below(uint64_t n) { return next() % n; }

MonomialIdeal CorpusGenerator::draw(const char* const* pool) {
    while (true) {
        int nvars = 1 + static_cast<int>(below(params_.max_vars));
        std::vector<std::string> names(pool, pool + nvars);
        Ring ring{std::move(names)};

        int ngens = 1 + static_cast<int>(below(params_.max_gens));
        std::vector<Monomial> gens;
        gens.reserve(ngens);
        for (int g = 0; g < ngens; ++g) {
            std::vector<int> exps(nvars, 0);
            bool zero = true;
            do {
                zero = true;
                for (int i = 0; i < nvars; ++i) {
                    exps[i] = static_cast<int>(below(params_.max_deg + 1));
                    if (exps[i] > 0) zero = false;
                }
            } while (zero);
            gens.emplace_back(exps);
        }
        MonomialIdeal ideal = minimalize(ring, std::move(gens));
        if (ideal.is_proper()) return ideal;
    }
}

MonomialIdeal CorpusGenerator::next_ideal() { return draw(kLeftPool); }

std::pair<MonomialIdeal, MonomialIdeal> CorpusGenerator::next_pair() {
    MonomialIdeal left = draw(kLeftPool);
    MonomialIdeal right = draw(kRightPool);
    return {std::move(left), std::move(right)};
}

} // namespace assprime
