#include "assprime/parser.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "assprime/errors.hpp"

namespace assprime {

namespace {

constexpr long long kMaxLiteral = 1'000'000'000'000LL;
constexpr long long kMaxExponent = 1'000'000;

struct Token {
    enum Kind { ident, number, symbol, newline, end } kind = end;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_blanks();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ == text_.size()) {
            t.kind = Token::end;
            return t;
        }
        char c = text_[pos_];
        if (c == '\n') {
            advance();
            t.kind = Token::newline;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::number;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                t.text += text_[pos_];
                t.value = t.value * 10 + (text_[pos_] - '0');
                if (t.value > kMaxLiteral)
                    throw ParseError(t.line, t.col, "number too large");
                advance();
            }
            return t;
        }
        if (std::string("=,+-*^").find(c) != std::string::npos) {
            t.kind = Token::symbol;
            t.text = c;
            advance();
            return t;
        }
        throw ParseError(line_, col_,
                         std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blanks() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    IdealFile parse() {
        IdealFile file;
        bool have_ring = false;
        while (tok_.kind != Token::end) {
            if (tok_.kind == Token::newline) {
                advance();
                continue;
            }
            if (tok_.kind != Token::ident)
                fail("expected 'ring', 'field', or 'ideal'");
            if (tok_.text == "ring") {
                if (have_ring) fail("duplicate ring declaration");
                advance();
                file.ring = parse_ring();
                have_ring = true;
            } else if (tok_.text == "field") {
                if (file.characteristic) fail("duplicate field declaration");
                advance();
                if (tok_.kind != Token::number)
                    fail("expected a characteristic after 'field'");
                file.characteristic = tok_.value;
                advance();
                end_statement();
            } else if (tok_.text == "ideal") {
                if (!have_ring)
                    fail("the ring must be declared before any ideal");
                advance();
                file.ideals.push_back(parse_ideal(file));
            } else {
                fail("expected 'ring', 'field', or 'ideal'");
            }
        }
        return file;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(tok_.line, tok_.col, what);
    }

    void advance() { tok_ = lexer_.next(); }

    void end_statement() {
        if (tok_.kind == Token::end) return;
        if (tok_.kind != Token::newline) fail("expected end of line");
        advance();
    }

    Ring parse_ring() {
        std::vector<std::string> names;
        while (tok_.kind == Token::ident) {
            if (std::find(names.begin(), names.end(), tok_.text) !=
                names.end())
                fail("duplicate variable name '" + tok_.text + "'");
            names.push_back(tok_.text);
            advance();
        }
        if (names.empty()) fail("expected at least one variable name");
        end_statement();
        return Ring(std::move(names));
    }

    NamedGenerators parse_ideal(const IdealFile& file) {
        if (tok_.kind != Token::ident) fail("expected an ideal name");
        NamedGenerators entry;
        entry.name = tok_.text;
        if (file.has_ideal(entry.name))
            fail("duplicate ideal name '" + entry.name + "'");
        advance();
        if (tok_.kind != Token::symbol || tok_.text != "=")
            fail("expected '=' after the ideal name");
        advance();
        entry.generators.push_back(parse_generator(file.ring));
        while (tok_.kind == Token::symbol && tok_.text == ",") {
            advance();
            entry.generators.push_back(parse_generator(file.ring));
        }
        end_statement();
        return entry;
    }

    ParsedGenerator parse_generator(const Ring& ring) {
        ParsedGenerator terms;
        long long sign = 1;
        if (tok_.kind == Token::symbol && tok_.text == "-") {
            sign = -1;
            advance();
        }
        terms.push_back(parse_term(ring, sign));
        while (tok_.kind == Token::symbol &&
               (tok_.text == "+" || tok_.text == "-")) {
            sign = tok_.text == "+" ? 1 : -1;
            advance();
            terms.push_back(parse_term(ring, sign));
        }
        return terms;
    }

    ParsedTerm parse_term(const Ring& ring, long long sign) {
        ParsedTerm term;
        term.coeff = sign;
        if (tok_.kind == Token::number) {
            term.coeff *= tok_.value;
            advance();
            if (tok_.kind == Token::symbol && tok_.text == "*") {
                advance();
            } else {
                term.monomial = Monomial::unit(ring.num_vars());
                return term;
            }
        }
        std::vector<int> exps(ring.num_vars(), 0);
        while (true) {
            if (tok_.kind != Token::ident) fail("expected a variable name");
            int var = ring.index_of(tok_.text);
            if (var < 0) fail("unknown variable '" + tok_.text + "'");
            advance();
            long long e = 1;
            if (tok_.kind == Token::symbol && tok_.text == "^") {
                advance();
                if (tok_.kind != Token::number)
                    fail("expected an exponent after '^'");
                e = tok_.value;
                advance();
            }
            if (e > kMaxExponent ||
                exps[var] > kMaxExponent - e)
                fail("exponent too large");
            exps[var] += static_cast<int>(e);
            if (tok_.kind == Token::symbol && tok_.text == "*") {
                advance();
                continue;
            }
            break;
        }
        term.monomial = Monomial(std::move(exps));
        return term;
    }

    Lexer lexer_;
    Token tok_;
};

} // namespace

bool IdealFile::has_ideal(const std::string& name) const {
    for (const auto& entry : ideals)
        if (entry.name == name) return true;
    return false;
}

const NamedGenerators& IdealFile::entry(const std::string& name) const {
    for (const auto& e : ideals)
        if (e.name == name) return e;
    throw DomainError("unknown ideal '" + name + "'");
}

MonomialIdeal IdealFile::monomial_ideal(const std::string& name) const {
    const NamedGenerators& e = entry(name);
    std::vector<Monomial> gens;
    gens.reserve(e.generators.size());
    for (const auto& gen : e.generators) {
        if (gen.size() != 1 || gen.front().coeff != 1)
            throw DomainError("ideal '" + name +
                              "' has a non-monomial generator");
        gens.push_back(gen.front().monomial);
    }
    return minimalize(ring, std::move(gens));
}

std::vector<Polynomial> IdealFile::polynomials(const std::string& name,
                                               const FieldSpec& field) const {
    const NamedGenerators& e = entry(name);
    std::vector<Polynomial> out;
    out.reserve(e.generators.size());
    for (const auto& gen : e.generators) {
        std::vector<Term> terms;
        terms.reserve(gen.size());
        for (const auto& t : gen) terms.push_back({t.monomial, t.coeff});
        out.push_back(Polynomial::from_terms(ring, field, std::move(terms)));
    }
    return out;
}

IdealFile parse_ideal_file(const std::string& text) {
    return Parser(text).parse();
}

} // namespace assprime
