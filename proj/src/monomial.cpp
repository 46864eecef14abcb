#include "assprime/monomial.hpp"

#include <algorithm>
#include <limits>

#include "assprime/errors.hpp"

namespace assprime {

namespace {

void require_same_length(const Monomial& a, const Monomial& b,
                         const char* where) {
    if (a.num_vars() != b.num_vars())
        throw RingMismatchError(std::string(where) +
                                ": exponent vectors have different lengths");
}

int checked_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (s > std::numeric_limits<int>::max())
        throw DomainError("monomial exponent overflow");
    return static_cast<int>(s);
}

} // namespace

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0) throw DomainError("monomial exponent must be >= 0");
}

Monomial Monomial::unit(int num_vars) {
    return Monomial(std::vector<int>(num_vars, 0));
}

Monomial Monomial::variable(int num_vars, int i) {
    std::vector<int> e(num_vars, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
}

long long Monomial::degree() const {
    long long d = 0;
    for (int e : exps_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](int e) { return e == 0; });
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < num_vars(); ++i)
        if (exps_[i] > 0) s.push_back(i);
    return s;
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_length(a, b, "divides");
    for (int i = 0; i < a.num_vars(); ++i)
        if (a.exp(i) > b.exp(i)) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_length(a, b, "lcm");
    std::vector<int> e(a.num_vars());
    for (int i = 0; i < a.num_vars(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_length(a, b, "gcd");
    std::vector<int> e(a.num_vars());
    for (int i = 0; i < a.num_vars(); ++i) e[i] = std::min(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

Monomial product(const Monomial& a, const Monomial& b) {
    require_same_length(a, b, "product");
    std::vector<int> e(a.num_vars());
    for (int i = 0; i < a.num_vars(); ++i)
        e[i] = checked_add(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

Monomial power(const Monomial& a, int k) {
    if (k < 0) throw DomainError("monomial power requires k >= 0");
    std::vector<int> e(a.num_vars());
    for (int i = 0; i < a.num_vars(); ++i) {
        long long v = static_cast<long long>(a.exp(i)) * k;
        if (v > std::numeric_limits<int>::max())
            throw DomainError("monomial exponent overflow");
        e[i] = static_cast<int>(v);
    }
    return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
    require_same_length(a, b, "colon_quotient");
    std::vector<int> e(a.num_vars());
    for (int i = 0; i < a.num_vars(); ++i)
        e[i] = std::max(a.exp(i) - b.exp(i), 0);
    return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps() < b.exps();
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = a.num_vars() - 1; i >= 0; --i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i);
    return false;
}

std::string to_string(const Monomial& m, const Ring& ring) {
    if (m.num_vars() != ring.num_vars())
        throw RingMismatchError("to_string: monomial does not fit ring");
    if (m.is_unit()) return "1";
    std::string out;
    for (int i = 0; i < m.num_vars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.name(i);
        if (m.exp(i) > 1) out += "^" + std::to_string(m.exp(i));
    }
    return out;
}

} // namespace assprime
