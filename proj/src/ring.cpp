#include "assprime/ring.hpp"

#include <set>

#include "assprime/errors.hpp"

namespace assprime {

Ring::Ring(std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty())
            throw DomainError("variable name must be nonempty");
        if (!seen.insert(n).second)
            throw DomainError("duplicate variable name '" + n + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

int Ring::index_of(const std::string& name) const {
    for (int i = 0; i < num_vars(); ++i)
        if ((*names_)[i] == name) return i;
    return -1;
}

Ring join_rings(const Ring& a, const Ring& b) {
    std::vector<std::string> names = a.names();
    for (const auto& n : b.names()) {
        if (a.index_of(n) >= 0)
            throw RingMismatchError("join_rings: variable '" + n +
                                    "' appears on both sides");
        names.push_back(n);
    }
    return Ring(std::move(names));
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (a != b)
        throw RingMismatchError(std::string(where) +
                                ": operands live in different rings");
}

} // namespace assprime
