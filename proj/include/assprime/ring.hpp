#pragma once

#include <memory>
#include <string>
#include <vector>

namespace assprime {

// A polynomial ring identified by its ordered list of variable names.
// Cheap to copy: instances share the name list.  Two Ring values are the
// same ring iff their name lists are equal element by element.
class Ring {
public:
    Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit Ring(std::vector<std::string> names);

    int num_vars() const { return static_cast<int>(names_->size()); }
    const std::vector<std::string>& names() const { return *names_; }
    const std::string& name(int i) const { return (*names_)[i]; }

    // Index of a variable name, -1 if absent.
    int index_of(const std::string& name) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

// Concatenated ring A * B.  Throws RingMismatchError if the name sets
// overlap.
Ring join_rings(const Ring& a, const Ring& b);

// Throws RingMismatchError unless a == b.  `where` names the operation
// for the error message.
void require_same_ring(const Ring& a, const Ring& b, const char* where);

} // namespace assprime
