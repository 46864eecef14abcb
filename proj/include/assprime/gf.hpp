#pragma once

namespace assprime {

// Prime field GF(p).  Elements are canonical residues in [0, p).
class FieldSpec {
public:
    // Rejects composites and p outside [2, 2^31).
    explicit FieldSpec(long long p);

    long long characteristic() const { return p_; }
    // Whether 1/2 exists in the field, i.e. p is odd.
    bool has_half() const { return p_ != 2; }

    // Canonical residue of an arbitrary integer.
    long long reduce(long long a) const { return ((a % p_) + p_) % p_; }

    long long add(long long a, long long b) const { return (a + b) % p_; }
    long long sub(long long a, long long b) const {
        return (a - b + p_) % p_;
    }
    long long neg(long long a) const { return a == 0 ? 0 : p_ - a; }
    long long mul(long long a, long long b) const { return (a * b) % p_; }
    long long inv(long long a) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.p_ == b.p_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) {
        return !(a == b);
    }

private:
    long long p_;
};

} // namespace assprime
