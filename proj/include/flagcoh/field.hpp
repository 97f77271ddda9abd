#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "flagcoh/errors.hpp"

namespace flagcoh {

enum class FieldKind : std::uint8_t { Rational, Prime };

/// Identifies the coefficient field of a value: Q, or F_p for a prime p.
/// Values of different fields never interact; every mixed operation throws.
struct FieldTag {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t p = 0;  // modulus, Prime only

    static FieldTag rationals() { return FieldTag{FieldKind::Rational, 0}; }
    static FieldTag prime(std::uint64_t p);  // validates 2 <= p < 2^61, p prime

    bool operator==(const FieldTag&) const = default;
    std::string name() const;  // "Q" or "Fp(<p>)"
};

/// Exact scalar in Q (arbitrary precision) or F_p (reduced representative in
/// [0, p)).  All arithmetic is exact; there is no floating point anywhere.
class FieldScalar {
public:
    FieldScalar() : tag_(FieldTag::rationals()) {}

    static FieldScalar zero(FieldTag tag);
    static FieldScalar one(FieldTag tag);
    static FieldScalar from_integer(long long v, FieldTag tag);
    /// Accepts "p/q" or a plain integer; value is reduced into the field.
    static FieldScalar from_string(const std::string& s, FieldTag tag);
    static FieldScalar from_rational(const mpq_class& q);

    FieldTag tag() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const;
    FieldScalar operator-() const;
    FieldScalar inverse() const;
    /// Integer power; negative exponents invert (NotAUnitError on zero base).
    FieldScalar pow(long long e) const;

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// Canonical text form: "3", "-3/2" over Q; decimal representative over F_p.
    std::string str() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;

private:
    FieldScalar(FieldTag tag, mpq_class q, std::uint64_t r)
        : tag_(tag), q_(std::move(q)), r_(r) {}
    void require_same_field(const FieldScalar& o) const;

    FieldTag tag_;
    mpq_class q_;           // Rational payload
    std::uint64_t r_ = 0;   // Prime payload
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& x);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace flagcoh
