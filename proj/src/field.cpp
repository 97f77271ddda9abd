#include "flagcoh/field.hpp"

#include <ostream>

namespace flagcoh {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Extended Euclid inverse of a mod p; throws if gcd(a, p) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw NotAUnitError("residue is not invertible modulo " + std::to_string(p));
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class pp(static_cast<unsigned long>(p));
    mpz_class r = z % pp;
    if (r < 0) r += pp;
    return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldTag FieldTag::prime(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 61))
        throw UsageError("prime modulus must satisfy 2 <= p < 2^61");
    if (!is_prime_u64(p))
        throw UsageError("modulus " + std::to_string(p) + " is not prime");
    return FieldTag{FieldKind::Prime, p};
}

std::string FieldTag::name() const {
    return kind == FieldKind::Rational ? "Q" : "Fp(" + std::to_string(p) + ")";
}

FieldScalar FieldScalar::zero(FieldTag tag) { return FieldScalar(tag, mpq_class(0), 0); }

FieldScalar FieldScalar::one(FieldTag tag) {
    return tag.kind == FieldKind::Rational ? FieldScalar(tag, mpq_class(1), 0)
                                           : FieldScalar(tag, mpq_class(0), 1 % tag.p);
}

FieldScalar FieldScalar::from_integer(long long v, FieldTag tag) {
    if (tag.kind == FieldKind::Rational) {
        mpq_class q;
        mpz_class z;
        mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
        q = z;
        return FieldScalar(tag, q, 0);
    }
    long long r = v % static_cast<long long>(tag.p);
    if (r < 0) r += static_cast<long long>(tag.p);
    return FieldScalar(tag, mpq_class(0), static_cast<std::uint64_t>(r));
}

FieldScalar FieldScalar::from_rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return FieldScalar(FieldTag::rationals(), c, 0);
}

FieldScalar FieldScalar::from_string(const std::string& s, FieldTag tag) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw UsageError("malformed scalar literal: '" + s + "'");
    q.canonicalize();
    if (tag.kind == FieldKind::Rational) return FieldScalar(tag, q, 0);
    std::uint64_t num = reduce_mpz(q.get_num(), tag.p);
    std::uint64_t den = reduce_mpz(q.get_den(), tag.p);
    return FieldScalar(tag, mpq_class(0), mulmod(num, invmod(den, tag.p), tag.p));
}

bool FieldScalar::is_zero() const {
    return tag_.kind == FieldKind::Rational ? q_ == 0 : r_ == 0;
}

bool FieldScalar::is_one() const {
    return tag_.kind == FieldKind::Rational ? q_ == 1 : r_ == 1 % tag_.p;
}

void FieldScalar::require_same_field(const FieldScalar& o) const {
    if (!(tag_ == o.tag_))
        throw UsageError("mixed coefficient fields: " + tag_.name() + " vs " + o.tag_.name());
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    require_same_field(o);
    if (tag_.kind == FieldKind::Rational) return FieldScalar(tag_, q_ + o.q_, 0);
    std::uint64_t s = r_ + o.r_;  // p < 2^61, no overflow
    if (s >= tag_.p) s -= tag_.p;
    return FieldScalar(tag_, mpq_class(0), s);
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    require_same_field(o);
    if (tag_.kind == FieldKind::Rational) return FieldScalar(tag_, q_ - o.q_, 0);
    std::uint64_t s = r_ >= o.r_ ? r_ - o.r_ : r_ + tag_.p - o.r_;
    return FieldScalar(tag_, mpq_class(0), s);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    require_same_field(o);
    if (tag_.kind == FieldKind::Rational) return FieldScalar(tag_, q_ * o.q_, 0);
    return FieldScalar(tag_, mpq_class(0), mulmod(r_, o.r_, tag_.p));
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    return *this * o.inverse();
}

FieldScalar FieldScalar::operator-() const {
    if (tag_.kind == FieldKind::Rational) return FieldScalar(tag_, -q_, 0);
    return FieldScalar(tag_, mpq_class(0), r_ == 0 ? 0 : tag_.p - r_);
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw NotAUnitError("zero has no inverse");
    if (tag_.kind == FieldKind::Rational) return FieldScalar(tag_, 1 / q_, 0);
    return FieldScalar(tag_, mpq_class(0), invmod(r_, tag_.p));
}

FieldScalar FieldScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldScalar acc = one(tag_);
    FieldScalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    if (!(tag_ == o.tag_)) return false;
    return tag_.kind == FieldKind::Rational ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldScalar::str() const {
    return tag_.kind == FieldKind::Rational ? q_.get_str() : std::to_string(r_);
}

const mpq_class& FieldScalar::rational() const {
    if (tag_.kind != FieldKind::Rational) throw UsageError("not a rational value");
    return q_;
}

std::uint64_t FieldScalar::residue() const {
    if (tag_.kind != FieldKind::Prime) throw UsageError("not a prime-field value");
    return r_;
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.str(); }

}  // namespace flagcoh
