#include "matwork/field.hpp"

namespace matwork {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Extended Euclid: returns x with a*x = gcd(a, p) mod p.
std::int64_t euclid_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t r0 = p, r1 = a, x0 = 0, x1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t x2 = x0 - q * x1;
        r0 = r1;
        r1 = r2;
        x0 = x1;
        x1 = x2;
    }
    if (r0 != 1) throw ZeroInverseError("element not invertible mod p");
    return ((x0 % p) + p) % p;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31) || !is_prime(p))
        throw NotPrimeError("p must be a prime below 2^31, got " + std::to_string(p));
    return FieldSpec(p);
}

mpq_class FieldSpec::canonical(const mpq_class& v) const {
    mpq_class c = v;
    c.canonicalize();
    if (p_ == 0) return c;
    mpz_class num = c.get_num() % p_;
    if (num < 0) num += p_;
    if (c.get_den() == 1) return mpq_class(num);
    mpz_class den = c.get_den() % p_;
    std::int64_t d = den.get_si();
    if (d == 0) throw ZeroInverseError("denominator vanishes mod p");
    return mpq_class((num * euclid_inverse(d, p_)) % p_);
}

mpq_class FieldSpec::add(const mpq_class& a, const mpq_class& b) const {
    return canonical(a + b);
}

mpq_class FieldSpec::sub(const mpq_class& a, const mpq_class& b) const {
    return canonical(a - b);
}

mpq_class FieldSpec::mul(const mpq_class& a, const mpq_class& b) const {
    return canonical(a * b);
}

mpq_class FieldSpec::neg(const mpq_class& a) const { return canonical(-a); }

mpq_class FieldSpec::inverse(const mpq_class& a) const {
    mpq_class c = canonical(a);
    if (c == 0) throw ZeroInverseError("inverse of zero");
    if (p_ == 0) return canonical(mpq_class(c.get_den(), c.get_num()));
    return mpq_class(euclid_inverse(c.get_num().get_si(), p_));
}

mpq_class FieldSpec::div(const mpq_class& a, const mpq_class& b) const {
    return mul(a, inverse(b));
}

std::string FieldSpec::describe() const {
    return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

}  // namespace matwork
