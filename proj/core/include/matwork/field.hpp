#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace matwork {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPrimeError : FieldError {
    using FieldError::FieldError;
};
struct ZeroInverseError : FieldError {
    using FieldError::FieldError;
};

/// A coefficient field: the rationals, or a prime field F_p with p < 2^31.
///
/// Elements of either field are carried as mpq_class values. Rationals are
/// kept in lowest terms with positive denominator (mpq canonical form);
/// F_p elements are integer residues in [0, p).
class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(0); }

    /// Throws NotPrimeError unless p is a prime below 2^31.
    static FieldSpec prime_field(std::int64_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    /// The prime p, or 0 for the rationals.
    std::int64_t characteristic() const { return p_; }

    /// Canonical representative of v: reduced rational, or residue in [0, p).
    /// A rational with denominator not invertible mod p is rejected.
    mpq_class canonical(const mpq_class& v) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;

    /// Multiplicative inverse; throws ZeroInverseError on 0.
    /// F_p inverses go through the extended Euclidean algorithm.
    mpq_class inverse(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;

    bool operator==(const FieldSpec&) const = default;

    std::string describe() const;

  private:
    explicit FieldSpec(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

}  // namespace matwork
