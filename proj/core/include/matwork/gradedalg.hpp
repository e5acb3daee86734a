#pragma once

#include <cstdint>
#include <vector>

#include "matwork/matrix.hpp"

namespace matwork {

struct GradedAlgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WeightedDegreesError : GradedAlgError {
    using GradedAlgError::GradedAlgError;
};

/// Quotient F[x_1..x_N] / (x_i^{m_i + 1}) graded by weighted total degree.
struct MonomialAlgebraSpec {
    std::vector<int> caps;     // m_i
    std::vector<int> degrees;  // deg x_i > 0

    MonomialAlgebraSpec(std::vector<int> caps_, std::vector<int> degrees_);

    std::size_t vars() const { return caps.size(); }
    long topdeg() const;
    bool unit_degrees() const;
};

/// Exponent vectors (0 <= e_i <= m_i) of weighted degree k, lexicographically
/// sorted so downstream matrices are reproducible.
std::vector<std::vector<int>> monomial_basis(const MonomialAlgebraSpec& spec, long k);

/// dims[k] = number of surviving monomials of weighted degree k, for
/// k = 0..topdeg. Bounded-coin dynamic programming; guarded at topdeg <= 10^6.
std::vector<std::uint64_t> graded_dims(const MonomialAlgebraSpec& spec);

/// Matrix over Q of multiplication by omega = sum x_i from degree k to k + 1.
/// Requires all degrees equal to 1.
ExactMatrix omega_matrix(const MonomialAlgebraSpec& spec, long from_deg);

struct HlpLevel {
    long i;
    std::uint64_t dim_low;
    std::uint64_t dim_high;
    bool isomorphism;
};

struct HlpReport {
    std::vector<HlpLevel> levels;
    bool pass() const;
};

/// Checks that omega^{topdeg - 2i} is an isomorphism from degree i to
/// degree topdeg - i for every i < topdeg / 2. Unit degrees only; guarded at
/// topdeg <= 24 and total basis size <= 10^5.
HlpReport hlp_check(const MonomialAlgebraSpec& spec);

bool palindrome_check(const MonomialAlgebraSpec& spec);

/// Weak increase to a peak, then weak decrease.
bool unimodal_check(const std::vector<std::uint64_t>& dims);

}  // namespace matwork
