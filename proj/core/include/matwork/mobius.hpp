#pragma once

#include <vector>

#include "matwork/matroid.hpp"

namespace matwork {

struct MobiusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WeightNotPositiveError : MobiusError {
    using MobiusError::MobiusError;
};
struct BadRanksError : MobiusError {
    using MobiusError::MobiusError;
};

/// Rational coefficients on the rank-r flats, in flat-lattice order.
struct GradedElement {
    int degree = 0;
    std::vector<mpq_class> coeffs;

    bool is_zero() const;
    bool operator==(const GradedElement&) const = default;
};

/// Positive rational weights on the rank-1 flats; scales the omega element.
struct OmegaWeights {
    std::vector<mpq_class> c;

    static OmegaWeights unit(std::size_t atoms);
    /// Throws WeightNotPositiveError unless every weight is > 0.
    static OmegaWeights of(std::vector<mpq_class> c);
};

/// The graded Mobius algebra of a matroid over Q: basis y_F indexed by flats,
/// graded by rank, y_F y_F' = y_{F join F'} when ranks add and 0 otherwise.
class MobiusAlgebra {
  public:
    static MobiusAlgebra build(const Matroid& m);

    const Matroid& matroid() const { return matroid_; }
    const FlatLattice& lattice() const { return matroid_.flats(); }
    int top_rank() const { return matroid_.rank_total(); }
    std::vector<std::size_t> graded_dims() const { return lattice().counts(); }

    GradedElement zero(int degree) const;
    GradedElement basis(const Flat& f) const;

    GradedElement multiply_basis(const Flat& f, const Flat& g) const;
    GradedElement multiply(const GradedElement& u, const GradedElement& v) const;

    GradedElement omega(const OmegaWeights& w) const;
    GradedElement omega() const;  // unit weights

    /// Matrix of multiplication by omega^{r' - r} from the degree-r basis to
    /// the degree-r' basis; rows indexed by rank-r' flats, columns by rank-r
    /// flats, both in flat-lattice order.
    ExactMatrix omega_power_matrix(int r, int r_prime, const OmegaWeights& w) const;
    ExactMatrix omega_power_matrix(int r, int r_prime) const;

    /// One step r -> r + 1; powers are composed from these.
    ExactMatrix omega_step_matrix(int r, const OmegaWeights& w) const;

  private:
    explicit MobiusAlgebra(Matroid m) : matroid_(std::move(m)) {}
    Matroid matroid_;
};

}  // namespace matwork
