#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matwork/field.hpp"

namespace matwork {

struct MatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSquareError : MatrixError {
    using MatrixError::MatrixError;
};
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeMismatchError : MatrixError {
    using MatrixError::MatrixError;
};

/// Dense matrix with exact entries over a FieldSpec field.
/// Entries are stored row-major and kept canonical at all times.
class ExactMatrix {
  public:
    ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
    ExactMatrix(FieldSpec field, std::vector<std::vector<mpq_class>> rows);

    static ExactMatrix identity(FieldSpec field, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpq_class& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const mpq_class& v);

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    std::vector<mpq_class> apply(const std::vector<mpq_class>& x) const;

    /// Submatrix keeping the given rows (in the given order), all columns.
    ExactMatrix select_rows(const std::vector<std::size_t>& idx) const;

    bool operator==(const ExactMatrix& rhs) const;

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<mpq_class> e_;
};

struct RrefResult {
    ExactMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form via Gauss-Jordan elimination. Pivot choice is the
/// first nonzero entry scanning top to bottom in the current column.
RrefResult rref(const ExactMatrix& a);

std::size_t rank(const ExactMatrix& a);

struct SolutionSet {
    bool solvable;
    std::vector<mpq_class> particular;                // empty when unsolvable
    std::vector<std::vector<mpq_class>> kernel_basis; // cols - rank vectors
};

/// Solve A x = c exactly. Inconsistency is reported as solvable = false.
SolutionSet solve(const ExactMatrix& a, const std::vector<mpq_class>& c);

/// Basis of {v : A v = 0}; exactly cols - rank vectors.
std::vector<std::vector<mpq_class>> kernel_basis(const ExactMatrix& a);

/// Determinant as the signed sum over all permutations. Guarded to N <= 10.
mpq_class det_permutation_sum(const ExactMatrix& a);

/// Determinant by fraction-free-style Gaussian elimination; the production path.
mpq_class det_elimination(const ExactMatrix& a);

struct Permutation {
    std::vector<std::size_t> images;  // images[i] = sigma(i)

    /// Throws MatrixError unless images is a bijection of {0..N-1}.
    static Permutation of(std::vector<std::size_t> images);

    Permutation compose(const Permutation& inner) const;  // this after inner
};

/// (-1)^(number of inversions).
int permutation_sign(const Permutation& sigma);

}  // namespace matwork
