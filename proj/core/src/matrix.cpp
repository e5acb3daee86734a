#include "matwork/matrix.hpp"

#include <algorithm>

namespace matwork {

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, mpq_class(0)) {}

ExactMatrix::ExactMatrix(FieldSpec field, std::vector<std::vector<mpq_class>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw SizeMismatchError("ragged matrix rows");
        for (const auto& v : r) e_.push_back(field_.canonical(v));
    }
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
    return m;
}

const mpq_class& ExactMatrix::at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
}

void ExactMatrix::set(std::size_t i, std::size_t j, const mpq_class& v) {
    e_[i * cols_ + j] = field_.canonical(v);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw SizeMismatchError("matrix product shape mismatch");
    ExactMatrix p(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                p.e_[i * rhs.cols_ + j] += aik * rhs.at(k, j);
        }
    for (auto& v : p.e_) v = field_.canonical(v);
    return p;
}

std::vector<mpq_class> ExactMatrix::apply(const std::vector<mpq_class>& x) const {
    if (x.size() != cols_) throw SizeMismatchError("vector length mismatch");
    std::vector<mpq_class> y(rows_, mpq_class(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
        y[i] = field_.canonical(y[i]);
    }
    return y;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    ExactMatrix s(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.e_[i * cols_ + j] = at(idx[i], j);
    return s;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

RrefResult rref(const ExactMatrix& a) {
    const FieldSpec& f = a.field();
    ExactMatrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t i = pivot_row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                mpq_class tmp = m.at(sel, j);
                m.set(sel, j, m.at(pivot_row, j));
                m.set(pivot_row, j, tmp);
            }
        mpq_class inv = f.inverse(m.at(pivot_row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m.set(pivot_row, j, f.mul(m.at(pivot_row, j), inv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col) == 0) continue;
            mpq_class factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(pivot_row, j))));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(m), pivots.size(), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& a) { return rref(a).rank; }

SolutionSet solve(const ExactMatrix& a, const std::vector<mpq_class>& c) {
    if (c.size() != a.rows()) throw SizeMismatchError("rhs length mismatch");
    const FieldSpec& f = a.field();
    ExactMatrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols(), c[i]);
    }
    RrefResult r = rref(aug);
    // An equation 0 = c' with c' != 0 shows up as a pivot in the last column.
    for (std::size_t p : r.pivot_cols)
        if (p == a.cols()) return {false, {}, {}};

    std::vector<mpq_class> particular(a.cols(), mpq_class(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        particular[r.pivot_cols[i]] = r.reduced.at(i, a.cols());
    return {true, std::move(particular), kernel_basis(a)};
}

std::vector<std::vector<mpq_class>> kernel_basis(const ExactMatrix& a) {
    const FieldSpec& f = a.field();
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(a.cols(), mpq_class(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = f.neg(r.reduced.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

void permutation_sum_rec(const ExactMatrix& a, std::size_t row, std::vector<bool>& used,
                         std::vector<std::size_t>& images, mpq_class& acc) {
    const std::size_t n = a.rows();
    if (row == n) {
        Permutation sigma{images};
        mpq_class term = permutation_sign(sigma);
        for (std::size_t i = 0; i < n; ++i) term *= a.at(i, images[i]);
        acc += term;
        return;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (used[j] || a.at(row, j) == 0) continue;
        used[j] = true;
        images[row] = j;
        permutation_sum_rec(a, row + 1, used, images, acc);
        used[j] = false;
    }
}

}  // namespace

mpq_class det_permutation_sum(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw NotSquareError("determinant of non-square matrix");
    if (a.rows() > 10) throw TooLargeError("permutation-sum determinant capped at N = 10");
    mpq_class acc = 0;
    std::vector<bool> used(a.rows(), false);
    std::vector<std::size_t> images(a.rows(), 0);
    permutation_sum_rec(a, 0, used, images, acc);
    return a.field().canonical(acc);
}

mpq_class det_elimination(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw NotSquareError("determinant of non-square matrix");
    const FieldSpec& f = a.field();
    ExactMatrix m = a;
    const std::size_t n = m.rows();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = n;
        for (std::size_t i = col; i < n; ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == n) return mpq_class(0);
        if (sel != col) {
            det = -det;
            for (std::size_t j = 0; j < n; ++j) {
                mpq_class tmp = m.at(sel, j);
                m.set(sel, j, m.at(col, j));
                m.set(col, j, tmp);
            }
        }
        det = f.mul(det, m.at(col, col));
        mpq_class inv = f.inverse(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0) continue;
            mpq_class factor = f.mul(m.at(i, col), inv);
            for (std::size_t j = col; j < n; ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(col, j))));
        }
    }
    return f.canonical(det);
}

Permutation Permutation::of(std::vector<std::size_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (std::size_t v : images) {
        if (v >= images.size() || seen[v]) throw MatrixError("not a bijection");
        seen[v] = true;
    }
    return Permutation{std::move(images)};
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (images.size() != inner.images.size()) throw MatrixError("size mismatch");
    std::vector<std::size_t> out(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) out[i] = images[inner.images[i]];
    return Permutation{std::move(out)};
}

int permutation_sign(const Permutation& sigma) {
    int inversions = 0;
    const auto& s = sigma.images;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace matwork
