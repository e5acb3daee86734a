#include "matwork/mobius.hpp"

#include <algorithm>

namespace matwork {

bool GradedElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) { return c == 0; });
}

OmegaWeights OmegaWeights::unit(std::size_t atoms) {
    return OmegaWeights{std::vector<mpq_class>(atoms, mpq_class(1))};
}

OmegaWeights OmegaWeights::of(std::vector<mpq_class> c) {
    for (const auto& w : c)
        if (w <= 0) throw WeightNotPositiveError("omega weights must be positive");
    return OmegaWeights{std::move(c)};
}

MobiusAlgebra MobiusAlgebra::build(const Matroid& m) {
    if (m.n() > 20) throw TooLargeError("Mobius algebra capped at n = 20");
    MobiusAlgebra a(m);
    a.lattice();  // force flat enumeration up front
    return a;
}

GradedElement MobiusAlgebra::zero(int degree) const {
    const auto& lat = lattice();
    std::size_t dim = degree <= top_rank() && degree >= 0 ? lat.of_rank(degree).size() : 0;
    return GradedElement{degree, std::vector<mpq_class>(dim, mpq_class(0))};
}

GradedElement MobiusAlgebra::basis(const Flat& f) const {
    GradedElement e = zero(f.rank);
    e.coeffs[lattice().index_in_rank(f.members)] = 1;
    return e;
}

GradedElement MobiusAlgebra::multiply_basis(const Flat& f, const Flat& g) const {
    GradedElement out = zero(f.rank + g.rank);
    Flat j = matroid_.join(f, g);
    if (j.rank == f.rank + g.rank)
        out.coeffs[lattice().index_in_rank(j.members)] = 1;
    return out;
}

GradedElement MobiusAlgebra::multiply(const GradedElement& u, const GradedElement& v) const {
    GradedElement out = zero(u.degree + v.degree);
    if (u.degree + v.degree > top_rank()) return out;
    const auto& left = lattice().of_rank(u.degree);
    const auto& right = lattice().of_rank(v.degree);
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (u.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (v.coeffs[j] == 0) continue;
            Flat jf = matroid_.join(left[i], right[j]);
            if (jf.rank != u.degree + v.degree) continue;
            mpq_class& slot = out.coeffs[lattice().index_in_rank(jf.members)];
            slot += u.coeffs[i] * v.coeffs[j];
            slot.canonicalize();
        }
    }
    return out;
}

GradedElement MobiusAlgebra::omega(const OmegaWeights& w) const {
    const auto& atoms = lattice().of_rank(1);
    if (w.c.size() != atoms.size())
        throw MobiusError("weight vector length must match the number of rank-1 flats");
    for (const auto& c : w.c)
        if (c <= 0) throw WeightNotPositiveError("omega weights must be positive");
    return GradedElement{1, w.c};
}

GradedElement MobiusAlgebra::omega() const {
    return omega(OmegaWeights::unit(lattice().of_rank(1).size()));
}

ExactMatrix MobiusAlgebra::omega_step_matrix(int r, const OmegaWeights& w) const {
    if (r < 0 || r + 1 > top_rank()) throw BadRanksError("omega step out of range");
    const auto& atoms = lattice().of_rank(1);
    const auto& lo = lattice().of_rank(r);
    const auto& hi = lattice().of_rank(r + 1);
    if (w.c.size() != atoms.size())
        throw MobiusError("weight vector length must match the number of rank-1 flats");
    ExactMatrix m(FieldSpec::rationals(), hi.size(), lo.size());
    for (std::size_t col = 0; col < lo.size(); ++col)
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            Flat j = matroid_.join(lo[col], atoms[a]);
            if (j.rank != r + 1) continue;
            std::size_t row = lattice().index_in_rank(j.members);
            m.set(row, col, m.at(row, col) + w.c[a]);
        }
    return m;
}

ExactMatrix MobiusAlgebra::omega_power_matrix(int r, int r_prime, const OmegaWeights& w) const {
    if (r < 0 || r > r_prime || r_prime > top_rank())
        throw BadRanksError("need 0 <= r <= r' <= rank(M)");
    ExactMatrix m = ExactMatrix::identity(FieldSpec::rationals(), lattice().of_rank(r).size());
    for (int k = r; k < r_prime; ++k) m = omega_step_matrix(k, w) * m;
    return m;
}

ExactMatrix MobiusAlgebra::omega_power_matrix(int r, int r_prime) const {
    return omega_power_matrix(r, r_prime, OmegaWeights::unit(lattice().of_rank(1).size()));
}

}  // namespace matwork
