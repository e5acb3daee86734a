#pragma once

#include <vector>

#include "matwork/matroid.hpp"

namespace matwork {

struct TropicalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatchError : TropicalError {
    using TropicalError::TropicalError;
};

/// Element of R union {-inf}; finite values are exact rationals so tie
/// decisions are exact.
struct TropValue {
    bool finite = false;
    mpq_class v = 0;  // meaningful only when finite

    static TropValue neg_inf() { return {}; }
    static TropValue of(mpq_class q) { return {true, std::move(q)}; }

    bool operator==(const TropValue& o) const {
        return finite == o.finite && (!finite || v == o.v);
    }
    bool operator<(const TropValue& o) const {
        if (!finite) return o.finite;
        if (!o.finite) return false;
        return v < o.v;
    }

    /// Classical addition lifted to the extended line: -inf absorbs.
    TropValue plus(const TropValue& o) const {
        if (!finite || !o.finite) return neg_inf();
        return of(v + o.v);
    }
};

struct TropPoint {
    std::vector<TropValue> coords;
};

struct TropTerm {
    std::vector<long> beta;  // exponent vector
    TropValue val;           // valuation of the coefficient
};

struct TropPolynomial {
    std::size_t n = 0;
    std::vector<TropTerm> terms;  // nonempty, distinct exponent vectors
};

struct TropEvalResult {
    TropValue value;
    std::size_t argmax_count;  // terms attaining the maximum
};

/// max over terms of <beta, xi> + val. When every term is -inf, all terms
/// count as attaining it.
TropEvalResult trop_eval(const TropPolynomial& p, const TropPoint& xi);

/// Tropical vanishing: the maximum is attained at least twice, or is -inf.
bool vanishes(const TropPolynomial& p, const TropPoint& xi);

/// Points where, on every circuit, the coordinate maximum is attained at
/// least twice (or the circuit coordinates are all -inf).
struct TropLinearSpace {
    std::size_t n = 0;
    std::vector<Subset> circuits;
};

/// The circuit description works for every matroid, realizable or not.
TropLinearSpace tropical_linear_space(const Matroid& m);

bool member(const TropLinearSpace& t, const TropPoint& xi);

}  // namespace matwork
